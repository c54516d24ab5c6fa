#pragma once

#include "bethck/finite_model.hpp"
#include "bethck/report.hpp"

namespace bethck {

/// Over every finite model of T within the bounds:
///  (i) s is forced at a world iff some element is in P but not in Q there;
///  (ii) no two models of T agree on frame, domain and P, Q, R but differ on s.
/// Also counts, without failing, the worlds where s disagrees with the
/// candidate definitions
///   exists y. (P(y) & ~Q(y))                        (counter prefix theta0_)
///   forall x. exists y. (P(y) & (Q(y) -> R(x)))     (counter prefix theta_star_)
Report implicit_definability_suite(int max_worlds, int max_domain,
                                   FrameFamily family = FrameFamily::rooted);

}  // namespace bethck
