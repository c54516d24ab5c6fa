#pragma once

#include <cstdint>
#include <span>

#include "bethck/report.hpp"
#include "bethck/zrelation.hpp"

namespace bethck {

/// Closure-arithmetic lemma (items 1..8, set level on random sets and pointwise
/// for n <= pointwise_limit) and world lemma (items 9..15 on v, u and `samples`
/// generated U-worlds).
Report cmd_verify_lemmas(std::uint64_t seed, std::size_t samples,
                         Nat pointwise_limit = 1'000'000);

/// Certificates for the three axioms of T at v, u and `worlds` generated
/// U-worlds, each against `successors` sampled successors.
Report lsat_suite(std::uint64_t seed, std::size_t worlds, std::size_t successors);

/// Membership fixtures with known answers, then `samples` random members of Z
/// with tuple length up to tuple_len: atomic preservation, the consequences
/// of the definition, succ_witness on 5 successors, forth/back on 10 probes.
/// Extra pairs (e.g. read from fixture files) get the same battery first.
Report cmd_check_z(std::uint64_t seed, std::size_t samples, std::size_t tuple_len,
                   std::span<const ZPair> extra = {});

/// Implicit definability at (max_worlds, max_dom) and the transfer sweep at
/// the same bounds with formulas of the given depth.
Report cmd_finite_oracle(int max_worlds, int max_dom, int depth, std::uint64_t seed = 1,
                         std::size_t transfer_pairs = 120);

/// The end-to-end chain: s at v, not s at u, v and u related by Z with empty
/// tuples, certificates at v and u, and the successor of v that blocks the
/// classical definition exists y. (P(y) & ~Q(y)).
Report cmd_demo_beth_failure();

}  // namespace bethck
