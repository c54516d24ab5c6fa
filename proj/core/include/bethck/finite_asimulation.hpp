#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

#include "bethck/finite_model.hpp"
#include "bethck/report.hpp"

namespace bethck {

/// A point of one of two finite models: side 0 is the first model, 1 the second.
struct FinitePoint {
  int side = 0;
  int world = 0;
  std::vector<int> tuple;
  auto operator<=>(const FinitePoint&) const = default;
};

struct FinitePair {
  FinitePoint left;
  FinitePoint right;
  auto operator<=>(const FinitePair&) const = default;
};

using FiniteRelation = std::set<FinitePair>;

/// Checks the five asimulation conditions for z between m1 and m2, with tuples
/// of length at most max_len (element extension is required below max_len):
///  1. typing: opposite sides, equal lengths, valid worlds and elements;
///  2. P, Q, R true at a left position stay true at the right position;
///  3. (t,d) Z (u,e) and u <= v give w >= t with (v,e) Z (w,d) and (w,d) Z (v,e);
///  4. (t,d) Z (u,e) and any f give g with (t,df) Z (u,eg);
///  5. (t,d) Z (u,e) and any g give f with (t,df) Z (u,eg).
/// On failure `why` (when given) names the condition and the pair.
bool is_asimulation_finite(const FiniteCDModel& m1, const FiniteCDModel& m2, const FiniteRelation& z,
                           int max_len, std::string* why = nullptr);

/// The largest relation satisfying the five conditions (union of all of them),
/// in both orientations.
FiniteRelation maximal_asimulation(const FiniteCDModel& m1, const FiniteCDModel& m2, int max_len);

/// For every pair of z with at most two positions and every formula without s
/// of depth <= max(depth, 1) over variables x, y whose free variables are
/// bound by the pair (x to position 1, y to position 2): forced on the left
/// implies forced on the right. Truth tables are built bottom-up and sampled
/// against Evaluator as a cross-check.
Report transfer_oracle(const FiniteCDModel& m1, const FiniteCDModel& m2, const FiniteRelation& z,
                       int depth);

/// The fixed fixture family for the transfer sweep: seeded pairs of rooted
/// models with at most max_worlds worlds and max_domain elements (no s), plus
/// every model paired with itself for a seeded subset.
std::vector<std::pair<FiniteCDModel, FiniteCDModel>> transfer_fixture_family(int max_worlds,
                                                                             int max_domain,
                                                                             std::uint64_t seed,
                                                                             std::size_t pairs);

/// Runs maximal_asimulation (tuples up to 4) and transfer_oracle over the fixture family.
Report transfer_sweep(int max_worlds, int max_domain, int depth, std::uint64_t seed,
                      std::size_t pairs);

}  // namespace bethck
