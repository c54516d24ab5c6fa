#pragma once

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "bethck/symbolic.hpp"
#include "bethck/world.hpp"

namespace bethck {

/// A world of one of the infinite models together with a tuple of elements.
struct ZPoint {
  Side side = Side::m1;
  World world;
  std::vector<Nat> tuple;

  friend bool operator==(const ZPoint&, const ZPoint&) = default;
};

/// Oriented pair; membership in Z is asked of left -> right.
struct ZPair {
  ZPoint left;
  ZPoint right;

  ZPair swapped() const { return {right, left}; }
  ZPair extended(Nat f, Nat g) const;
  std::size_t size() const { return left.tuple.size(); }

  friend bool operator==(const ZPair&, const ZPair&) = default;
};

/// Which defining conditions of Z hold for a pair. Conditions are named after
/// their letters: (a) the tuple correspondence is a bijection, (b) same side of
/// 3N u 3N+2, (c) same side of N0, (d) same companion pattern, (e) left first
/// component goes into the right first component, (f) left second component
/// goes into the right first or second component.
struct ZDiagnosis {
  bool typing = true;
  bool a = true, b = true, c = true, d = true, e = true, f = true;
  std::string first_failure;  // "" when every condition holds

  bool member() const { return typing && a && b && c && d && e && f; }
  std::string failed() const;  // e.g. "c,d"
};

ZDiagnosis z_diagnose(const ZPair& p);
/// Z membership; honours the drop-condition-d mutant.
bool z_member(const ZPair& p);

/// For each tuple position and each of P, Q, R: true on the left implies true on the right.
bool atomic_preservation(const ZPair& p);

/// Position of x relative to a tuple, following the case split of the element
/// constructors.
enum class ElementCase { in_tuple, companion_of_tuple, n0, three_n_or_plus_2, cl_minus };
ElementCase classify_element(const std::vector<Nat>& tuple, Nat x);
const char* element_case_name(ElementCase c);

/// Given p in Z with right world u and a successor v of u (a state on the
/// right side), builds w = (J, K, L) on the left side with t <= w such that
/// both (v, e) Z (w, d) and (w, d) Z (v, e) hold. Every claim is re-checked;
/// a failure throws ConstructionFault naming it ("claim1:disjoint",
/// "claim1:in_U", "claim2:leq", "claim3:swapped", "claim3:converse",
/// "canonical-form"). PreconditionError if p is not in Z or v is not a
/// successor of u.
World succ_witness(const ZPair& p, const World& v);

/// An element g with p.extended(f, g) in Z, chosen by the case split on f
/// (least element wherever several would do). ConstructionFault with the
/// candidate when the result fails Z.
Nat forth_element(const ZPair& p, Nat f);
/// An element f with p.extended(f, g) in Z, chosen by the case split on g.
Nat back_element(const ZPair& p, Nat g);

/// `zpair { left = (m1, <world-spec>, [d...]); right = (m2, <world-spec>, [e...]) }`
ZPair parse_zpair(std::string_view text);
std::string zpair_text(const ZPair& p);

/// A random member of Z with the given tuple length. Worlds are random
/// U-worlds, v, or u (u only on the m2 side); the left side is m1 or m2 with
/// equal odds. Tuples grow one matched position at a time by rejection
/// sampling against z_member, so this does not use the element constructors.
ZPair random_member_pair(std::mt19937_64& rng, std::size_t tuple_len);

/// Probe elements for the element constructors: tuple members, companions of
/// tuple members, and fresh elements of each class, up to count (>= 10 covers
/// every case reachable for the tuple).
std::vector<Nat> probe_elements(const std::vector<Nat>& tuple, std::mt19937_64& rng,
                                std::size_t count);

}  // namespace bethck
