#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "bethck/upset.hpp"

namespace bethck {

/// A world of the two infinite models: a triple (a, b, c) of subsets of N.
/// a drives Q, a u b drives P; c is the rest.
struct World {
  UPSet a;
  UPSet b;
  UPSet c;

  friend bool operator==(const World&, const World&) = default;
};

/// Pairwise disjoint, covering N, a and c infinite, b empty or infinite.
bool is_quasi_partition(const World& w);

/// v = (N \ Cl(3N+2), Cl^-(3N+2), 3N+2)
World base_v();
/// u = (v.a, {}, v.b u v.c)
World base_u();

/// The ordering: v.a subset of w.a and w.c subset of v.c.
bool leq(const World& v, const World& w);

/// Quasi-partition with v <= w, closed first component, second inside v.b.
bool in_U(const World& w);
inline bool in_W1(const World& w) { return in_U(w); }
bool in_W2(const World& w);

/// (N \ Cl(c), Cl^-(c), c). Every member of U has this shape.
/// Throws PreconditionError unless c is an infinite subset of 3N+2.
World u_world_from_third(const UPSet& c);

/// Random infinite subset of 3N+2 whose complement in 3N+2 is infinite:
/// a union of sub-residue classes with finitely many edits below ~size_budget.
UPSet random_third_component(std::mt19937_64& rng, Nat size_budget);

/// Deterministic in seed; always a member of U.
World random_u_world(std::uint64_t seed, Nat size_budget);

/// A random <=-successor of w inside the state set W2 (w itself allowed).
/// For u this ranges over u and all of U; for w in U over U-worlds whose third
/// component is a subset of w.c.
World random_successor(const World& w, std::mt19937_64& rng, Nat size_budget);

/// Evaluates item `id` (9..15) of the world lemma for w in W2. Items guarded by
/// membership in U evaluate the whole implication. Throws PreconditionError if
/// w is not in W2.
bool lemma2_check(int id, const World& w);

/// `world { a = ...; b = ...; c = ... }`, `uworld { c = ... }`, or the names `v` / `u`.
World parse_world_spec(std::string_view text);
/// Prints v, u, a `uworld { c = ... }` for U-worlds, or the full triple.
std::string world_spec(const World& w);

}  // namespace bethck
