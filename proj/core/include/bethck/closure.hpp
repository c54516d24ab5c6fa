#pragma once

#include "bethck/natmap.hpp"
#include "bethck/upset.hpp"

namespace bethck {

/// 3n + 1 on 3N and 3N+2, identity on 3N+1.
Nat gamma(Nat n);
const NatMap& gamma_map();

/// The partner of n in its R-closure Cl({n}) (n itself when the closure is a
/// singleton). Closed form by residue mod 9:
///   0,2,3,5,6,8 -> 3n + 1;  1,7 -> (n - 1) / 3;  4 -> n.
/// Certified against a brute-force R-closure in the test suite.
const NatMap& companion_map();
Nat companion(Nat n);

/// {companion(n) | n in s}.
UPSet companion_image(const UPSet& s);
/// Least R-closed superset. Every R-component has at most two elements, so a
/// single companion step reaches the fixpoint.
UPSet closure(const UPSet& s);
/// closure(s) minus s.
UPSet cl_minus(const UPSet& s);
bool is_closed(const UPSet& s);

UPSet gamma_image(const UPSet& s);
UPSet gamma_preimage(const UPSet& s);

/// Self-companion naturals (= 9N + 4).
UPSet n0_set();

namespace sets {
UPSet three_n();          // 3N
UPSet three_n_plus_1();   // 3N + 1
UPSet three_n_plus_2();   // 3N + 2
UPSet three_n_or_plus_2();  // 3N u (3N + 2)
}  // namespace sets

/// Evaluates item `id` (1..8) of the closure-arithmetic lemma literally, at
/// set level for x (and at point n for the point items 4, 5, 6).
/// Items 3 and 7 are false for some x as written (x = N, resp. x = {1});
/// see lemma1_restricted_check for the form the rest of the argument uses.
bool lemma1_check(int id, const UPSet& x, Nat n);

/// Item 3 and 7 evaluated under the hypothesis x subset of 3N u (3N+2);
/// other ids fall through to lemma1_check.
bool lemma1_restricted_check(int id, const UPSet& x, Nat n);

/// Point-level instance of item `id` at n, avoiding set construction so it
/// can be swept over large ranges.
bool lemma1_pointwise(int id, Nat n);

}  // namespace bethck
