#include <random>

#include "bethck/closure.hpp"
#include "bethck/mutation.hpp"
#include "bethck/world.hpp"
#include "doctest.h"
#include "oracle.hpp"

using bethck::Nat;
using bethck::UPSet;

namespace {

UPSet res(Nat r, Nat m) { return UPSet::from_residue(r, m); }

// Exact equality on [0, n) against an oracle bit vector.
bool same_prefix(const UPSet& s, const oracle::Bits& bits) { return oracle::bits_of(s, bits.size()) == bits; }

}  // namespace

TEST_CASE("gamma") {
  CHECK(bethck::gamma(0) == 1);
  CHECK(bethck::gamma(4) == 4);
  CHECK(bethck::gamma(2) == 7);
  for (Nat n = 0; n < 1000; ++n) CHECK(bethck::gamma(n) == oracle::gamma_def(n));
}

TEST_CASE("companion against brute-force closures") {
  CHECK(bethck::companion(0) == 1);
  CHECK(bethck::companion(1) == 0);
  CHECK(bethck::companion(13) == 13);
  CHECK(bethck::companion(7) == 2);
  CHECK(oracle::brute_companion(13) == 13);
  CHECK(oracle::brute_companion(7) == 2);
  for (Nat n = 0; n < 3000; ++n) REQUIRE(bethck::companion(n) == oracle::brute_companion(n));
}

TEST_CASE("companion residue rule mod 9") {
  for (Nat n = 0; n < 900; ++n) {
    const Nat r = n % 9;
    const Nat expect = (r == 1 || r == 7) ? (n - 1) / 3 : r == 4 ? n : 3 * n + 1;
    REQUIRE(oracle::brute_companion(n) == expect);
  }
}

TEST_CASE("self-companions") {
  const Nat n = 10000;
  oracle::Bits fixed(n);
  for (Nat k = 0; k < n; ++k) fixed[k] = oracle::brute_companion(k) == k;
  CHECK(same_prefix(bethck::n0_set(), fixed));
  CHECK(bethck::n0_set() == res(4, 9));
  CHECK(bethck::n0_set().contains(4));
  CHECK_FALSE(bethck::n0_set().contains(1));
}

TEST_CASE("closure of 3N+2") {
  const Nat n = 10000;
  const auto& g = oracle::graph(3 * n + 2);
  const auto cl = g.closure(oracle::residue_bits(2, 3, 3 * n + 2));
  CHECK(same_prefix(bethck::closure(res(2, 3)), oracle::Bits(cl.begin(), cl.begin() + n)));
  CHECK(bethck::closure(res(2, 3)) == (res(2, 3) | res(7, 9)));
  CHECK(bethck::cl_minus(res(2, 3)) == res(7, 9));
}

TEST_CASE("closedness") {
  const auto v1 = res(0, 3) | res(1, 9) | res(4, 9);
  CHECK(bethck::is_closed(v1));
  CHECK(bethck::is_closed(~v1));
  CHECK(bethck::cl_minus(UPSet::from_finite({0, 1})).empty());
  CHECK_FALSE(bethck::is_closed(UPSet::from_finite({2})));
  CHECK(bethck::closure(UPSet::from_finite({2})) == UPSet::from_finite({2, 7}));
}

TEST_CASE("closure operators on random sets against the oracle") {
  std::mt19937_64 rng(3);
  const Nat n = 500;
  for (int i = 0; i < 200; ++i) {
    const auto x = bethck::random_upset(rng, 40, 18);
    const auto wide = oracle::bits_of(x, 3 * n + 2);
    const auto cl = oracle::graph(3 * n + 2).closure(wide);
    oracle::Bits want_cl(n), want_minus(n), want_gi(n), want_gp(n);
    for (Nat k = 0; k < n; ++k) {
      want_cl[k] = cl[k];
      want_minus[k] = cl[k] && !wide[k];
      want_gp[k] = wide[oracle::gamma_def(k)];
    }
    for (Nat k = 0; k < 3 * n + 2; ++k)
      if (wide[k] && oracle::gamma_def(k) < n) want_gi[oracle::gamma_def(k)] = true;
    REQUIRE(same_prefix(bethck::closure(x), want_cl));
    REQUIRE(same_prefix(bethck::cl_minus(x), want_minus));
    REQUIRE(same_prefix(bethck::gamma_image(x), want_gi));
    REQUIRE(same_prefix(bethck::gamma_preimage(x), want_gp));
    CHECK(bethck::is_closed(x) == (bethck::closure(x) == x));
  }
}

TEST_CASE("lemma items on worked instances") {
  CHECK(bethck::lemma1_check(4, UPSet(), 7));
  CHECK(bethck::cl_minus(UPSet::from_finite({0, 5})) == UPSet::from_finite({1, 16}));
  CHECK(bethck::lemma1_check(7, UPSet::from_finite({0, 5}), 0));
  CHECK(bethck::lemma1_check(8, bethck::base_v().a, 0));
  for (int id = 1; id <= 8; ++id)
    for (Nat n = 0; n < 2000; ++n) REQUIRE(bethck::lemma1_pointwise(id, n));
}

TEST_CASE("items 3 and 7 need their hypothesis") {
  // Cl^-(N) is empty, hence finite, while N is not; and Cl^-({1}) = {0}.
  CHECK_FALSE(bethck::lemma1_check(3, UPSet::naturals(), 0));
  CHECK_FALSE(bethck::lemma1_check(7, UPSet::from_finite({1}), 0));
  CHECK(bethck::cl_minus(UPSet::from_finite({1})) == UPSet::from_finite({0}));
  std::mt19937_64 rng(8);
  const auto base = bethck::sets::three_n_or_plus_2();
  for (int i = 0; i < 100; ++i) {
    const auto x = bethck::random_upset(rng, 30, 9) & base;
    CHECK(bethck::lemma1_restricted_check(3, x, 0));
    CHECK(bethck::lemma1_restricted_check(7, x, 0));
  }
}

TEST_CASE("companion-rule mutant breaks the involution") {
  bethck::ScopedMutant guard(bethck::Mutant::companion_rule);
  CHECK(bethck::companion(7) != oracle::brute_companion(7));
  CHECK_FALSE(bethck::lemma1_pointwise(4, 2));
}
