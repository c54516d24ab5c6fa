#include <random>

#include "bethck/errors.hpp"
#include "bethck/upset.hpp"
#include "bethck/upset_expr.hpp"
#include "doctest.h"
#include "oracle.hpp"

using bethck::Nat;
using bethck::UPSet;

TEST_CASE("residue classes and finite sets") {
  const auto s = UPSet::from_residue(2, 3);
  CHECK(s.contains(5));
  CHECK_FALSE(s.contains(6));
  CHECK(UPSet::from_finite({}).empty());
  const auto t = UPSet::from_residue(4, 9);
  CHECK(t.elements_below(23) == std::vector<Nat>{4, 13, 22});
  CHECK_THROWS_AS(UPSet::from_residue(3, 3), bethck::PreconditionError);
}

TEST_CASE("refinement and complements") {
  const auto r9 = [](Nat r) { return UPSet::from_residue(r, 9); };
  CHECK(UPSet::from_residue(1, 3) == (r9(1) | r9(4) | r9(7)));
  CHECK((~UPSet::from_residue(2, 3) & UPSet::from_residue(2, 3)).empty());
  CHECK((~UPSet::empty_set()) == UPSet::naturals());
}

TEST_CASE("least of 9N+7 without 7") {
  const auto s = UPSet::from_residue(7, 9) - UPSet::from_finite({7});
  Nat expected = 0;
  const auto bits = oracle::bits_of(s, 1001);
  while (!bits[expected]) ++expected;
  CHECK(expected == 16);
  CHECK(s.least() == expected);
}

TEST_CASE("size, nth and exhaustion") {
  const auto f = UPSet::from_finite({3, 9, 1});
  CHECK(f.finite());
  CHECK(f.size() == 3);
  CHECK(f.nth(0) == 1);
  CHECK(f.nth(2) == 9);
  CHECK_THROWS_AS(f.nth(3), bethck::ExhaustedError);
  CHECK(UPSet::from_residue(1, 4).nth(10) == 41);
  CHECK_FALSE(UPSet::naturals().size().has_value());
  CHECK_FALSE(UPSet::empty_set().least().has_value());
}

TEST_CASE("canonical form makes equality structural") {
  const auto a = UPSet::from_residue(0, 2) | UPSet::from_residue(1, 4) | UPSet::from_residue(3, 4);
  CHECK(a == UPSet::naturals());
  CHECK(a.period() == 1);
  const auto b = UPSet::from_bits({true, false, true, false}, {true, false});
  CHECK(b == UPSet::from_residue(0, 2));
  CHECK(b.threshold() == 0);
}

TEST_CASE("boolean operations agree with bit vectors") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const auto x = bethck::random_upset(rng, 20, 12);
    const auto y = bethck::random_upset(rng, 20, 12);
    const Nat n = 400;
    const auto bx = oracle::bits_of(x, n), by = oracle::bits_of(y, n);
    const auto bu = oracle::bits_of(x | y, n), bi = oracle::bits_of(x & y, n), bd = oracle::bits_of(x - y, n),
               bc = oracle::bits_of(~x, n);
    bool sub = true, meet = false;
    for (Nat k = 0; k < n; ++k) {
      REQUIRE(bu[k] == (bx[k] || by[k]));
      REQUIRE(bi[k] == (bx[k] && by[k]));
      REQUIRE(bd[k] == (bx[k] && !by[k]));
      REQUIRE(bc[k] == !bx[k]);
      sub = sub && (!bx[k] || by[k]);
      meet = meet || (bx[k] && by[k]);
    }
    // Both sets are periodic from 20 on with period dividing lcm <= 132,
    // so [0, 400) decides inclusion and overlap.
    CHECK(x.subset_of(y) == sub);
    CHECK(x.intersects(y) == meet);
  }
}

TEST_CASE("printing round-trips through the expression parser") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto x = bethck::random_upset(rng, 30, 10);
    CHECK(bethck::parse_upset_expr(x.to_string()) == x);
  }
}

TEST_CASE("expression parser") {
  using bethck::parse_upset_expr;
  CHECK(parse_upset_expr("res(1 mod 3) \\ fin{1}") == (UPSet::from_residue(1, 3) - UPSet::from_finite({1})));
  CHECK(parse_upset_expr("~none") == UPSet::naturals());
  CHECK(parse_upset_expr("res(0 mod 2) | res(1 mod 2) & none") == UPSet::from_residue(0, 2));
  CHECK(parse_upset_expr("N0") == UPSet::from_residue(4, 9));
  CHECK_THROWS_AS(parse_upset_expr("res(3 mod 3)"), bethck::ParseError);
  CHECK_THROWS_AS(parse_upset_expr("res(1 mod 3"), bethck::ParseError);
  CHECK_THROWS_AS(parse_upset_expr("all all"), bethck::ParseError);
  CHECK_THROWS_AS(parse_upset_expr("cl(fin{1,}"), bethck::ParseError);
}

TEST_CASE("random expressions agree with the bitset oracle") {
  std::mt19937_64 rng(2024);
  const Nat n = 3000;
  for (int i = 0; i < 150; ++i) {
    const auto e = oracle::random_expr(rng, 4);
    INFO(e->text());
    const auto got = oracle::bits_of(bethck::parse_upset_expr(e->text()), n);
    REQUIRE(got == e->eval(n));
  }
}
