#include <fstream>
#include <random>
#include <sstream>

#include "bethck/closure.hpp"
#include "bethck/errors.hpp"
#include "bethck/finite_asimulation.hpp"
#include "bethck/mutation.hpp"
#include "bethck/zrelation.hpp"
#include "doctest.h"
#include "oracle.hpp"

using bethck::Nat;
using bethck::Side;
using bethck::UPSet;
using bethck::World;
using bethck::ZPair;
using bethck::ZPoint;

namespace {

ZPair pair(const World& l, std::vector<Nat> d, const World& r, std::vector<Nat> e) {
  return {{Side::m1, l, std::move(d)}, {Side::m2, r, std::move(e)}};
}

const World v = bethck::base_v();
const World u = bethck::base_u();

}  // namespace

TEST_CASE("membership") {
  CHECK(bethck::z_member(pair(v, {}, u, {})));
  CHECK(bethck::z_member(pair(v, {0, 1}, u, {3, 10})));
  const auto d1 = bethck::z_diagnose(pair(v, {0, 1}, u, {3, 4}));
  CHECK_FALSE(d1.member());
  CHECK_FALSE(d1.d);
  CHECK_FALSE(d1.c);  // 4 is a self-companion, 1 is not
  const auto d2 = bethck::z_diagnose(pair(v, {0, 1}, u, {3, 19}));
  CHECK_FALSE(d2.member());
  CHECK(d2.failed() == "d");
  {
    bethck::ScopedMutant guard(bethck::Mutant::drop_condition_d);
    CHECK(bethck::z_member(pair(v, {0, 1}, u, {3, 19})));
  }
  const ZPair same_side{{Side::m1, v, {}}, {Side::m1, v, {}}};
  CHECK_FALSE(bethck::z_member(same_side));
  CHECK_FALSE(bethck::z_member(pair(v, {0}, u, {})));
}

TEST_CASE("atomic preservation") {
  CHECK(bethck::atomic_preservation(pair(v, {0, 1}, u, {3, 10})));
  CHECK(bethck::atomic_preservation(pair(v, {}, u, {})));
  std::mt19937_64 rng(6);
  for (int i = 0; i < 40; ++i) {
    const auto p = bethck::random_member_pair(rng, 1 + i % 4);
    REQUIRE(bethck::z_member(p));
    CHECK(bethck::atomic_preservation(p));
  }
}

TEST_CASE("successor witness") {
  const World w1 = bethck::succ_witness(pair(v, {}, u, {}), v);
  CHECK(w1 == v);
  const ZPair up{{Side::m2, u, {}}, {Side::m1, v, {}}};
  REQUIRE(bethck::z_member(up));
  CHECK(bethck::succ_witness(up, v) == v);

  const World target = bethck::u_world_from_third(v.c - UPSet::from_finite({5}));
  const ZPair p = pair(v, {2}, u, {5});
  REQUIRE(bethck::z_member(p));
  REQUIRE(bethck::leq(u, target));
  const World w = bethck::succ_witness(p, target);
  CHECK(bethck::in_U(w));
  CHECK(bethck::leq(v, w));
  CHECK(w.c.contains(2) == target.c.contains(5));
  const ZPair there{{Side::m2, target, {5}}, {Side::m1, w, {2}}};
  CHECK(bethck::z_member(there));
  CHECK(bethck::z_member(there.swapped()));

  CHECK_THROWS_AS(bethck::succ_witness(pair(v, {0, 1}, u, {3, 4}), v), bethck::PreconditionError);
}

TEST_CASE("the K-without-J mutant is caught by the first claim") {
  bethck::ScopedMutant guard(bethck::Mutant::k_without_j);
  const World target = bethck::u_world_from_third(v.c - UPSet::from_finite({5}));
  try {
    bethck::succ_witness(pair(v, {2}, u, {5}), target);
    FAIL("expected a construction fault");
  } catch (const bethck::ConstructionFault& e) {
    CHECK(e.claim() == "claim1:disjoint");
  }
}

TEST_CASE("forth choices") {
  CHECK(bethck::forth_element(pair(v, {}, u, {}), 13) == 4);
  CHECK(bethck::forth_element(pair(v, {0}, u, {0}), 0) == 0);
}

TEST_CASE("forth from a companion when the right world is u") {
  // The prescribed g for f = 7 is the companion 16 of 5, but 16 lies in 9N+7,
  // which u puts in its third component while 7 sits in v's second.
  const ZPair p = pair(v, {2}, u, {5});
  REQUIRE(bethck::z_member(p));
  CHECK(bethck::companion(5) == 16);
  try {
    bethck::forth_element(p, 7);
    FAIL("expected a construction fault");
  } catch (const bethck::ConstructionFault& e) {
    CHECK(e.candidate() == 16);
  }
  for (Nat g = 0; g < 2000; ++g) CHECK_FALSE(bethck::z_member(p.extended(7, g)));
}

TEST_CASE("back choices") {
  CHECK(bethck::back_element(pair(v, {}, u, {}), 4) == 4);
  CHECK(bethck::back_element(pair(v, {}, u, {}), 3) == 2);
  const ZPair up{{Side::m2, u, {}}, {Side::m1, v, {}}};
  CHECK(bethck::back_element(up, 7) == 7);
}

TEST_CASE("back from 9N+7 when the right world is u has no answer") {
  const ZPair p = pair(v, {}, u, {});
  CHECK_THROWS_AS(bethck::back_element(p, 7), bethck::ConstructionFault);
  for (Nat f = 0; f < 2000; ++f) CHECK_FALSE(bethck::z_member(p.extended(f, 7)));
}

TEST_CASE("element classification") {
  using bethck::ElementCase;
  const std::vector<Nat> t{2, 3};
  CHECK(bethck::classify_element(t, 3) == ElementCase::in_tuple);
  CHECK(bethck::classify_element(t, 7) == ElementCase::companion_of_tuple);
  CHECK(bethck::classify_element(t, 13) == ElementCase::n0);
  CHECK(bethck::classify_element(t, 5) == ElementCase::three_n_or_plus_2);
  CHECK(bethck::classify_element(t, 16) == ElementCase::cl_minus);
  std::mt19937_64 rng(1);
  const auto probes = bethck::probe_elements(t, rng, 10);
  std::set<ElementCase> seen;
  for (Nat x : probes) seen.insert(bethck::classify_element(t, x));
  CHECK(seen.size() == 5);
}

TEST_CASE("zpair text round-trip") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 20; ++i) {
    const auto p = bethck::random_member_pair(rng, i % 4);
    CHECK(bethck::parse_zpair(bethck::zpair_text(p)) == p);
  }
  std::ifstream in(std::string(BETHCK_FIXTURES) + "/v_u_pair.zpair");
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(bethck::parse_zpair(ss.str()) == pair(v, {0, 1}, u, {3, 10}));
}

namespace {

bethck::FiniteRelation identity(const bethck::FiniteCDModel& m, int max_len) {
  bethck::FiniteRelation z;
  std::vector<std::vector<int>> tuples{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& t : tuples)
      if (static_cast<int>(t.size()) == len - 1)
        for (int a = 0; a < m.domain; ++a) {
          auto s = t;
          s.push_back(a);
          next.push_back(s);
        }
    tuples.insert(tuples.end(), next.begin(), next.end());
  }
  for (int w = 0; w < m.worlds; ++w)
    for (const auto& t : tuples) {
      z.insert(bethck::FinitePair{{0, w, t}, {1, w, t}});
      z.insert(bethck::FinitePair{{1, w, t}, {0, w, t}});
    }
  return z;
}

}  // namespace

TEST_CASE("finite asimulations") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 10; ++i) {
    const auto m = oracle::random_model(rng, 1 + i % 3, 1 + i % 2);
    const auto z = identity(m, 2);
    std::string why;
    CHECK_MESSAGE(bethck::is_asimulation_finite(m, m, z, 2, &why), why);
    CHECK(bethck::transfer_oracle(m, m, z, 2).pass);
    const auto big = bethck::maximal_asimulation(m, m, 2);
    for (const auto& p : z) CHECK(big.count(p) == 1);
    CHECK(bethck::is_asimulation_finite(m, m, big, 2));
  }
}

TEST_CASE("breaking atomic preservation") {
  const auto a = bethck::parse_model("model { worlds=1; dom=1; P[0]={0} }");
  const auto b = bethck::parse_model("model { worlds=1; dom=1 }");
  bethck::FiniteRelation z;
  z.insert(bethck::FinitePair{{0, 0, {0}}, {1, 0, {0}}});
  z.insert(bethck::FinitePair{{1, 0, {0}}, {0, 0, {0}}});
  std::string why;
  CHECK_FALSE(bethck::is_asimulation_finite(a, b, z, 1, &why));
  CHECK(why.find("2") != std::string::npos);
  const auto r = bethck::transfer_oracle(a, b, z, 1);
  CHECK_FALSE(r.pass);
  REQUIRE_FALSE(r.violations.empty());
  CHECK(r.violations.front().witness.find("P(x)") != std::string::npos);
}

TEST_CASE("transfer sweep on two-world models") {
  const auto r = bethck::transfer_sweep(2, 2, 2, 1, 16);
  CHECK(r.pass);
  CHECK(r.cases > 0);
}
