#include <fstream>
#include <random>
#include <sstream>

#include "bethck/closure.hpp"
#include "bethck/definability.hpp"
#include "bethck/errors.hpp"
#include "bethck/finite_model.hpp"
#include "bethck/symbolic.hpp"
#include "doctest.h"
#include "oracle.hpp"

using bethck::FiniteCDModel;
using bethck::Formula;
using bethck::Pred;

namespace {

FiniteCDModel one_world(bool s) {
  return bethck::parse_model(s ? "model { worlds=1; dom=1; P[0]={0}; s={0} }" : "model { worlds=1; dom=1; P[0]={0} }");
}

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(BETHCK_FIXTURES) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("forcing on the one-world model") {
  const auto& t = bethck::theory_T();
  CHECK(bethck::forces(one_world(true), 0, t.conjunction()));
  CHECK_FALSE(bethck::forces(one_world(false), 0, t[2]));
  CHECK(bethck::forces(one_world(false), 0, Formula::imp(Formula::bottom(), Formula::atom(Pred::Q, "x")), {{"x", 0}}));
  CHECK_THROWS_AS(bethck::forces(one_world(true), 0, bethck::parse_formula("P(x)")), bethck::UnboundVariableError);
  CHECK_THROWS_AS(bethck::forces(one_world(true), 1, Formula::s()), bethck::PreconditionError);
  CHECK(bethck::models_T(one_world(true)));
  CHECK_FALSE(bethck::models_T(one_world(false)));
}

TEST_CASE("evaluator agrees with the textbook clauses") {
  std::mt19937_64 rng(77);
  const auto fs = bethck::enumerate_formulas(3, 2, true);
  const std::vector<std::string> order{"x", "y"};
  for (int round = 0; round < 40; ++round) {
    const auto m = oracle::random_model(rng, 1 + round % 4, 1 + round % 3);
    m.validate();
    for (std::size_t i = round; i < fs.size(); i += 211) {
      const bethck::Evaluator ev(fs[i], order);
      for (int x = 0; x < m.domain; ++x)
        for (int y = 0; y < m.domain; ++y) {
          const int vals[] = {x, y};
          const auto mask = ev.worlds(m, vals);
          CHECK(m.is_up_set(mask));  // persistence
          for (int w = 0; w < m.worlds; ++w) {
            std::map<std::string, int> env{{"x", x}, {"y", y}};
            REQUIRE(((mask >> w) & 1U) == oracle::naive_forces(m, w, fs[i], env));
          }
        }
    }
  }
}

TEST_CASE("frames") {
  using bethck::FrameFamily;
  // Posets with a least element on n points: 1, 1, 2, 5.
  CHECK(bethck::enumerate_frames(1, FrameFamily::rooted).size() == 1);
  CHECK(bethck::enumerate_frames(3, FrameFamily::rooted).size() == 1 + 1 + 2);
  CHECK(bethck::enumerate_frames(4, FrameFamily::rooted).size() == 1 + 1 + 2 + 5);
  // All partial orders on labeled points: 1, 3, 19.
  CHECK(bethck::enumerate_frames(3, FrameFamily::all_labeled).size() == 1 + 3 + 19);
  bethck::Frame chain{2, {0b11, 0b10}};
  CHECK(bethck::up_sets(chain) == std::vector<bethck::WorldMask>{0b00, 0b10, 0b11});
}

TEST_CASE("model counts") {
  // One world, one element: P, Q, R and s are each on or off.
  CHECK(bethck::enumerate_models(1, 1).size() == 16);
  // Two-chain, one element: three up-sets for each of P, Q, R, s.
  CHECK(bethck::enumerate_models(2, 1).size() == 16 + 81);
  std::size_t n = 0;
  bethck::for_each_model(2, 2, bethck::FrameFamily::rooted, [&](const FiniteCDModel&) { return ++n < 10; });
  CHECK(n == 10);
  CHECK(bethck::enumerate_models(1, 2, bethck::FrameFamily::rooted, false).size() == 1 * 8 + 64);
}

TEST_CASE("model text round-trip and validation") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 50; ++i) {
    const auto m = oracle::random_model(rng, 1 + i % 5, 1 + i % 4);
    CHECK(bethck::parse_model(bethck::model_text(m)) == m);
  }
  CHECK_THROWS_AS(bethck::parse_model("model { worlds=2; order={(0,1)}; dom=1; P[0]={0} }"),
                  bethck::PreconditionError);
  CHECK_THROWS_AS(bethck::parse_model("model { worlds=2; dom=1; P[3]={0} }"), bethck::ParseError);
  CHECK_THROWS_AS(bethck::parse_model("model { worlds=1 dom=1 }"), bethck::ParseError);
}

TEST_CASE("axiom three fails without Q or s above") {
  const auto m = bethck::parse_model("model { worlds=2; order={(0,1)}; dom=1; P[0]={0}; P[1]={0}; Q[0]={}; R[0]={} }");
  CHECK_FALSE(bethck::models_T(m));
}

TEST_CASE("constant-domain scheme holds in every small model") {
  // forall x. (phi | psi(x)) -> phi | forall x. psi(x), x not free in phi.
  std::vector<Formula> phis, psis;
  for (const auto& f : bethck::enumerate_formulas(2, 2, true)) {
    const auto fv = f.free_vars();
    if (fv.empty()) phis.push_back(f);
    if (fv == std::set<std::string>{"x"}) psis.push_back(f);
  }
  REQUIRE(phis.size() > 5);
  REQUIRE(psis.size() > 5);
  std::vector<bethck::Evaluator> scheme;
  for (const auto& phi : phis)
    for (const auto& psi : psis)
      scheme.emplace_back(Formula::imp(Formula::forall("x", Formula::disj(phi, psi)),
                                       Formula::disj(phi, Formula::forall("x", psi))));
  std::size_t models = 0;
  bethck::for_each_model(2, 2, bethck::FrameFamily::rooted, [&](const FiniteCDModel& m) {
    ++models;
    for (const auto& ev : scheme) REQUIRE(ev.worlds(m) == m.all_worlds());
    return true;
  });
  CHECK(models > 1000);
}

TEST_CASE("implicit definability on small models") {
  const auto r = bethck::implicit_definability_suite(2, 2);
  CHECK(r.pass);
  CHECK(r.counters.at("models_of_T") > 0);
  CHECK(r.counters.count("theta0_missing_where_s") == 0);

  // Rooted frames up to isomorphism see the same phenomena as all labeled frames.
  const auto rooted = bethck::implicit_definability_suite(3, 1, bethck::FrameFamily::rooted);
  const auto labeled = bethck::implicit_definability_suite(3, 1, bethck::FrameFamily::all_labeled);
  CHECK(rooted.pass);
  CHECK(labeled.pass);
  CHECK((rooted.counters.count("theta0_missing_where_s") > 0) ==
        (labeled.counters.count("theta0_missing_where_s") > 0));
  CHECK((rooted.counters.count("theta_star_disagreements") > 0) ==
        (labeled.counters.count("theta_star_disagreements") > 0));
}

TEST_CASE("a finite model of T where s holds but exists y. (P(y) & ~Q(y)) is not forced") {
  const auto m = bethck::parse_model(slurp("theta0_countermodel.model"));
  CHECK(bethck::models_T(m));
  CHECK(m.forces_s(0));
  CHECK_FALSE(bethck::forces(m, 0, bethck::parse_sentence("exists y. (P(y) & ~Q(y))")));
  CHECK(bethck::forces(m, 0, bethck::parse_sentence("forall x. exists y. (P(y) & (Q(y) -> R(x)))")));
}

TEST_CASE("atom extensions of the infinite models") {
  using bethck::Side;
  const auto v = bethck::base_v(), u = bethck::base_u();
  const auto at_v = bethck::atom_extensions(Side::m1, v);
  CHECK(at_v.s);
  CHECK(at_v.q == v.a);
  CHECK(at_v.p == (v.a | v.b));
  CHECK(at_v.r == bethck::gamma_preimage(v.a));
  CHECK_FALSE(bethck::atom_extensions(Side::m2, u).s);
  CHECK_THROWS_AS(bethck::atom_extensions(Side::m1, u), bethck::PreconditionError);
}

TEST_CASE("satisfaction certificates") {
  using bethck::Side;
  const auto v = bethck::base_v(), u = bethck::base_u();
  const auto su = bethck::sample_successors(Side::m2, u, 1, 20);
  CHECK(su.front() == u);
  const auto cu = bethck::cert_lsat(Side::m2, u, 3, su);
  CHECK(cu.pass);
  const auto sv = bethck::sample_successors(Side::m1, v, 1, 20);
  const auto cv = bethck::cert_lsat(Side::m1, v, 2, sv);
  CHECK(cv.pass);
  REQUIRE(cv.witness.has_value());
  CHECK(*cv.witness == 2);
  CHECK_FALSE(v.a.contains(bethck::gamma(*cv.witness)));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto w = bethck::random_u_world(seed, 200);
    const auto succ = bethck::sample_successors(Side::m1, w, seed, 20);
    for (int ax = 1; ax <= 3; ++ax) {
      const auto c = bethck::cert_lsat(Side::m1, w, ax, succ);
      INFO(ax);
      CHECK(c.pass);
      CHECK(c.successors_checked == succ.size());
    }
  }
}
