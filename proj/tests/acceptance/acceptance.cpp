// One line per acceptance criterion; exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "bethck/closure.hpp"
#include "bethck/definability.hpp"
#include "bethck/finite_asimulation.hpp"
#include "bethck/mutation.hpp"
#include "bethck/suites.hpp"
#include "bethck/upset_expr.hpp"
#include "bethck/world.hpp"
#include "oracle.hpp"

namespace {

using bethck::Nat;
using bethck::Report;
using bethck::UPSet;

constexpr std::uint64_t kSeed = 20240601;

// Pinned thresholds.
constexpr int kExpressions = 1000;
constexpr Nat kExprRange = 100'000;
constexpr Nat kClosedFormRange = 10'000;
constexpr Nat kPointwise = 1'000'000;
constexpr std::size_t kWorlds = 200;
constexpr std::size_t kSuccessors = 20;
constexpr std::size_t kZPairs = 500;
constexpr std::size_t kTupleLen = 4;
constexpr double kLimitAc1 = 10, kLimitAc3 = 30, kLimitAc4 = 10, kLimitAc5 = 60, kLimitAc6 = 120,
                 kLimitAc7 = 600, kLimitAc8 = 10;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void run(const char* id, const char* name, double limit, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o = body();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit > 0 && secs >= limit) {
    o.pass = false;
    o.detail += "; over the time limit";
  }
  if (!o.pass) ++failures;
  if (limit > 0)
    std::printf("%s %-28s %s  %.2f s (limit %.0f s)  %s\n", id, name, o.pass ? "PASS" : "FAIL", secs, limit,
                o.detail.c_str());
  else
    std::printf("%s %-28s %s  %.2f s  %s\n", id, name, o.pass ? "PASS" : "FAIL", secs, o.detail.c_str());
  std::fflush(stdout);
}

std::string first_violation(const Report& r) {
  return r.violations.empty() ? "" : r.violations.front().check + ": " + r.violations.front().witness;
}

std::set<std::string> checks(const Report& r) {
  std::set<std::string> out;
  for (const auto& v : r.violations) out.insert(v.check);
  return out;
}

Outcome ac1() {
  std::mt19937_64 rng(kSeed);
  std::size_t mismatches = 0;
  std::string example;
  for (int i = 0; i < kExpressions; ++i) {
    const auto e = oracle::random_expr(rng, 4);
    const auto want = e->eval(kExprRange + 1);
    const auto got = bethck::parse_upset_expr(e->text());
    for (Nat n = 0; n <= kExprRange; ++n)
      if (got.contains(n) != want[n]) {
        if (mismatches++ == 0) example = e->text() + " at " + std::to_string(n);
        break;
      }
  }
  return {mismatches == 0, std::to_string(mismatches) + " mismatching expressions of " +
                               std::to_string(kExpressions) + " on 0..1e5" +
                               (example.empty() ? "" : ", e.g. " + example)};
}

Outcome ac2() {
  const Nat n = kClosedFormRange + 1;
  std::size_t bad = 0;
  std::string what;
  auto note = [&](bool ok, const std::string& name) {
    if (!ok && bad++ == 0) what = name;
  };
  for (Nat k = 0; k < n; ++k) {
    const Nat r = k % 9;
    const Nat rule = (r == 1 || r == 7) ? (k - 1) / 3 : r == 4 ? k : 3 * k + 1;
    const Nat brute = oracle::brute_companion(k);
    note(brute == rule && bethck::companion(k) == brute, "companion at " + std::to_string(k));
  }
  oracle::Bits fixed(n);
  for (Nat k = 0; k < n; ++k) fixed[k] = oracle::brute_companion(k) == k;
  note(oracle::bits_of(UPSet::from_residue(4, 9), n) == fixed, "N0 = 9N+4");
  note(oracle::bits_of(bethck::n0_set(), n) == fixed, "n0_set");

  const auto wide = oracle::residue_bits(2, 3, 3 * n + 2);
  const auto cl = oracle::graph(3 * n + 2).closure(wide);
  const oracle::Bits cl_n(cl.begin(), cl.begin() + n);
  const auto cf = UPSet::from_residue(2, 3) | UPSet::from_residue(7, 9);
  note(oracle::bits_of(cf, n) == cl_n, "Cl(3N+2) closed form");
  note(oracle::bits_of(bethck::closure(UPSet::from_residue(2, 3)), n) == cl_n, "closure(3N+2)");

  oracle::Bits v1(n);
  for (Nat k = 0; k < n; ++k) v1[k] = !cl_n[k];
  const auto v1_form = UPSet::from_residue(0, 3) | UPSet::from_residue(1, 9) | UPSet::from_residue(4, 9);
  note(oracle::bits_of(v1_form, n) == v1, "v1 closed form");
  note(oracle::bits_of(bethck::base_v().a, n) == v1, "base_v().a");
  return {bad == 0, std::to_string(bad) + " disagreements on 0..1e4" + (what.empty() ? "" : " (" + what + ")")};
}

Outcome ac3() {
  const Report r = bethck::cmd_verify_lemmas(kSeed, kWorlds, kPointwise);
  return {r.pass, std::to_string(r.violations.size()) + " violations, " + std::to_string(r.cases) + " cases, " +
                      std::to_string(r.notes.size()) + " notes" +
                      (r.pass ? "" : ", first " + first_violation(r))};
}

Outcome ac4() {
  std::vector<bethck::World> worlds{bethck::base_v(), bethck::base_u()};
  for (std::size_t i = 0; i < kWorlds; ++i) worlds.push_back(bethck::random_u_world(kSeed + i, 400));
  std::size_t bad = 0, checks_run = 0;
  std::string what;
  for (std::size_t i = 0; i < worlds.size(); ++i)
    for (int id = 9; id <= 15; ++id) {
      ++checks_run;
      if (!bethck::lemma2_check(id, worlds[i]) && bad++ == 0)
        what = "item " + std::to_string(id) + " at " + bethck::world_spec(worlds[i]);
    }
  return {bad == 0, std::to_string(bad) + " violations over " + std::to_string(worlds.size()) + " worlds x 7 items" +
                        (what.empty() ? "" : ", first " + what)};
}

Outcome ac5() {
  const Report r = bethck::lsat_suite(kSeed, kWorlds, kSuccessors);
  return {r.pass, std::to_string(r.violations.size()) + " violations, " + std::to_string(r.cases) +
                      " certificates" + (r.pass ? "" : ", first " + first_violation(r))};
}

Report baseline_z;

Outcome ac6() {
  baseline_z = bethck::cmd_check_z(kSeed, kZPairs, kTupleLen);
  std::uint64_t faults = 0;
  std::string breakdown;
  for (const auto& [k, v] : baseline_z.counters)
    if (k.find(".fault") != std::string::npos) {
      faults += v;
      breakdown += (breakdown.empty() ? "" : ", ") + k + "=" + std::to_string(v);
    }
  const auto orient = [&](const char* key) {
    const auto it = baseline_z.counters.find(key);
    return it == baseline_z.counters.end() ? 0 : it->second;
  };
  std::string detail = std::to_string(baseline_z.counters.count("violations") ? baseline_z.counters.at("violations") : 0) +
                       " violations over " + std::to_string(kZPairs) + " pairs (u on the right " +
                       std::to_string(orient("pairs.right_world=u")) + ", u on the left " +
                       std::to_string(orient("pairs.left_world=u")) + ")";
  if (!baseline_z.pass) detail += "; faults: " + breakdown + "; first " + first_violation(baseline_z);
  return {baseline_z.pass, detail};
}

Outcome ac7() {
  const Report impl = bethck::implicit_definability_suite(3, 3);
  const Report tr = bethck::transfer_sweep(2, 2, 3, kSeed, 120);
  std::string detail = "implicit (3,3): " + std::to_string(impl.cases) + " models, " +
                       std::to_string(impl.violations.size()) + " violations; transfer (2,2,3): " +
                       std::to_string(tr.cases) + " cases, " + std::to_string(tr.violations.size()) + " violations";
  if (!impl.pass) detail += "; " + first_violation(impl);
  if (!tr.pass) detail += "; " + first_violation(tr);
  return {impl.pass && tr.pass, detail};
}

Outcome ac8() {
  const Report r = bethck::cmd_demo_beth_failure();
  return {r.pass, std::to_string(r.cases) + " assertions" + (r.pass ? "" : ", first " + first_violation(r))};
}

Outcome ac9() {
  using bethck::Mutant;
  const auto base_checks = checks(baseline_z);
  std::string detail;
  bool all = true;
  auto z_mutant = [&](Mutant m, const std::string& expected_check) {
    bethck::ScopedMutant guard(m);
    const Report r = bethck::cmd_check_z(kSeed, kZPairs, kTupleLen);
    std::string witness;
    for (const auto& v : r.violations)
      if (!base_checks.count(v.check) && v.check == expected_check) {
        witness = v.witness;
        break;
      }
    const bool caught = !witness.empty();
    all = all && caught;
    detail += std::string(bethck::mutant_name(m)) + (caught ? " caught by " + expected_check : " NOT caught") + "; ";
  };
  {
    bethck::ScopedMutant guard(Mutant::companion_rule);
    const Report r = bethck::cmd_verify_lemmas(kSeed, 20, 100'000);
    const bool caught = !r.pass && !r.violations.empty();
    all = all && caught;
    detail += std::string(bethck::mutant_name(Mutant::companion_rule)) +
              (caught ? " caught by " + r.violations.front().check : " NOT caught") + "; ";
  }
  z_mutant(Mutant::k_without_j, "succ_witness:claim1:disjoint");
  z_mutant(Mutant::drop_condition_d, "z_member");
  return {all, detail};
}

}  // namespace

int main() {
  run("AC1", "upset-oracle-equivalence", kLimitAc1, ac1);
  run("AC2", "closed-forms-certified", 0, ac2);
  run("AC3", "closure-lemma-suite", kLimitAc3, ac3);
  run("AC4", "world-lemma-suite", kLimitAc4, ac4);
  run("AC5", "satisfaction-certificates", kLimitAc5, ac5);
  run("AC6", "z-constructor-soundness", kLimitAc6, ac6);
  run("AC7", "finite-model-oracles", kLimitAc7, ac7);
  run("AC8", "end-to-end-chain", kLimitAc8, ac8);
  run("AC9", "mutation-sensitivity", 0, ac9);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
