// bethck: command-line driver for the suites.
//
// Exit status: 0 when every check passes, 1 on a violation, 2 on bad usage or
// malformed input.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bethck/errors.hpp"
#include "bethck/finite_model.hpp"
#include "bethck/mutation.hpp"
#include "bethck/suites.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int emit(const bethck::Report& r, const std::string& json_path, bool timing) {
  std::cout << r.to_text();
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "bethck: cannot write " << json_path << '\n';
      return 2;
    }
    out << r.to_json(timing) << '\n';
  }
  return r.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks the constant-domain Beth counterexample construction"};
  app.require_subcommand(1);

  std::string json_path;
  bool timing = false;
  std::string mutant = "none";
  app.add_option("--json", json_path, "Also write the report as JSON to this path");
  app.add_flag("--timing", timing, "Include wall time in the JSON report");
  app.add_option("--mutant", mutant)->group("");  // fault injection for the test suite

  std::uint64_t seed = 1;
  std::size_t samples = 200;

  auto* verify = app.add_subcommand("verify-lemmas", "Closure-arithmetic and world lemmas");
  verify->add_option("--seed", seed);
  verify->add_option("--samples", samples, "Random sets and worlds");
  bethck::Nat limit = 1'000'000;
  verify->add_option("--pointwise-limit", limit, "Pointwise sweep bound")->capture_default_str();

  auto* certs = app.add_subcommand("certify", "Certificates for the axioms of T on the infinite models");
  certs->add_option("--seed", seed);
  certs->add_option("--samples", samples, "Generated worlds");
  std::size_t successors = 20;
  certs->add_option("--successors", successors, "Sampled successors per world")->capture_default_str();

  auto* checkz = app.add_subcommand("check-z", "Witness constructors for the relation Z");
  std::size_t z_samples = 500, tuple_len = 4;
  std::vector<std::string> pair_files;
  checkz->add_option("--seed", seed);
  checkz->add_option("--samples", z_samples)->capture_default_str();
  checkz->add_option("--tuple-len", tuple_len)->check(CLI::Range(0, 6))->capture_default_str();
  checkz->add_option("--pair", pair_files, "zpair fixture file (repeatable)")->check(CLI::ExistingFile);

  auto* oracle = app.add_subcommand("finite-oracle", "Implicit definability and transfer on finite models");
  int max_worlds = 2, max_dom = 2, depth = 2;
  std::size_t transfer_pairs = 120;
  oracle->add_option("--max-worlds", max_worlds)->check(CLI::Range(1, 3))->capture_default_str();
  oracle->add_option("--max-dom", max_dom)->check(CLI::Range(1, 3))->capture_default_str();
  oracle->add_option("--depth", depth)->check(CLI::Range(0, 3))->capture_default_str();
  oracle->add_option("--seed", seed);
  oracle->add_option("--pairs", transfer_pairs, "Model pairs in the transfer sweep")->capture_default_str();

  auto* demo = app.add_subcommand("demo-beth-failure", "The end-to-end argument on v and u");

  auto* eval = app.add_subcommand("eval", "Evaluate a formula at a world of a finite model");
  std::string model_path, formula_text;
  int world = 0;
  std::vector<std::string> env_items;
  eval->add_option("--model", model_path)->required()->check(CLI::ExistingFile);
  eval->add_option("--world", world)->required();
  eval->add_option("--formula", formula_text)->required();
  eval->add_option("--env", env_items, "Variable binding name=element (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto m = bethck::mutant_from_name(mutant);
  if (!m) {
    std::cerr << "bethck: unknown mutant '" << mutant << "'\n";
    return 2;
  }
  bethck::set_active_mutant(*m);

  try {
    if (*verify) return emit(bethck::cmd_verify_lemmas(seed, samples, limit), json_path, timing);
    if (*certs) return emit(bethck::lsat_suite(seed, samples, successors), json_path, timing);
    if (*checkz) {
      std::vector<bethck::ZPair> extra;
      for (const auto& path : pair_files) extra.push_back(bethck::parse_zpair(slurp(path)));
      return emit(bethck::cmd_check_z(seed, z_samples, tuple_len, extra), json_path, timing);
    }
    if (*oracle)
      return emit(bethck::cmd_finite_oracle(max_worlds, max_dom, depth, seed, transfer_pairs), json_path,
                  timing);
    if (*demo) return emit(bethck::cmd_demo_beth_failure(), json_path, timing);
    if (*eval) {
      const auto model = bethck::parse_model(slurp(model_path));
      const auto formula = bethck::parse_formula(formula_text);
      std::map<std::string, int> env;
      for (const auto& item : env_items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw bethck::PreconditionError("--env expects name=element, got " + item);
        env[item.substr(0, eq)] = std::stoi(item.substr(eq + 1));
      }
      const bool forced = bethck::forces(model, world, formula, env);
      std::cout << (forced ? "forced" : "not forced") << '\n';
      return 0;
    }
  } catch (const bethck::ParseError& e) {
    std::cerr << "bethck: parse error: " << e.what() << '\n';
    return 2;
  } catch (const bethck::UnboundVariableError& e) {
    std::cerr << "bethck: " << e.what() << '\n';
    return 2;
  } catch (const bethck::PreconditionError& e) {
    std::cerr << "bethck: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "bethck: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
