#include "bethck/definability.hpp"

#include <chrono>

namespace bethck {

Report implicit_definability_suite(int max_worlds, int max_domain, FrameFamily family) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.suite = "implicit-definability";

  const Evaluator theta0(parse_sentence("exists y. (P(y) & ~Q(y))"));
  const Evaluator theta_star(parse_sentence("forall x. exists y. (P(y) & (Q(y) -> R(x)))"));

  std::uint64_t group_models = 0;
  std::string group_first;
  auto flush = [&] {
    if (group_models > 1)
      r.fail("unique-s", std::to_string(group_models) + " models of T differ only in s, e.g. " +
                             group_first);
    group_models = 0;
  };

  for_each_model(max_worlds, max_domain, family, [&](const FiniteCDModel& m) {
    if (m.s == 0) {
      flush();
      r.count("valuation_groups");
    }
    ++r.cases;
    if (!models_T(m)) return true;
    r.count("models_of_T");
    if (group_models++ == 0) group_first = model_text(m);

    const WorldMask t0 = theta0.worlds(m);
    const WorldMask ts = theta_star.worlds(m);
    for (int w = 0; w < m.worlds; ++w) {
      r.count("worlds_checked");
      bool p_minus_q = false;
      for (int a = 0; a < m.domain; ++a)
        p_minus_q = p_minus_q || (m.holds(Pred::P, w, a) && !m.holds(Pred::Q, w, a));
      const bool s = m.forces_s(w);
      if (s != p_minus_q)
        r.fail("s-iff-P-minus-Q", "world " + std::to_string(w) + " of " + model_text(m));
      if (s) r.count("worlds_forcing_s");
      if (s && !((t0 >> w) & 1U)) {
        if (r.counters["theta0_missing_where_s"]++ == 0)
          r.notes.push_back("exists y. (P(y) & ~Q(y)) is not forced at world " + std::to_string(w) +
                            " of " + model_text(m) + ", which forces s");
      }
      if (!s && ((t0 >> w) & 1U)) r.count("theta0_extra_where_not_s");
      if (s != (((ts >> w) & 1U) != 0)) r.count("theta_star_disagreements");
    }
    return true;
  });
  flush();

  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace bethck
