#include "bethck/finite_asimulation.hpp"

#include <chrono>
#include <random>
#include <unordered_map>

#include "bethck/errors.hpp"

namespace bethck {
namespace {

const FiniteCDModel& model_of(int side, const FiniteCDModel& m1, const FiniteCDModel& m2) {
  return side == 0 ? m1 : m2;
}

bool typed(const FinitePair& p, const FiniteCDModel& m1, const FiniteCDModel& m2, int max_len) {
  if (p.left.side == p.right.side || (p.left.side | p.right.side) > 1) return false;
  if (p.left.tuple.size() != p.right.tuple.size()) return false;
  if (static_cast<int>(p.left.tuple.size()) > max_len) return false;
  for (const FinitePoint* pt : {&p.left, &p.right}) {
    const FiniteCDModel& m = model_of(pt->side, m1, m2);
    if (pt->world < 0 || pt->world >= m.worlds) return false;
    for (int a : pt->tuple)
      if (a < 0 || a >= m.domain) return false;
  }
  return true;
}

bool atoms_preserved(const FinitePair& p, const FiniteCDModel& m1, const FiniteCDModel& m2) {
  const FiniteCDModel& ml = model_of(p.left.side, m1, m2);
  const FiniteCDModel& mr = model_of(p.right.side, m1, m2);
  for (std::size_t l = 0; l < p.left.tuple.size(); ++l)
    for (Pred pred : {Pred::P, Pred::Q, Pred::R})
      if (ml.holds(pred, p.left.world, p.left.tuple[l]) &&
          !mr.holds(pred, p.right.world, p.right.tuple[l]))
        return false;
  return true;
}

// Conditions 3 to 5 against a membership test; returns the failing condition or 0.
template <class Member>
int dynamic_failure(const FinitePair& p, const FiniteCDModel& m1, const FiniteCDModel& m2,
                    int max_len, const Member& member) {
  const FiniteCDModel& ml = model_of(p.left.side, m1, m2);
  const FiniteCDModel& mr = model_of(p.right.side, m1, m2);
  for (int v = 0; v < mr.worlds; ++v) {
    if (!mr.leq(p.right.world, v)) continue;
    bool found = false;
    for (int w = 0; w < ml.worlds && !found; ++w) {
      if (!ml.leq(p.left.world, w)) continue;
      const FinitePoint vp{p.right.side, v, p.right.tuple};
      const FinitePoint wp{p.left.side, w, p.left.tuple};
      found = member(FinitePair{vp, wp}) && member(FinitePair{wp, vp});
    }
    if (!found) return 3;
  }
  if (static_cast<int>(p.left.tuple.size()) >= max_len) return 0;
  auto grow = [&](int f, int g) {
    FinitePair q = p;
    q.left.tuple.push_back(f);
    q.right.tuple.push_back(g);
    return q;
  };
  for (int f = 0; f < ml.domain; ++f) {
    bool found = false;
    for (int g = 0; g < mr.domain && !found; ++g) found = member(grow(f, g));
    if (!found) return 4;
  }
  for (int g = 0; g < mr.domain; ++g) {
    bool found = false;
    for (int f = 0; f < ml.domain && !found; ++f) found = member(grow(f, g));
    if (!found) return 5;
  }
  return 0;
}

std::string point_str(const FinitePoint& p) {
  std::string s = "(m" + std::to_string(p.side + 1) + ", w" + std::to_string(p.world) + ", [";
  for (std::size_t i = 0; i < p.tuple.size(); ++i) s += (i ? "," : "") + std::to_string(p.tuple[i]);
  return s + "])";
}

std::string pair_str(const FinitePair& p) { return point_str(p.left) + " / " + point_str(p.right); }

}  // namespace

bool is_asimulation_finite(const FiniteCDModel& m1, const FiniteCDModel& m2, const FiniteRelation& z,
                           int max_len, std::string* why) {
  auto fail = [&](int cond, const FinitePair& p) {
    if (why) *why = "condition " + std::to_string(cond) + " fails at " + pair_str(p);
    return false;
  };
  for (const auto& p : z)
    if (!typed(p, m1, m2, max_len)) return fail(1, p);
  for (const auto& p : z)
    if (!atoms_preserved(p, m1, m2)) return fail(2, p);
  auto member = [&](const FinitePair& q) { return z.contains(q); };
  for (const auto& p : z)
    if (int c = dynamic_failure(p, m1, m2, max_len, member)) return fail(c, p);
  return true;
}

FiniteRelation maximal_asimulation(const FiniteCDModel& m1, const FiniteCDModel& m2, int max_len) {
  if (max_len < 0 || max_len > 4) throw PreconditionError("max_len must be 0..4");
  // Dense keys: side, worlds, length, then both tuples in 5-bit digits.
  auto key = [](const FinitePair& p) {
    std::uint64_t k = static_cast<std::uint64_t>(p.left.side);
    k = (k << 5) | static_cast<std::uint64_t>(p.left.world);
    k = (k << 5) | static_cast<std::uint64_t>(p.right.world);
    k = (k << 3) | p.left.tuple.size();
    for (int a : p.left.tuple) k = (k << 5) | static_cast<std::uint64_t>(a);
    for (int a : p.right.tuple) k = (k << 5) | static_cast<std::uint64_t>(a);
    return k;
  };

  std::vector<FinitePair> pairs;
  for (int side = 0; side < 2; ++side) {
    const FiniteCDModel& ml = model_of(side, m1, m2);
    const FiniteCDModel& mr = model_of(1 - side, m1, m2);
    for (int len = 0; len <= max_len; ++len) {
      std::vector<int> dl(len, 0), dr(len, 0);
      auto bump = [](std::vector<int>& t, int base) {
        for (auto& x : t) {
          if (++x < base) return true;
          x = 0;
        }
        return false;
      };
      do {
        do {
          for (int lw = 0; lw < ml.worlds; ++lw)
            for (int rw = 0; rw < mr.worlds; ++rw) {
              FinitePair p{{side, lw, dl}, {1 - side, rw, dr}};
              if (atoms_preserved(p, m1, m2)) pairs.push_back(std::move(p));
            }
        } while (bump(dr, mr.domain));
      } while (bump(dl, ml.domain));
    }
  }

  std::unordered_map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < pairs.size(); ++i) index.emplace(key(pairs[i]), i);
  std::vector<char> alive(pairs.size(), 1);
  auto member = [&](const FinitePair& q) {
    auto it = index.find(key(q));
    return it != index.end() && alive[it->second];
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (alive[i] && dynamic_failure(pairs[i], m1, m2, max_len, member)) {
        alive[i] = 0;
        changed = true;
      }
    }
  }
  FiniteRelation out;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (alive[i]) out.insert(pairs[i]);
  return out;
}

namespace {

// Truth tables of the enumerated formulas: cell [ax * n + ay] holds the worlds
// forcing the formula with x := ax, y := ay.
struct Tables {
  int n = 1;
  std::vector<WorldMask> cells;  // formula-major
  WorldMask at(std::size_t f, int ax, int ay) const { return cells[f * n * n + ax * n + ay]; }
};

Tables build_tables(const FiniteCDModel& m, const std::vector<Formula>& formulas,
                    const std::unordered_map<const void*, std::size_t>& pos) {
  Tables t;
  t.n = m.domain;
  const int n = t.n;
  const std::size_t width = static_cast<std::size_t>(n) * n;
  t.cells.assign(formulas.size() * width, 0);
  for (std::size_t i = 0; i < formulas.size(); ++i) {
    const Formula& f = formulas[i];
    WorldMask* out = &t.cells[i * width];
    auto child = [&](const Formula& c) { return &t.cells[pos.at(c.id()) * width]; };
    switch (f.kind()) {
      case Formula::Kind::atom: {
        const bool on_x = f.var() == "x";
        for (int ax = 0; ax < n; ++ax)
          for (int ay = 0; ay < n; ++ay)
            out[ax * n + ay] = m.ext[static_cast<int>(f.pred())][on_x ? ax : ay];
        break;
      }
      case Formula::Kind::prop_s:
        for (std::size_t c = 0; c < width; ++c) out[c] = m.s;
        break;
      case Formula::Kind::bottom:
        break;
      case Formula::Kind::conj:
      case Formula::Kind::disj:
      case Formula::Kind::imp: {
        const WorldMask* l = child(f.lhs());
        const WorldMask* r = child(f.rhs());
        for (std::size_t c = 0; c < width; ++c)
          out[c] = f.kind() == Formula::Kind::conj   ? (l[c] & r[c])
                   : f.kind() == Formula::Kind::disj ? (l[c] | r[c])
                                                     : m.box(~l[c] | r[c]);
        break;
      }
      case Formula::Kind::forall:
      case Formula::Kind::exists: {
        const WorldMask* b = child(f.body());
        const bool on_x = f.var() == "x";
        const bool universal = f.kind() == Formula::Kind::forall;
        for (int ax = 0; ax < n; ++ax)
          for (int ay = 0; ay < n; ++ay) {
            WorldMask acc = universal ? m.all_worlds() : 0;
            for (int a = 0; a < n; ++a) {
              const WorldMask cell = on_x ? b[a * n + ay] : b[ax * n + a];
              acc = universal ? (acc & cell) : (acc | cell);
            }
            out[ax * n + ay] = universal ? m.box(acc) : acc;
          }
        break;
      }
    }
  }
  return t;
}

struct FormulaPool {
  std::vector<Formula> formulas;
  std::vector<int> need;  // tuple length that binds the free variables
  std::unordered_map<const void*, std::size_t> pos;
};

const FormulaPool& pool_for_depth(int depth) {
  static std::unordered_map<int, FormulaPool> cache;
  auto it = cache.find(depth);
  if (it != cache.end()) return it->second;
  FormulaPool p;
  p.formulas = enumerate_formulas(depth, 2, false);
  for (std::size_t i = 0; i < p.formulas.size(); ++i) {
    p.pos.emplace(p.formulas[i].id(), i);
    const auto fv = p.formulas[i].free_vars();
    p.need.push_back(fv.contains("y") ? 2 : fv.contains("x") ? 1 : 0);
  }
  return cache.emplace(depth, std::move(p)).first->second;
}

}  // namespace

Report transfer_oracle(const FiniteCDModel& m1, const FiniteCDModel& m2, const FiniteRelation& z,
                       int depth) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.suite = "transfer";
  const FormulaPool& pool = pool_for_depth(std::max(depth, 1));
  const Tables tables[2] = {build_tables(m1, pool.formulas, pool.pos),
                            build_tables(m2, pool.formulas, pool.pos)};
  const FiniteCDModel* models[2] = {&m1, &m2};

  // Second evaluation route on a sample of formulas.
  for (std::size_t i = 0; i < pool.formulas.size(); i += 97) {
    const Evaluator ev(pool.formulas[i], {"x", "y"});
    for (int side = 0; side < 2; ++side) {
      const int n = models[side]->domain;
      for (int ax = 0; ax < n; ++ax)
        for (int ay = 0; ay < n; ++ay) {
          const int vals[2] = {ax, ay};
          r.count("crosschecks");
          if (ev.worlds(*models[side], vals) != tables[side].at(i, ax, ay))
            r.fail("evaluator-crosscheck", pool.formulas[i].to_string() + " on " + model_text(*models[side]));
        }
    }
  }

  for (const auto& p : z) {
    const int k = static_cast<int>(p.left.tuple.size());
    if (k > 2 || p.left.side == p.right.side) continue;
    r.count("pairs");
    const Tables& tl = tables[p.left.side];
    const Tables& tr = tables[p.right.side];
    const int lx = k > 0 ? p.left.tuple[0] : 0, ly = k > 1 ? p.left.tuple[1] : 0;
    const int rx = k > 0 ? p.right.tuple[0] : 0, ry = k > 1 ? p.right.tuple[1] : 0;
    for (std::size_t i = 0; i < pool.formulas.size(); ++i) {
      if (pool.need[i] > k) continue;
      ++r.cases;
      const bool left = (tl.at(i, lx, ly) >> p.left.world) & 1U;
      const bool right = (tr.at(i, rx, ry) >> p.right.world) & 1U;
      if (left && !right)
        r.fail("transfer", pool.formulas[i].to_string() + " at " + point_str(p.left) + " / " +
                               point_str(p.right) + " in " + model_text(m1) + " and " + model_text(m2));
    }
  }
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<std::pair<FiniteCDModel, FiniteCDModel>> transfer_fixture_family(int max_worlds,
                                                                             int max_domain,
                                                                             std::uint64_t seed,
                                                                             std::size_t pairs) {
  const auto models = enumerate_models(max_worlds, max_domain, FrameFamily::rooted, false);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, models.size() - 1);
  std::vector<std::pair<FiniteCDModel, FiniteCDModel>> out;
  for (std::size_t i = 0; i < pairs; ++i) out.emplace_back(models[pick(rng)], models[pick(rng)]);
  for (std::size_t i = 0; i < pairs / 4; ++i) {
    const auto& m = models[pick(rng)];
    out.emplace_back(m, m);
  }
  return out;
}

Report transfer_sweep(int max_worlds, int max_domain, int depth, std::uint64_t seed, std::size_t pairs) {
  const auto start = std::chrono::steady_clock::now();
  Report total;
  total.suite = "transfer-sweep";
  total.seed = seed;
  for (const auto& [m1, m2] : transfer_fixture_family(max_worlds, max_domain, seed, pairs)) {
    const FiniteRelation z = maximal_asimulation(m1, m2, 4);
    total.count("model_pairs");
    total.count("relation_size", z.size());
    std::string why;
    if (!is_asimulation_finite(m1, m2, z, 4, &why)) total.fail("maximal-asimulation", why);
    total.merge(transfer_oracle(m1, m2, z, depth));
  }
  total.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return total;
}

}  // namespace bethck
