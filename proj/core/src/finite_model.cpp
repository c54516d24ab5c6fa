#include "bethck/finite_model.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "bethck/errors.hpp"

namespace bethck {

void FiniteCDModel::set(Pred p, int w, int a, bool on) {
  auto& m = ext[static_cast<int>(p)][a];
  if (on)
    m |= WorldMask{1} << w;
  else
    m &= ~(WorldMask{1} << w);
}

WorldMask FiniteCDModel::box(WorldMask mask) const {
  WorldMask out = 0;
  for (int w = 0; w < worlds; ++w)
    if ((up[w] & ~mask) == 0) out |= WorldMask{1} << w;
  return out;
}

bool FiniteCDModel::is_up_set(WorldMask mask) const {
  for (int w = 0; w < worlds; ++w)
    if (((mask >> w) & 1U) && (up[w] & ~mask)) return false;
  return true;
}

void FiniteCDModel::validate() const {
  if (worlds < 1 || worlds > max_worlds) throw PreconditionError("world count out of range");
  if (domain < 1 || domain > max_domain) throw PreconditionError("domain size out of range");
  if (static_cast<int>(up.size()) != worlds) throw PreconditionError("order table size mismatch");
  for (int w = 0; w < worlds; ++w) {
    if (!leq(w, w)) throw PreconditionError("order is not reflexive at " + std::to_string(w));
    if (up[w] & ~all_worlds()) throw PreconditionError("order mentions an unknown world");
    for (int v = 0; v < worlds; ++v)
      if (leq(w, v) && (up[v] & ~up[w]))
        throw PreconditionError("order is not transitive through " + std::to_string(v));
  }
  for (int p = 0; p < 3; ++p) {
    if (static_cast<int>(ext[p].size()) != domain)
      throw PreconditionError("extension table size mismatch");
    for (int a = 0; a < domain; ++a)
      if (!is_up_set(ext[p][a]))
        throw PreconditionError(std::string("valuation of ") + pred_letter(static_cast<Pred>(p)) +
                                " is not persistent at element " + std::to_string(a));
  }
  if (!is_up_set(s)) throw PreconditionError("valuation of s is not persistent");
}

Evaluator::Evaluator(const Formula& f, std::vector<std::string> free_order)
    : arity_(free_order.size()) {
  std::vector<std::pair<std::string, int>> scope;
  for (auto& name : free_order) scope.emplace_back(std::move(name), slots_++);
  root_ = compile(f, scope);
}

int Evaluator::compile(const Formula& f, std::vector<std::pair<std::string, int>>& scope) {
  Op op{f.kind(), Pred::P, -1, -1, -1};
  switch (f.kind()) {
    case Formula::Kind::atom: {
      auto it = std::find_if(scope.rbegin(), scope.rend(),
                             [&](const auto& e) { return e.first == f.var(); });
      if (it == scope.rend()) throw UnboundVariableError(f.var());
      op.pred = f.pred();
      op.slot = it->second;
      break;
    }
    case Formula::Kind::prop_s:
    case Formula::Kind::bottom:
      break;
    case Formula::Kind::conj:
    case Formula::Kind::disj:
    case Formula::Kind::imp:
      op.lhs = compile(f.lhs(), scope);
      op.rhs = compile(f.rhs(), scope);
      break;
    case Formula::Kind::forall:
    case Formula::Kind::exists:
      op.slot = slots_++;
      scope.emplace_back(f.var(), op.slot);
      op.lhs = compile(f.body(), scope);
      scope.pop_back();
      break;
  }
  ops_.push_back(op);
  return static_cast<int>(ops_.size()) - 1;
}

WorldMask Evaluator::run(const FiniteCDModel& m, int index, int* env) const {
  const Op& op = ops_[index];
  switch (op.kind) {
    case Formula::Kind::atom:
      return m.ext[static_cast<int>(op.pred)][env[op.slot]];
    case Formula::Kind::prop_s:
      return m.s;
    case Formula::Kind::bottom:
      return 0;
    case Formula::Kind::conj:
      return run(m, op.lhs, env) & run(m, op.rhs, env);
    case Formula::Kind::disj:
      return run(m, op.lhs, env) | run(m, op.rhs, env);
    case Formula::Kind::imp:
      return m.box(~run(m, op.lhs, env) | run(m, op.rhs, env));
    case Formula::Kind::forall: {
      WorldMask acc = m.all_worlds();
      for (int a = 0; a < m.domain && acc; ++a) {
        env[op.slot] = a;
        acc &= run(m, op.lhs, env);
      }
      return m.box(acc);
    }
    case Formula::Kind::exists: {
      WorldMask acc = 0;
      for (int a = 0; a < m.domain; ++a) {
        env[op.slot] = a;
        acc |= run(m, op.lhs, env);
      }
      return acc;
    }
  }
  return 0;
}

WorldMask Evaluator::worlds(const FiniteCDModel& m, std::span<const int> free_values) const {
  if (free_values.size() != arity_) throw PreconditionError("wrong number of free values");
  int env[64];
  if (slots_ > 64) throw PreconditionError("formula binds too many variables");
  for (std::size_t i = 0; i < arity_; ++i) {
    if (free_values[i] < 0 || free_values[i] >= m.domain)
      throw PreconditionError("element out of range");
    env[i] = free_values[i];
  }
  return run(m, root_, env);
}

bool forces(const FiniteCDModel& m, int w, const Formula& f, const std::map<std::string, int>& env) {
  if (w < 0 || w >= m.worlds) throw PreconditionError("world out of range");
  std::vector<std::string> names;
  std::vector<int> values;
  for (const auto& [name, value] : env) {
    names.push_back(name);
    values.push_back(value);
  }
  return Evaluator(f, std::move(names)).at(m, w, values);
}

bool models_T(const FiniteCDModel& m) {
  static const std::vector<Evaluator> axioms = [] {
    std::vector<Evaluator> out;
    for (const auto& a : theory_T().axioms()) out.emplace_back(a);
    return out;
  }();
  const WorldMask all = m.all_worlds();
  // Cheapest axioms first.
  return axioms[1].worlds(m) == all && axioms[2].worlds(m) == all && axioms[0].worlds(m) == all;
}

namespace {

bool is_partial_order(int n, const std::vector<WorldMask>& up) {
  for (int w = 0; w < n; ++w)
    for (int v = 0; v < n; ++v) {
      if (!((up[w] >> v) & 1U)) continue;
      if (up[v] & ~up[w]) return false;                  // transitivity
      if (v != w && ((up[v] >> w) & 1U)) return false;  // antisymmetry
    }
  return true;
}

// Orders on n worlds, optionally requiring world 0 below every world.
std::vector<std::vector<WorldMask>> labeled_orders(int n, bool rooted_at_0) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) cells.emplace_back(i, j);
  std::vector<std::vector<WorldMask>> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cells.size()); ++bits) {
    std::vector<WorldMask> up(n);
    for (int w = 0; w < n; ++w) up[w] = WorldMask{1} << w;
    for (std::size_t c = 0; c < cells.size(); ++c)
      if ((bits >> c) & 1U) up[cells[c].first] |= WorldMask{1} << cells[c].second;
    if (rooted_at_0 && up[0] != (WorldMask{1} << n) - 1) continue;
    if (is_partial_order(n, up)) out.push_back(std::move(up));
  }
  return out;
}

std::vector<WorldMask> permuted(const std::vector<WorldMask>& up, const std::vector<int>& perm) {
  const int n = static_cast<int>(up.size());
  std::vector<WorldMask> out(n, 0);
  for (int w = 0; w < n; ++w)
    for (int v = 0; v < n; ++v)
      if ((up[w] >> v) & 1U) out[perm[w]] |= WorldMask{1} << perm[v];
  return out;
}

}  // namespace

std::vector<Frame> enumerate_frames(int max_worlds, FrameFamily family) {
  if (max_worlds < 1) return {};
  if (max_worlds > (family == FrameFamily::rooted ? 4 : 5))
    throw PreconditionError("frame enumeration bound too large");
  std::vector<Frame> frames;
  for (int n = 1; n <= max_worlds; ++n) {
    if (family == FrameFamily::all_labeled) {
      for (auto& up : labeled_orders(n, false)) frames.push_back({n, std::move(up)});
      continue;
    }
    std::set<std::vector<WorldMask>> seen;
    for (auto& up : labeled_orders(n, true)) {
      // Canonical representative: least relabeling fixing the root.
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::vector<WorldMask> best = up;
      do {
        best = std::min(best, permuted(up, perm));
      } while (std::next_permutation(perm.begin() + 1, perm.end()));
      if (seen.insert(best).second) frames.push_back({n, std::move(best)});
    }
  }
  return frames;
}

std::vector<WorldMask> up_sets(const Frame& f) {
  FiniteCDModel probe;
  probe.worlds = f.worlds;
  probe.up = f.up;
  std::vector<WorldMask> out;
  for (WorldMask m = 0; m <= probe.all_worlds(); ++m)
    if (probe.is_up_set(m)) out.push_back(m);
  return out;
}

void for_each_model(int max_worlds, int max_domain, FrameFamily family,
                    const std::function<bool(const FiniteCDModel&)>& visit, bool vary_s) {
  if (max_domain > FiniteCDModel::max_domain) throw PreconditionError("domain bound too large");
  for (const Frame& frame : enumerate_frames(max_worlds, family)) {
    const auto ups = up_sets(frame);
    const std::size_t radix = ups.size();
    for (int dom = 1; dom <= max_domain; ++dom) {
      FiniteCDModel m;
      m.worlds = frame.worlds;
      m.up = frame.up;
      m.domain = dom;
      for (auto& e : m.ext) e.assign(dom, 0);
      // digit 0 is s, digits 1.. are (pred, element) in P, Q, R order
      const std::size_t digits = 1 + 3 * static_cast<std::size_t>(dom);
      std::vector<std::size_t> idx(digits, 0);
      auto apply = [&](std::size_t d) {
        if (d == 0)
          m.s = ups[idx[0]];
        else
          m.ext[(d - 1) / dom][(d - 1) % dom] = ups[idx[d]];
      };
      for (std::size_t d = 0; d < digits; ++d) apply(d);
      std::size_t first = vary_s ? 0 : 1;
      while (true) {
        if (!visit(m)) return;
        std::size_t d = first;
        while (d < digits) {
          if (++idx[d] < radix) {
            apply(d);
            break;
          }
          idx[d] = 0;
          apply(d);
          ++d;
        }
        if (d == digits) break;
      }
    }
  }
}

std::vector<FiniteCDModel> enumerate_models(int max_worlds, int max_domain, FrameFamily family,
                                            bool vary_s) {
  std::vector<FiniteCDModel> out;
  for_each_model(
      max_worlds, max_domain, family,
      [&](const FiniteCDModel& m) {
        out.push_back(m);
        return true;
      },
      vary_s);
  return out;
}

}  // namespace bethck
