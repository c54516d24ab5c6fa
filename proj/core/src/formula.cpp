#include "bethck/formula.hpp"

#include <algorithm>
#include <stdexcept>

#include "bethck/errors.hpp"

namespace bethck {

char pred_letter(Pred p) { return "PQR"[static_cast<int>(p)]; }

struct Formula::Node {
  Kind kind;
  Pred pred = Pred::P;
  std::string var;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
  int depth = 1;
  int qdepth = 0;
};

namespace {

using NodePtr = std::shared_ptr<const Formula::Node>;

}  // namespace

Formula Formula::atom(Pred p, std::string var) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::atom;
  n->pred = p;
  n->var = std::move(var);
  return Formula(std::move(n));
}

Formula Formula::s() {
  static const Formula f = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::prop_s;
    return Formula(std::move(n));
  }();
  return f;
}

Formula Formula::bottom() {
  static const Formula f = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::bottom;
    return Formula(std::move(n));
  }();
  return f;
}

namespace {

template <class NodeT>
std::shared_ptr<NodeT> binary_node(Formula::Kind k, std::shared_ptr<const NodeT> l,
                                   std::shared_ptr<const NodeT> r) {
  auto n = std::make_shared<NodeT>();
  n->kind = k;
  n->depth = 1 + std::max(l->depth, r->depth);
  n->qdepth = std::max(l->qdepth, r->qdepth);
  n->lhs = std::move(l);
  n->rhs = std::move(r);
  return n;
}

}  // namespace

Formula Formula::conj(Formula lhs, Formula rhs) {
  return Formula(binary_node(Kind::conj, std::move(lhs.node_), std::move(rhs.node_)));
}
Formula Formula::disj(Formula lhs, Formula rhs) {
  return Formula(binary_node(Kind::disj, std::move(lhs.node_), std::move(rhs.node_)));
}
Formula Formula::imp(Formula lhs, Formula rhs) {
  return Formula(binary_node(Kind::imp, std::move(lhs.node_), std::move(rhs.node_)));
}
Formula Formula::iff(const Formula& lhs, const Formula& rhs) {
  return conj(imp(lhs, rhs), imp(rhs, lhs));
}

namespace {

template <class NodeT>
std::shared_ptr<NodeT> quantifier_node(Formula::Kind k, std::string var,
                                       std::shared_ptr<const NodeT> body) {
  auto n = std::make_shared<NodeT>();
  n->kind = k;
  n->var = std::move(var);
  n->depth = 1 + body->depth;
  n->qdepth = 1 + body->qdepth;
  n->lhs = std::move(body);
  return n;
}

}  // namespace

Formula Formula::forall(std::string var, Formula body) {
  return Formula(quantifier_node(Kind::forall, std::move(var), std::move(body.node_)));
}
Formula Formula::exists(std::string var, Formula body) {
  return Formula(quantifier_node(Kind::exists, std::move(var), std::move(body.node_)));
}

Formula::Kind Formula::kind() const { return node_->kind; }
Pred Formula::pred() const { return node_->pred; }
const std::string& Formula::var() const { return node_->var; }

const Formula& Formula::lhs() const {
  // Formula is a thin wrapper over the node pointer, so a child handle can be
  // viewed in place.
  static_assert(sizeof(Formula) == sizeof(NodePtr));
  if (!node_->lhs) throw std::logic_error("Formula::lhs on a leaf");
  return *reinterpret_cast<const Formula*>(&node_->lhs);
}

const Formula& Formula::rhs() const {
  if (!node_->rhs) throw std::logic_error("Formula::rhs on a non-binary node");
  return *reinterpret_cast<const Formula*>(&node_->rhs);
}

bool Formula::is_binary() const {
  return kind() == Kind::conj || kind() == Kind::disj || kind() == Kind::imp;
}
bool Formula::is_quantifier() const { return kind() == Kind::forall || kind() == Kind::exists; }
bool Formula::is_negation() const {
  return kind() == Kind::imp && node_->rhs->kind == Kind::bottom;
}

int Formula::depth() const { return node_->depth; }
int Formula::quantifier_depth() const { return node_->qdepth; }

namespace {

void collect_free(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::atom:
      if (!bound.contains(f.var())) out.insert(f.var());
      return;
    case Formula::Kind::prop_s:
    case Formula::Kind::bottom:
      return;
    case Formula::Kind::conj:
    case Formula::Kind::disj:
    case Formula::Kind::imp:
      collect_free(f.lhs(), bound, out);
      collect_free(f.rhs(), bound, out);
      return;
    case Formula::Kind::forall:
    case Formula::Kind::exists: {
      const bool fresh = bound.insert(f.var()).second;
      collect_free(f.body(), bound, out);
      if (fresh) bound.erase(f.var());
      return;
    }
  }
}

}  // namespace

std::set<std::string> Formula::free_vars() const {
  std::set<std::string> bound, out;
  collect_free(*this, bound, out);
  return out;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind || x.depth != y.depth) return false;
  switch (x.kind) {
    case Formula::Kind::atom:
      return x.pred == y.pred && x.var == y.var;
    case Formula::Kind::prop_s:
    case Formula::Kind::bottom:
      return true;
    case Formula::Kind::conj:
    case Formula::Kind::disj:
    case Formula::Kind::imp:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    case Formula::Kind::forall:
    case Formula::Kind::exists:
      return x.var == y.var && a.body() == b.body();
  }
  return false;
}

namespace {

// Binding strength: -> 1, | 2, & 3, unary 4.
int level_of(const Formula& f) {
  if (f.is_negation()) return 4;
  switch (f.kind()) {
    case Formula::Kind::imp:
      return 1;
    case Formula::Kind::disj:
      return 2;
    case Formula::Kind::conj:
      return 3;
    default:
      return 4;
  }
}

void print(const Formula& f, int required, bool bare_quantifier, std::string& out) {
  const bool parens =
      level_of(f) < required || (f.is_quantifier() && !bare_quantifier);
  if (parens) out += '(';
  if (f.is_negation()) {
    out += '~';
    print(f.lhs(), 4, false, out);
  } else {
    switch (f.kind()) {
      case Formula::Kind::atom:
        out += pred_letter(f.pred());
        out += '(';
        out += f.var();
        out += ')';
        break;
      case Formula::Kind::prop_s:
        out += 's';
        break;
      case Formula::Kind::bottom:
        out += "_|_";
        break;
      case Formula::Kind::conj:
        print(f.lhs(), 3, false, out);
        out += " & ";
        print(f.rhs(), 4, true, out);
        break;
      case Formula::Kind::disj:
        print(f.lhs(), 2, false, out);
        out += " | ";
        print(f.rhs(), 3, true, out);
        break;
      case Formula::Kind::imp:
        print(f.lhs(), 2, false, out);
        out += " -> ";
        print(f.rhs(), 1, true, out);
        break;
      case Formula::Kind::forall:
      case Formula::Kind::exists:
        out += f.kind() == Formula::Kind::forall ? "forall " : "exists ";
        out += f.var();
        out += ". ";
        print(f.body(), 4, true, out);
        break;
    }
  }
  if (parens) out += ')';
}

}  // namespace

std::string Formula::to_string() const {
  std::string out;
  print(*this, 0, true, out);
  return out;
}

Theory::Theory(std::vector<Formula> axioms) : axioms_(std::move(axioms)) {
  for (const auto& a : axioms_) {
    auto fv = a.free_vars();
    if (!fv.empty()) throw UnboundVariableError(*fv.begin());
  }
}

Formula Theory::conjunction() const {
  if (axioms_.empty()) return Formula::imp(Formula::bottom(), Formula::bottom());
  Formula acc = axioms_.front();
  for (std::size_t i = 1; i < axioms_.size(); ++i) acc = Formula::conj(acc, axioms_[i]);
  return acc;
}

const Theory& theory_T() {
  static const Theory t({
      parse_sentence("forall x. (s -> exists y. (P(y) & (Q(y) -> R(x))))"),
      parse_sentence("~(forall x. R(x))"),
      parse_sentence("forall x. (P(x) -> Q(x) | s)"),
  });
  return t;
}

std::string pool_variable(int i) {
  static const char* names[] = {"x", "y", "z", "w"};
  if (i < 4) return names[i];
  return "x" + std::to_string(i);
}

std::vector<Formula> enumerate_formulas(int max_depth, int max_vars, bool include_s) {
  std::vector<Formula> all;
  if (max_depth < 1) return all;
  all.push_back(Formula::bottom());
  if (include_s) all.push_back(Formula::s());
  for (int v = 0; v < max_vars; ++v)
    for (Pred p : {Pred::P, Pred::Q, Pred::R}) all.push_back(Formula::atom(p, pool_variable(v)));

  std::size_t below_prev = 0;  // formulas of depth < d - 1 occupy [0, below_prev)
  for (int d = 2; d <= max_depth; ++d) {
    const std::size_t below = all.size();  // depth <= d - 1 occupy [0, below)
    for (auto op : {Formula::Kind::conj, Formula::Kind::disj, Formula::Kind::imp}) {
      for (std::size_t i = 0; i < below; ++i) {
        for (std::size_t j = 0; j < below; ++j) {
          if (i < below_prev && j < below_prev) continue;  // depth would be < d
          const Formula& l = all[i];
          const Formula& r = all[j];
          all.push_back(op == Formula::Kind::conj   ? Formula::conj(l, r)
                        : op == Formula::Kind::disj ? Formula::disj(l, r)
                                                    : Formula::imp(l, r));
        }
      }
    }
    for (bool universal : {true, false}) {
      for (int v = 0; v < max_vars; ++v) {
        for (std::size_t i = below_prev; i < below; ++i) {
          all.push_back(universal ? Formula::forall(pool_variable(v), all[i])
                                  : Formula::exists(pool_variable(v), all[i]));
        }
      }
    }
    below_prev = below;
  }
  return all;
}

}  // namespace bethck
