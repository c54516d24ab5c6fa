#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bethck {

enum class Pred : std::uint8_t { P = 0, Q = 1, R = 2 };

char pred_letter(Pred p);

/// Immutable first-order formula over unary P, Q, R and the proposition s.
/// Subtrees are shared; copies are cheap. Negation is Imp(f, Bottom).
class Formula {
 public:
  enum class Kind : std::uint8_t { atom, prop_s, bottom, conj, disj, imp, forall, exists };

  static Formula atom(Pred p, std::string var);
  static Formula s();
  static Formula bottom();
  static Formula conj(Formula lhs, Formula rhs);
  static Formula disj(Formula lhs, Formula rhs);
  static Formula imp(Formula lhs, Formula rhs);
  static Formula negation(Formula f) { return imp(std::move(f), bottom()); }
  static Formula iff(const Formula& lhs, const Formula& rhs);
  static Formula forall(std::string var, Formula body);
  static Formula exists(std::string var, Formula body);

  Kind kind() const;
  Pred pred() const;              // atoms only
  const std::string& var() const; // atoms and quantifiers
  const Formula& lhs() const;     // binary nodes; the body of quantifiers
  const Formula& rhs() const;
  const Formula& body() const { return lhs(); }

  bool is_binary() const;
  bool is_quantifier() const;
  bool is_negation() const;

  std::set<std::string> free_vars() const;
  bool is_sentence() const { return free_vars().empty(); }
  /// Height of the syntax tree; atoms, s and bottom have depth 1.
  int depth() const;
  int quantifier_depth() const;

  /// Address of the shared node; stable for memoization.
  const void* id() const { return node_.get(); }

  std::string to_string() const;

  friend bool operator==(const Formula& a, const Formula& b);

 public:
  struct Node;

 private:
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// ASCII grammar: atoms `P(x) Q(x) R(x) s _|_`, connectives `~ & | -> <->`
/// (tightest first; `->` right-associative, `<->` lowest), quantifiers
/// `forall x.` / `exists x.` binding the following unary formula.
/// Throws ParseError with a byte offset.
Formula parse_formula(std::string_view text);
/// As parse_formula, but throws UnboundVariableError on a free variable.
Formula parse_sentence(std::string_view text);

/// An ordered list of sentences.
class Theory {
 public:
  /// Throws UnboundVariableError if an axiom has a free variable.
  explicit Theory(std::vector<Formula> axioms);
  std::span<const Formula> axioms() const { return axioms_; }
  std::size_t size() const { return axioms_.size(); }
  const Formula& operator[](std::size_t i) const { return axioms_[i]; }
  Formula conjunction() const;

 private:
  std::vector<Formula> axioms_;
};

/// The three axioms, in order:
///   forall x. (s -> exists y. (P(y) & (Q(y) -> R(x))))
///   ~(forall x. R(x))
///   forall x. (P(x) -> Q(x) | s)
const Theory& theory_T();

/// Name of the i-th variable of an enumeration pool: x, y, z, w, x4, x5, ...
std::string pool_variable(int i);

/// Every formula of depth <= max_depth over the first max_vars pool variables
/// (with s only if include_s), each structurally distinct, in a fixed order:
/// by depth, then bottom, s, atoms; then &, |, ->, then forall, exists.
std::vector<Formula> enumerate_formulas(int max_depth, int max_vars, bool include_s);

}  // namespace bethck
