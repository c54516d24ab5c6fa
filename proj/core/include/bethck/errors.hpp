#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace bethck {

/// A caller handed an operation arguments outside its domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// nth() asked for an element past the end of a finite set.
class ExhaustedError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Text input (formula, set expression, world spec, model file) is malformed.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at offset " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const noexcept { return pos_; }

 private:
  std::size_t pos_;
};

/// A formula mentions a variable that the evaluation context does not bind.
class UnboundVariableError : public std::runtime_error {
 public:
  explicit UnboundVariableError(const std::string& var)
      : std::runtime_error("unbound variable '" + var + "'"), var_(var) {}
  const std::string& variable() const noexcept { return var_; }

 private:
  std::string var_;
};

/// A witness constructor produced a value that fails its own post-check.
///
/// `claim` names the failed obligation (e.g. "claim1:disjoint", "z_member");
/// `candidate` carries the offending element for element constructors.
class ConstructionFault : public std::runtime_error {
 public:
  ConstructionFault(std::string claim, const std::string& detail, long long candidate = -1)
      : std::runtime_error(claim + ": " + detail), claim_(std::move(claim)), candidate_(candidate) {}
  const std::string& claim() const noexcept { return claim_; }
  long long candidate() const noexcept { return candidate_; }

 private:
  std::string claim_;
  long long candidate_;
};

}  // namespace bethck
