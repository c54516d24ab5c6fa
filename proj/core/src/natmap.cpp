#include "bethck/natmap.hpp"

#include <numeric>
#include <sstream>

#include "bethck/errors.hpp"

namespace bethck {

namespace {

// First value and step of the arithmetic progression a rule maps its class onto.
struct Progression {
  Nat first;
  Nat step;
};

Progression progression_of(const AffineRule& r) {
  const auto at_residue = static_cast<std::int64_t>(r.slope * r.residue) + r.offset;
  return {static_cast<Nat>(at_residue) / r.divisor, r.slope * r.modulus / r.divisor};
}

Nat ceil_div(Nat a, Nat b) { return (a + b - 1) / b; }

}  // namespace

NatMap::NatMap(std::vector<AffineRule> rules) : rules_(std::move(rules)) {
  if (rules_.empty()) throw PreconditionError("NatMap: no rules");
  for (const auto& r : rules_) {
    if (r.modulus == 0 || r.residue >= r.modulus || r.slope == 0 || r.divisor == 0)
      throw PreconditionError("NatMap: malformed rule");
    const auto at_residue = static_cast<std::int64_t>(r.slope * r.residue) + r.offset;
    if (at_residue < 0 || at_residue % static_cast<std::int64_t>(r.divisor) != 0 ||
        (r.slope * r.modulus) % r.divisor != 0)
      throw PreconditionError("NatMap: rule not integral on residue " + std::to_string(r.residue) +
                              " mod " + std::to_string(r.modulus));
    modulus_ = std::lcm(modulus_, r.modulus);
  }
  by_residue_.assign(modulus_, rules_.size());
  for (Nat rho = 0; rho < modulus_; ++rho) {
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      if (rho % rules_[i].modulus != rules_[i].residue) continue;
      if (by_residue_[rho] != rules_.size())
        throw PreconditionError("NatMap: residue " + std::to_string(rho) + " covered twice");
      by_residue_[rho] = i;
    }
    if (by_residue_[rho] == rules_.size())
      throw PreconditionError("NatMap: residue " + std::to_string(rho) + " uncovered");
  }
}

const AffineRule& NatMap::rule_for(Nat n) const { return rules_[by_residue_[n % modulus_]]; }

Nat NatMap::operator()(Nat n) const {
  const auto& r = rule_for(n);
  return static_cast<Nat>(static_cast<std::int64_t>(r.slope * n) + r.offset) / r.divisor;
}

UPSet NatMap::image(const UPSet& s) const {
  UPSet out;
  for (const auto& r : rules_) {
    // Class elements are r.residue + r.modulus * k; their images first + step * k.
    const auto [first, step] = progression_of(r);
    const Nat k0 = s.threshold() > r.residue ? ceil_div(s.threshold() - r.residue, r.modulus) : 0;
    const Nat threshold = first + step * k0;
    const Nat period = step * s.period();
    out = out | UPSet::from_predicate(threshold, period, [&](Nat x) {
            if (x < first || (x - first) % step != 0) return false;
            return s.contains(r.residue + r.modulus * ((x - first) / step));
          });
  }
  return out;
}

UPSet NatMap::preimage(const UPSet& s) const {
  UPSet out;
  for (const auto& r : rules_) {
    const auto [first, step] = progression_of(r);
    const Nat k1 = s.threshold() > first ? ceil_div(s.threshold() - first, step) : 0;
    const Nat threshold = r.residue + r.modulus * k1;
    const Nat period = r.modulus * s.period();
    out = out | UPSet::from_predicate(threshold, period, [&](Nat n) {
            if (n % r.modulus != r.residue) return false;
            return s.contains(first + step * ((n - r.residue) / r.modulus));
          });
  }
  return out;
}

std::string NatMap::describe() const {
  std::ostringstream os;
  for (const auto& r : rules_) {
    os << "n = " << r.residue << " mod " << r.modulus << ": n -> (" << r.slope << "n";
    if (r.offset >= 0) os << " + " << r.offset;
    else os << " - " << -r.offset;
    os << ")";
    if (r.divisor != 1) os << "/" << r.divisor;
    os << "\n";
  }
  return os.str();
}

}  // namespace bethck
