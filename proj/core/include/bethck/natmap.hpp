#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bethck/upset.hpp"

namespace bethck {

/// n -> (slope * n + offset) / divisor, applied when n % modulus == residue.
/// The division must be exact on the whole residue class.
struct AffineRule {
  Nat residue;
  Nat modulus;
  Nat slope;
  std::int64_t offset;
  Nat divisor = 1;
};

/// A total piecewise-affine map on the naturals whose rules partition the
/// residues modulo the lcm of their moduli. Images and preimages of
/// ultimately periodic sets are ultimately periodic and computed exactly.
class NatMap {
 public:
  /// Throws PreconditionError if the rules overlap, leave a residue
  /// uncovered, or are not integral on their class.
  explicit NatMap(std::vector<AffineRule> rules);

  Nat operator()(Nat n) const;
  UPSet image(const UPSet& s) const;
  UPSet preimage(const UPSet& s) const;

  std::span<const AffineRule> rules() const { return rules_; }
  Nat modulus() const { return modulus_; }
  std::string describe() const;

 private:
  const AffineRule& rule_for(Nat n) const;

  std::vector<AffineRule> rules_;
  std::vector<std::size_t> by_residue_;  // residue mod modulus_ -> rule index
  Nat modulus_ = 1;
};

}  // namespace bethck
