#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace bethck {

using Nat = std::uint64_t;

/// An ultimately periodic subset of the naturals.
///
/// Below threshold() membership is read from the prefix bits; from the
/// threshold on, n is a member iff block bit (n - threshold) % period is set.
/// Values are always canonical: the period is the least eventual period and,
/// for it, the threshold is the least preperiod. Structural equality is
/// therefore set equality.
class UPSet {
 public:
  UPSet();  // the empty set

  static UPSet empty_set() { return UPSet(); }
  static UPSet naturals();
  /// {residue, residue + modulus, ...}; throws PreconditionError if residue >= modulus.
  static UPSet from_residue(Nat residue, Nat modulus);
  static UPSet from_finite(std::span<const Nat> elems);
  static UPSet from_finite(std::initializer_list<Nat> elems);
  /// Raw constructor; block must be non-empty. Result is canonicalized.
  static UPSet from_bits(std::vector<bool> prefix, std::vector<bool> block);

  /// Samples `member` on [0, threshold + period) and canonicalizes. The caller
  /// guarantees that membership is periodic with `period` from `threshold` on.
  template <class Pred>
  static UPSet from_predicate(Nat threshold, Nat period, Pred&& member) {
    std::vector<bool> prefix(threshold), block(period);
    for (Nat n = 0; n < threshold; ++n) prefix[n] = member(n);
    for (Nat i = 0; i < period; ++i) block[i] = member(threshold + i);
    return from_bits(std::move(prefix), std::move(block));
  }

  bool contains(Nat n) const {
    if (n < prefix_.size()) return prefix_[n];
    return block_[(n - prefix_.size()) % block_.size()];
  }

  Nat threshold() const { return prefix_.size(); }
  Nat period() const { return block_.size(); }
  const std::vector<bool>& prefix_bits() const { return prefix_; }
  const std::vector<bool>& block_bits() const { return block_; }

  bool empty() const;
  bool finite() const;
  bool infinite() const { return !finite(); }
  /// Number of elements, or nullopt for infinite sets.
  std::optional<Nat> size() const;
  std::optional<Nat> least() const;
  /// The i-th element in increasing order (0-based); ExhaustedError past the end.
  Nat nth(Nat i) const;
  /// Elements below `bound`, ascending.
  std::vector<Nat> elements_below(Nat bound) const;

  bool subset_of(const UPSet& other) const;
  bool intersects(const UPSet& other) const;

  UPSet operator|(const UPSet& rhs) const;
  UPSet operator&(const UPSet& rhs) const;
  UPSet operator-(const UPSet& rhs) const;  // set difference
  UPSet operator~() const;                  // complement in the naturals

  friend bool operator==(const UPSet&, const UPSet&) = default;

  /// `up(threshold=t, period=p, prefix=<bits>, block=<bits>)`
  std::string to_string() const;

 private:
  void canonicalize();

  std::vector<bool> prefix_;
  std::vector<bool> block_;
};

/// Random set with threshold < max_threshold and period in 1..max_period,
/// each bit set with probability density.
UPSet random_upset(std::mt19937_64& rng, Nat max_threshold, Nat max_period, double density = 0.5);

}  // namespace bethck
