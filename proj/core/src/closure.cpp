#include "bethck/closure.hpp"

#include "bethck/errors.hpp"
#include "bethck/mutation.hpp"

namespace bethck {

namespace {

const NatMap& correct_companion_map() {
  static const NatMap m({
      {0, 3, 3, 1, 1},   // 3N     -> 9N + 1
      {2, 3, 3, 1, 1},   // 3N + 2 -> 9N + 7
      {1, 9, 1, -1, 3},  // 9N + 1 -> 3N
      {4, 9, 1, 0, 1},   // 9N + 4 fixed
      {7, 9, 1, -1, 3},  // 9N + 7 -> 3N + 2
  });
  return m;
}

const NatMap& broken_companion_map() {
  static const NatMap m({
      {0, 3, 3, 1, 1},
      {2, 3, 3, 1, 1},
      {1, 9, 1, -1, 3},
      {4, 9, 1, 0, 1},
      {7, 9, 1, 0, 1},
  });
  return m;
}

}  // namespace

Nat gamma(Nat n) { return n % 3 == 1 ? n : 3 * n + 1; }

const NatMap& gamma_map() {
  static const NatMap m({{0, 3, 3, 1, 1}, {1, 3, 1, 0, 1}, {2, 3, 3, 1, 1}});
  return m;
}

const NatMap& companion_map() {
  return active_mutant() == Mutant::companion_rule ? broken_companion_map()
                                                   : correct_companion_map();
}

Nat companion(Nat n) { return companion_map()(n); }

UPSet companion_image(const UPSet& s) { return companion_map().image(s); }
UPSet closure(const UPSet& s) { return s | companion_image(s); }
UPSet cl_minus(const UPSet& s) { return companion_image(s) - s; }
bool is_closed(const UPSet& s) { return companion_image(s).subset_of(s); }

UPSet gamma_image(const UPSet& s) { return gamma_map().image(s); }
UPSet gamma_preimage(const UPSet& s) { return gamma_map().preimage(s); }

UPSet n0_set() {
  const NatMap& m = companion_map();
  UPSet out;
  for (const auto& r : m.rules()) {
    const auto a = static_cast<std::int64_t>(r.slope);
    const auto c = static_cast<std::int64_t>(r.divisor);
    if (a == c && r.offset == 0) {
      out = out | UPSet::from_residue(r.residue, r.modulus);
      continue;
    }
    // (a - c) n = -offset has at most one solution.
    if (a == c) continue;
    const std::int64_t num = -r.offset;
    const std::int64_t den = a - c;
    if (num % den != 0 || num / den < 0) continue;
    const auto n = static_cast<Nat>(num / den);
    if (n % r.modulus == r.residue) out = out | UPSet::from_finite({n});
  }
  return out;
}

namespace sets {
UPSet three_n() { return UPSet::from_residue(0, 3); }
UPSet three_n_plus_1() { return UPSet::from_residue(1, 3); }
UPSet three_n_plus_2() { return UPSet::from_residue(2, 3); }
UPSet three_n_or_plus_2() { return three_n() | three_n_plus_2(); }
}  // namespace sets

namespace {

struct Lemma1Cache {
  UPSet base = sets::three_n_or_plus_2();
  UPSet base_closure = closure(base);
  UPSet base_cl_minus = cl_minus(base);
};

// Rebuilt when the active mutant changes so mutants see their own closures.
const Lemma1Cache& lemma1_cache() {
  static Mutant built_for = active_mutant();
  static Lemma1Cache cache;
  if (built_for != active_mutant()) {
    built_for = active_mutant();
    cache = Lemma1Cache{};
  }
  return cache;
}

}  // namespace

bool lemma1_check(int id, const UPSet& x, Nat n) {
  const auto& c = lemma1_cache();
  switch (id) {
    case 1:
      return n0_set() == ~c.base_closure;
    case 2:
      return n0_set().infinite();
    case 3: {
      const bool cl = closure(x).finite(), clm = cl_minus(x).finite(), xs = x.finite();
      return cl == clm && clm == xs;
    }
    case 4:
      return companion(companion(n)) == n;
    case 5:
      return c.base.contains(n) == c.base_cl_minus.contains(companion(n));
    case 6:
      return c.base.contains(companion(n)) == c.base_cl_minus.contains(n);
    case 7:
      return cl_minus(x).subset_of(sets::three_n_plus_1());
    case 8: {
      const UPSet complement = ~x;
      return (x == closure(x)) == (complement == closure(complement));
    }
    default:
      throw PreconditionError("lemma1_check: property id must be 1..8, got " + std::to_string(id));
  }
}

bool lemma1_restricted_check(int id, const UPSet& x, Nat n) {
  if ((id == 3 || id == 7) && !x.subset_of(lemma1_cache().base)) return true;
  return lemma1_check(id, x, n);
}

bool lemma1_pointwise(int id, Nat n) {
  const auto& c = lemma1_cache();
  const Nat m = companion(n);
  switch (id) {
    case 1:
      return (m == n) == !c.base_closure.contains(n);
    case 2:
      // inductive step of the witness sequence: N0 is closed under n -> 3n + 1
      return m != n || companion(3 * n + 1) == 3 * n + 1;
    case 3:
      // Cl({n}) = {n, m}; for n in the base its Cl^- part is non-empty
      return !c.base.contains(n) || m != n;
    case 4:
      return companion(m) == n;
    case 5:
      return c.base.contains(n) == c.base_cl_minus.contains(m);
    case 6:
      return c.base.contains(m) == c.base_cl_minus.contains(n);
    case 7:
      return !c.base.contains(n) || m % 3 == 1;
    case 8:
      // {n, m} closed with closed complement: R-components are exactly the companion pairs
      return companion(m) == n && companion(companion(m)) == m;
    default:
      throw PreconditionError("lemma1_pointwise: property id must be 1..8, got " +
                              std::to_string(id));
  }
}

}  // namespace bethck
