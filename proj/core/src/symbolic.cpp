#include "bethck/symbolic.hpp"

#include <random>

#include "bethck/closure.hpp"
#include "bethck/errors.hpp"

namespace bethck {

const char* side_name(Side s) { return s == Side::m1 ? "m1" : "m2"; }

bool is_state(Side side, const World& w) { return side == Side::m1 ? in_W1(w) : in_W2(w); }

AtomExtensions atom_extensions(Side side, const World& w) {
  if (!is_state(side, w))
    throw PreconditionError(std::string("world is not a state of ") + side_name(side));
  return {w.a | w.b, w.a, gamma_preimage(w.a), in_U(w)};
}

std::vector<World> sample_successors(Side side, const World& w, std::uint64_t seed,
                                     std::size_t count) {
  if (!is_state(side, w))
    throw PreconditionError(std::string("world is not a state of ") + side_name(side));
  std::mt19937_64 rng(seed);
  std::vector<World> out;
  if (count == 0) return out;
  out.push_back(w);
  while (out.size() < count) out.push_back(random_successor(w, rng, 64));
  return out;
}

namespace {

// gamma(n) for the least element of b (of v.b when b is empty) is that
// element, and it sits outside a.
std::optional<Nat> axiom2_witness(const World& w) {
  const UPSet& source = w.b.empty() ? base_v().b : w.b;
  const auto least = source.least();
  if (!least) return std::nullopt;
  const UPSet pre = gamma_preimage(UPSet::from_finite({*least}));
  // Prefer a preimage other than the element itself (those are the 3n+1 steps).
  for (Nat n : pre.elements_below(*least + 1))
    if (n != *least) return n;
  return pre.least();
}

}  // namespace

Certificate cert_lsat(Side side, const World& w, int axiom, std::span<const World> successors) {
  if (axiom < 1 || axiom > 3) throw PreconditionError("axiom id must be 1..3");
  const AtomExtensions at_w = atom_extensions(side, w);
  Certificate c;
  c.axiom = axiom;
  auto check = [&](bool ok, const std::string& fact) {
    c.facts.push_back(fact);
    if (!ok) {
      c.pass = false;
      c.failures.push_back(fact);
    }
  };
  for (const World& v : successors) {
    if (!is_state(side, v) || !leq(w, v)) {
      check(false, "sampled world is a successor: " + world_spec(v));
      return c;
    }
  }

  switch (axiom) {
    case 1: {
      // P(gamma(a)) wherever s holds, and Q(gamma(a)) -> R(a) everywhere.
      check(!gamma_image(UPSet::naturals()).intersects(sets::three_n_plus_2()),
            "gamma image avoids 3N+2");
      for (const World& v : successors) {
        ++c.successors_checked;
        const AtomExtensions e = atom_extensions(side, v);
        if (e.s) {
          check(v.c.subset_of(sets::three_n_plus_2()), "third component inside 3N+2 where s holds");
          check(gamma_image(UPSet::naturals()).subset_of(e.p), "P holds on the gamma image where s holds");
        }
        check(gamma_preimage(e.q) == e.r, "Q after gamma equals R");
        check(gamma_image(e.r).subset_of(e.q) && !gamma_image(~e.r).intersects(e.q),
              "gamma maps R into Q and its complement outside Q");
      }
      break;
    }
    case 2: {
      c.witness = axiom2_witness(w);
      check(c.witness.has_value(), "axiom 2 witness exists");
      if (c.witness) check(!at_w.r.contains(*c.witness), "R fails at the witness");
      for (const World& v : successors) {
        ++c.successors_checked;
        const AtomExtensions e = atom_extensions(side, v);
        if (c.witness && e.r.contains(*c.witness)) ++c.witness_absorbed;
        const auto own = axiom2_witness(v);
        check(own && !e.r.contains(*own) && !v.a.contains(gamma(*own)),
              "successor has its own R-counterexample");
      }
      break;
    }
    case 3: {
      if (at_w.s) {
        check(true, "s true");
        for (const World& v : successors) {
          ++c.successors_checked;
          check(in_U(v), "s persists to successor");
        }
      } else {
        check(at_w.p.subset_of(at_w.q), "P extension inside Q extension");
        for (const World& v : successors) {
          ++c.successors_checked;
          const AtomExtensions e = atom_extensions(side, v);
          check(e.s || e.p.subset_of(e.q), "successor has s or P inside Q");
        }
      }
      break;
    }
  }
  return c;
}

}  // namespace bethck
