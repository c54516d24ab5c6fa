#include "bethck/zrelation.hpp"

#include <algorithm>
#include <sstream>

#include "bethck/closure.hpp"
#include "bethck/errors.hpp"
#include "bethck/mutation.hpp"
#include "text_cursor.hpp"

namespace bethck {

ZPair ZPair::extended(Nat f, Nat g) const {
  ZPair out = *this;
  out.left.tuple.push_back(f);
  out.right.tuple.push_back(g);
  return out;
}

std::string ZDiagnosis::failed() const {
  std::string out;
  auto add = [&](bool ok, const char* name) {
    if (ok) return;
    if (!out.empty()) out += ',';
    out += name;
  };
  add(typing, "typing");
  add(a, "a");
  add(b, "b");
  add(c, "c");
  add(d, "d");
  add(e, "e");
  add(f, "f");
  return out;
}

ZDiagnosis z_diagnose(const ZPair& p) {
  ZDiagnosis z;
  const auto& dv = p.left.tuple;
  const auto& ev = p.right.tuple;
  z.typing = p.left.side != p.right.side && dv.size() == ev.size() &&
             is_state(p.left.side, p.left.world) && is_state(p.right.side, p.right.world);
  if (!z.typing) {
    z.first_failure = "typing";
    return z;
  }
  const UPSet tn = sets::three_n_or_plus_2();
  const UPSet n0 = n0_set();
  const World& t = p.left.world;
  const World& u = p.right.world;
  const std::size_t k = dv.size();
  for (std::size_t l = 0; l < k; ++l) {
    z.b = z.b && tn.contains(dv[l]) == tn.contains(ev[l]);
    z.c = z.c && n0.contains(dv[l]) == n0.contains(ev[l]);
    if (t.a.contains(dv[l])) z.e = z.e && u.a.contains(ev[l]);
    if (t.b.contains(dv[l])) z.f = z.f && (u.a.contains(ev[l]) || u.b.contains(ev[l]));
    for (std::size_t m = 0; m < k; ++m) {
      z.a = z.a && (dv[l] == dv[m]) == (ev[l] == ev[m]);
      z.d = z.d && (dv[l] == companion(dv[m])) == (ev[l] == companion(ev[m]));
    }
  }
  const std::string failed = z.failed();
  z.first_failure = failed.substr(0, failed.find(','));
  return z;
}

bool z_member(const ZPair& p) {
  ZDiagnosis z = z_diagnose(p);
  if (active_mutant() == Mutant::drop_condition_d) z.d = true;
  return z.member();
}

bool atomic_preservation(const ZPair& p) {
  const AtomExtensions l = atom_extensions(p.left.side, p.left.world);
  const AtomExtensions r = atom_extensions(p.right.side, p.right.world);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (Pred pred : {Pred::P, Pred::Q, Pred::R})
      if (l.of(pred).contains(p.left.tuple[i]) && !r.of(pred).contains(p.right.tuple[i]))
        return false;
  return true;
}

ElementCase classify_element(const std::vector<Nat>& tuple, Nat x) {
  for (Nat d : tuple)
    if (d == x) return ElementCase::in_tuple;
  for (Nat d : tuple)
    if (companion(d) == x) return ElementCase::companion_of_tuple;
  if (n0_set().contains(x)) return ElementCase::n0;
  if (sets::three_n_or_plus_2().contains(x)) return ElementCase::three_n_or_plus_2;
  return ElementCase::cl_minus;
}

const char* element_case_name(ElementCase c) {
  switch (c) {
    case ElementCase::in_tuple:
      return "in_tuple";
    case ElementCase::companion_of_tuple:
      return "companion_of_tuple";
    case ElementCase::n0:
      return "n0";
    case ElementCase::three_n_or_plus_2:
      return "3N_or_3N+2";
    case ElementCase::cl_minus:
      return "cl_minus";
  }
  return "?";
}

namespace {

UPSet tuple_set(const std::vector<Nat>& t) { return UPSet::from_finite(std::span<const Nat>(t)); }

// {d_l | e_l in x}
UPSet pull_back(const ZPair& p, const UPSet& x) {
  std::vector<Nat> out;
  for (std::size_t l = 0; l < p.size(); ++l)
    if (x.contains(p.right.tuple[l])) out.push_back(p.left.tuple[l]);
  return UPSet::from_finite(std::span<const Nat>(out));
}

std::string pair_context(const ZPair& p) { return zpair_text(p); }

Nat least_of(const UPSet& s, const char* what, const ZPair& p) {
  const auto least = s.least();
  if (!least)
    throw ConstructionFault("empty-choice", std::string(what) + " is empty for " + pair_context(p));
  return *least;
}

std::size_t index_of(const std::vector<Nat>& t, Nat x) {
  return static_cast<std::size_t>(std::find(t.begin(), t.end(), x) - t.begin());
}

std::size_t companion_index(const std::vector<Nat>& t, Nat x) {
  for (std::size_t l = 0; l < t.size(); ++l)
    if (companion(t[l]) == x) return l;
  return t.size();
}

}  // namespace

World succ_witness(const ZPair& p, const World& v) {
  if (!z_member(p)) throw PreconditionError("succ_witness needs a member of Z: " + pair_context(p));
  const Side right = p.right.side;
  if (!is_state(right, v) || !leq(p.right.world, v))
    throw PreconditionError("v must be a successor of the right world inside its model");

  const World& t = p.left.world;
  const UPSet d = tuple_set(p.left.tuple);
  const UPSet pre_g = pull_back(p, v.a);
  const UPSet pre_h = pull_back(p, v.b);
  const UPSet pre_i = pull_back(p, v.c);

  World w;
  w.a = closure((t.a - d) | pre_g);
  UPSet k_base, l_base;
  if (t.b.infinite()) {
    k_base = (t.b - d) | pre_h;
    l_base = (t.c - d) | pre_i;
  } else {
    k_base = (cl_minus(sets::three_n_plus_2()) - d) | pre_h;
    l_base = (sets::three_n_plus_2() - d) | pre_i;
  }
  w.b = active_mutant() == Mutant::k_without_j ? k_base : k_base - w.a;
  w.c = l_base - w.a;

  auto fault = [&](const char* claim, const std::string& why) {
    throw ConstructionFault(claim, why + " for " + pair_context(p) + " with v = " + world_spec(v));
  };
  if (w.a.intersects(w.b) || w.a.intersects(w.c) || w.b.intersects(w.c))
    fault("claim1:disjoint", "components of the witness overlap");
  if ((w.a | w.b | w.c) != UPSet::naturals())
    fault("claim1:cover", "components of the witness do not cover N");
  if (!in_U(w)) fault("claim1:in_U", "witness " + world_spec(w) + " is not in U");
  if (!leq(t, w)) fault("claim2:leq", "left world is not below the witness");
  const ZPair swapped{{right, v, p.right.tuple}, {p.left.side, w, p.left.tuple}};
  if (!z_member(swapped))
    fault("claim3:swapped", "(v, e) Z (w, d) fails on " + z_diagnose(swapped).failed());
  if (!z_member(swapped.swapped()))
    fault("claim3:converse", "(w, d) Z (v, e) fails on " + z_diagnose(swapped.swapped()).failed());
  if (u_world_from_third(w.c) != w) fault("canonical-form", "witness is not determined by its third component");
  return w;
}

Nat forth_element(const ZPair& p, Nat f) {
  if (!z_member(p)) throw PreconditionError("forth_element needs a member of Z: " + pair_context(p));
  const auto& dv = p.left.tuple;
  const auto& ev = p.right.tuple;
  const UPSet cl_e = closure(tuple_set(ev));
  Nat g = 0;
  switch (classify_element(dv, f)) {
    case ElementCase::in_tuple:
      g = ev[index_of(dv, f)];
      break;
    case ElementCase::companion_of_tuple:
      g = companion(ev[companion_index(dv, f)]);
      break;
    case ElementCase::n0:
      g = least_of(n0_set() - cl_e, "N0 minus Cl(e)", p);
      break;
    case ElementCase::three_n_or_plus_2:
      g = least_of(sets::three_n() - cl_e, "3N minus Cl(e)", p);
      break;
    case ElementCase::cl_minus:
      g = least_of(cl_minus(sets::three_n()) - cl_e, "Cl-(3N) minus Cl(e)", p);
      break;
  }
  const ZPair out = p.extended(f, g);
  if (!z_member(out))
    throw ConstructionFault("forth_element",
                            "f = " + std::to_string(f) + " -> g = " + std::to_string(g) +
                                " fails " + z_diagnose(out).failed() + " for " + pair_context(p),
                            static_cast<long long>(g));
  return g;
}

Nat back_element(const ZPair& p, Nat g) {
  if (!z_member(p)) throw PreconditionError("back_element needs a member of Z: " + pair_context(p));
  const auto& dv = p.left.tuple;
  const auto& ev = p.right.tuple;
  const UPSet cl_d = closure(tuple_set(dv));
  const UPSet i_2 = p.left.world.c & sets::three_n_plus_2();
  Nat f = 0;
  switch (classify_element(ev, g)) {
    case ElementCase::in_tuple:
      f = dv[index_of(ev, g)];
      break;
    case ElementCase::companion_of_tuple:
      f = companion(dv[companion_index(ev, g)]);
      break;
    case ElementCase::n0:
      f = least_of(n0_set() - cl_d, "N0 minus Cl(d)", p);
      break;
    case ElementCase::three_n_or_plus_2:
      f = least_of(i_2 - cl_d, "(I & 3N+2) minus Cl(d)", p);
      break;
    case ElementCase::cl_minus:
      f = least_of(cl_minus(i_2) - cl_d, "Cl-(I & 3N+2) minus Cl(d)", p);
      break;
  }
  const ZPair out = p.extended(f, g);
  if (!z_member(out))
    throw ConstructionFault("back_element",
                            "g = " + std::to_string(g) + " -> f = " + std::to_string(f) +
                                " fails " + z_diagnose(out).failed() + " for " + pair_context(p),
                            static_cast<long long>(f));
  return f;
}

namespace {

using detail::TextCursor;

ZPoint parse_point(TextCursor& in) {
  ZPoint pt;
  in.expect("(");
  const std::size_t at = in.position();
  const std::string side = in.read_ident();
  if (side == "m1")
    pt.side = Side::m1;
  else if (side == "m2")
    pt.side = Side::m2;
  else
    in.fail("expected m1 or m2", at);
  in.expect(",");
  pt.world = detail::parse_world_spec(in);
  in.expect(",");
  in.expect("[");
  if (!in.consume("]")) {
    do {
      pt.tuple.push_back(in.read_nat());
    } while (in.consume(","));
    in.expect("]");
  }
  in.expect(")");
  return pt;
}

std::string point_text(const ZPoint& pt) {
  std::ostringstream out;
  out << '(' << side_name(pt.side) << ", " << world_spec(pt.world) << ", [";
  for (std::size_t i = 0; i < pt.tuple.size(); ++i) out << (i ? "," : "") << pt.tuple[i];
  out << "])";
  return out.str();
}

}  // namespace

ZPair parse_zpair(std::string_view text) {
  TextCursor in(text);
  if (!in.consume_keyword("zpair")) in.fail("expected 'zpair'");
  in.expect("{");
  ZPair p;
  bool have_left = false, have_right = false;
  while (!in.consume("}")) {
    const std::size_t at = in.position();
    const std::string key = in.read_ident();
    in.expect("=");
    if (key == "left") {
      p.left = parse_point(in);
      have_left = true;
    } else if (key == "right") {
      p.right = parse_point(in);
      have_right = true;
    } else {
      in.fail("unknown zpair field '" + key + "'", at);
    }
    if (!in.consume(";") && in.peek() != '}') in.fail("expected ';'");
  }
  if (!in.at_end()) in.fail("unexpected trailing input");
  if (!have_left || !have_right) throw ParseError("zpair needs left and right", 0);
  return p;
}

std::string zpair_text(const ZPair& p) {
  return "zpair { left = " + point_text(p.left) + "; right = " + point_text(p.right) + " }";
}

namespace {

World random_world_for(Side side, std::mt19937_64& rng) {
  const int pick = std::uniform_int_distribution<int>(0, 5)(rng);
  if (side == Side::m2 && pick <= 1) return base_u();
  if (pick == 2) return base_v();
  return random_u_world(rng(), 48);
}

// Elements worth trying as tuple entries: small numbers of every class.
Nat random_element(std::mt19937_64& rng) {
  const int kind = std::uniform_int_distribution<int>(0, 5)(rng);
  const Nat j = std::uniform_int_distribution<Nat>(0, 12)(rng);
  switch (kind) {
    case 0:
      return 9 * j + 4;  // N0
    case 1:
      return 3 * j;
    case 2:
      return 3 * j + 2;
    case 3:
      return 9 * j + 1;
    case 4:
      return 9 * j + 7;
    default:
      return std::uniform_int_distribution<Nat>(0, 120)(rng);
  }
}

}  // namespace

ZPair random_member_pair(std::mt19937_64& rng, std::size_t tuple_len) {
  const Side left = std::bernoulli_distribution(0.5)(rng) ? Side::m1 : Side::m2;
  ZPair p{{left, random_world_for(left, rng), {}}, {opposite(left), random_world_for(opposite(left), rng), {}}};
  for (int attempt = 0; p.size() < tuple_len && attempt < 200; ++attempt) {
    Nat f = random_element(rng);
    Nat g_hint = random_element(rng);
    if (!p.left.tuple.empty() && std::bernoulli_distribution(0.3)(rng)) {
      // Extend along existing companion structure.
      const std::size_t l = std::uniform_int_distribution<std::size_t>(0, p.size() - 1)(rng);
      f = companion(p.left.tuple[l]);
      g_hint = companion(p.right.tuple[l]);
    }
    if (z_member(p.extended(f, g_hint))) {
      p = p.extended(f, g_hint);
      continue;
    }
    for (int tries = 0; tries < 60; ++tries) {
      const Nat g = random_element(rng);
      if (z_member(p.extended(f, g))) {
        p = p.extended(f, g);
        break;
      }
    }
  }
  return p;
}

std::vector<Nat> probe_elements(const std::vector<Nat>& tuple, std::mt19937_64& rng, std::size_t count) {
  std::vector<Nat> out;
  auto add = [&](Nat x) {
    if (out.size() < count && std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  };
  const UPSet cl = closure(tuple_set(tuple));
  if (!tuple.empty()) {
    const std::size_t l = std::uniform_int_distribution<std::size_t>(0, tuple.size() - 1)(rng);
    add(tuple[l]);
    for (Nat d : tuple)
      if (companion(d) != d && !std::count(tuple.begin(), tuple.end(), companion(d))) {
        add(companion(d));
        break;
      }
  }
  // Fresh elements of each class outside Cl(tuple).
  for (const UPSet& cls : {n0_set(), sets::three_n(), sets::three_n_plus_2(),
                           UPSet::from_residue(1, 9), UPSet::from_residue(7, 9)}) {
    const UPSet fresh = cls - cl;
    add(fresh.nth(std::uniform_int_distribution<Nat>(0, 6)(rng)));
  }
  while (out.size() < count) add(random_element(rng));
  return out;
}

}  // namespace bethck
