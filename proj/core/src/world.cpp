#include "bethck/world.hpp"

#include <algorithm>

#include "bethck/closure.hpp"
#include "bethck/errors.hpp"
#include "text_cursor.hpp"

namespace bethck {

bool is_quasi_partition(const World& w) {
  if (w.a.intersects(w.b) || w.a.intersects(w.c) || w.b.intersects(w.c)) return false;
  if ((w.a | w.b | w.c) != UPSet::naturals()) return false;
  return w.a.infinite() && w.c.infinite() && (w.b.empty() || w.b.infinite());
}

World base_v() {
  static const World v = [] {
    const UPSet c = sets::three_n_plus_2();
    return World{~closure(c), cl_minus(c), c};
  }();
  return v;
}

World base_u() {
  static const World u = [] {
    const World v = base_v();
    return World{v.a, UPSet::empty_set(), v.b | v.c};
  }();
  return u;
}

bool leq(const World& v, const World& w) { return v.a.subset_of(w.a) && w.c.subset_of(v.c); }

bool in_U(const World& w) {
  const World& v = base_v();
  return is_quasi_partition(w) && leq(v, w) && is_closed(w.a) && w.b.subset_of(v.b);
}

bool in_W2(const World& w) { return w == base_u() || in_U(w); }

World u_world_from_third(const UPSet& c) {
  if (!c.infinite() || !c.subset_of(sets::three_n_plus_2()))
    throw PreconditionError("u_world_from_third: third component must be an infinite subset of 3N+2");
  return World{~closure(c), cl_minus(c), c};
}

namespace {

// {3j + 2 | j in js}
UPSet lift_to_three_n_plus_2(const UPSet& js) {
  static const NatMap lift({{0, 1, 3, 2, 1}});
  return lift.image(js);
}

UPSet random_edits(std::mt19937_64& rng, Nat budget, UPSet js) {
  if (budget == 0) return js;
  std::uniform_int_distribution<Nat> pos(0, budget - 1);
  std::uniform_int_distribution<int> count(0, 3);
  const int inserts = count(rng), deletes = count(rng);
  std::vector<Nat> add, del;
  for (int i = 0; i < inserts; ++i) add.push_back(pos(rng));
  for (int i = 0; i < deletes; ++i) del.push_back(pos(rng));
  return (js | UPSet::from_finite(add)) - UPSet::from_finite(del);
}

}  // namespace

UPSet random_third_component(std::mt19937_64& rng, Nat size_budget) {
  std::uniform_int_distribution<Nat> period_dist(2, 6);
  const Nat q = period_dist(rng);
  std::vector<bool> block(q);
  std::bernoulli_distribution coin(0.5);
  for (Nat i = 0; i < q; ++i) block[i] = coin(rng);
  // at least one member and one non-member per period
  std::uniform_int_distribution<Nat> slot(0, q - 1);
  const auto members = std::count(block.begin(), block.end(), true);
  if (members == 0) block[slot(rng)] = true;
  if (members == static_cast<std::ptrdiff_t>(q)) block[slot(rng)] = false;
  const UPSet js = random_edits(rng, size_budget / 3 + 1, UPSet::from_bits({}, block));
  return lift_to_three_n_plus_2(js);
}

World random_u_world(std::uint64_t seed, Nat size_budget) {
  std::mt19937_64 rng(seed);
  return u_world_from_third(random_third_component(rng, size_budget));
}

World random_successor(const World& w, std::mt19937_64& rng, Nat size_budget) {
  std::uniform_int_distribution<int> pick(0, 9);
  if (w == base_u()) {
    const int r = pick(rng);
    if (r == 0) return w;
    if (r == 1) return base_v();
    return u_world_from_third(random_third_component(rng, size_budget));
  }
  if (!in_U(w)) throw PreconditionError("random_successor: world is not a state of the models");
  const Nat budget = size_budget / 3 + 1;
  for (int attempt = 0; attempt < 64; ++attempt) {
    UPSet sub;
    switch (pick(rng) % 3) {
      case 0:
        return w;
      case 1: {
        // drop a few small elements of w.c
        std::vector<Nat> drop;
        std::uniform_int_distribution<Nat> pos(0, 3 * budget + 2);
        for (int i = 0, n = 1 + pick(rng) % 3; i < n; ++i) drop.push_back(pos(rng));
        sub = w.c - UPSet::from_finite(drop);
        break;
      }
      default:
        sub = w.c & random_third_component(rng, size_budget);
        break;
    }
    if (sub.infinite()) return u_world_from_third(sub);
  }
  return w;
}

bool lemma2_check(int id, const World& w) {
  if (!in_W2(w)) throw PreconditionError("lemma2_check: world is not in W2");
  const World& v = base_v();
  const World& u = base_u();
  const bool member_u = in_U(w);
  switch (id) {
    case 9:
      return leq(u, v);
    case 10:
      return w.b.subset_of(v.b);
    case 11:
      return (closure(sets::three_n()) | n0_set()).subset_of(v.a) && v.a == u.a &&
             u.a.subset_of(w.a);
    case 12:
      return !member_u || (w.c.infinite() && w.c.subset_of(sets::three_n_plus_2()));
    case 13:
      return !member_u || sets::three_n_plus_1().subset_of(w.a | w.b);
    case 14:
      return !member_u || w.b == cl_minus(w.c);
    case 15:
      return !member_u || w.b.intersects(v.b);
    default:
      throw PreconditionError("lemma2_check: property id must be 9..15, got " + std::to_string(id));
  }
}

namespace {

World parse_world(detail::TextCursor& in) {
  if (in.consume_keyword("v")) return base_v();
  if (in.consume_keyword("u")) return base_u();
  if (in.consume_keyword("uworld")) {
    in.expect("{");
    in.expect("c");
    in.expect("=");
    const std::size_t at = in.position();
    UPSet c = detail::parse_upset_expr(in);
    in.consume(";");
    in.expect("}");
    try {
      return u_world_from_third(c);
    } catch (const PreconditionError& e) {
      in.fail(e.what(), at);
    }
  }
  if (!in.consume_keyword("world")) in.fail("expected 'world', 'uworld', 'v' or 'u'");
  in.expect("{");
  World w;
  bool seen[3] = {false, false, false};
  while (!in.consume("}")) {
    const std::size_t at = in.position();
    const std::string name = in.read_ident();
    in.expect("=");
    UPSet s = detail::parse_upset_expr(in);
    if (name == "a") w.a = std::move(s), seen[0] = true;
    else if (name == "b") w.b = std::move(s), seen[1] = true;
    else if (name == "c") w.c = std::move(s), seen[2] = true;
    else in.fail("unknown world component '" + name + "'", at);
    if (!in.consume(";") && in.peek() != '}') in.fail("expected ';' or '}'");
  }
  if (!seen[0] || !seen[1] || !seen[2]) in.fail("world needs components a, b and c");
  return w;
}

}  // namespace

World parse_world_spec(std::string_view text) {
  detail::TextCursor in(text);
  World w = parse_world(in);
  if (!in.at_end()) in.fail("trailing input after world spec");
  return w;
}

namespace detail {
World parse_world_spec(TextCursor& in) { return parse_world(in); }
}  // namespace detail

std::string world_spec(const World& w) {
  if (w == base_v()) return "v";
  if (w == base_u()) return "u";
  if (in_U(w)) return "uworld { c = " + w.c.to_string() + " }";
  return "world { a = " + w.a.to_string() + "; b = " + w.b.to_string() + "; c = " +
         w.c.to_string() + " }";
}

}  // namespace bethck
