#include "bethck/upset_expr.hpp"

#include <vector>

#include "bethck/closure.hpp"
#include "text_cursor.hpp"

namespace bethck {

namespace detail {

namespace {

std::vector<bool> read_bits(TextCursor& in) {
  std::vector<bool> bits;
  for (char ch : in.read_digits()) {
    if (ch != '0' && ch != '1') in.fail("bitstring may only contain 0 and 1");
    bits.push_back(ch == '1');
  }
  return bits;
}

UPSet parse_up_literal(TextCursor& in) {
  in.expect("(");
  in.expect("threshold");
  in.expect("=");
  const Nat t = in.read_nat();
  in.expect(",");
  in.expect("period");
  in.expect("=");
  const Nat p = in.read_nat();
  in.expect(",");
  in.expect("prefix");
  in.expect("=");
  const std::size_t prefix_at = in.position();
  auto prefix = read_bits(in);
  in.expect(",");
  in.expect("block");
  in.expect("=");
  const std::size_t block_at = in.position();
  auto block = read_bits(in);
  in.expect(")");
  if (prefix.size() != t) in.fail("prefix length differs from threshold", prefix_at);
  if (block.size() != p || p == 0) in.fail("block length differs from period", block_at);
  return UPSet::from_bits(std::move(prefix), std::move(block));
}

UPSet parse_union(TextCursor& in);

UPSet parse_primary(TextCursor& in) {
  const std::size_t at = in.position();
  if (in.consume("(")) {
    UPSet s = parse_union(in);
    in.expect(")");
    return s;
  }
  if (!in.peek_ident_char()) in.fail("expected set expression");
  const std::string word = in.read_ident();
  if (word == "res") {
    in.expect("(");
    const Nat r = in.read_nat();
    if (!in.consume_keyword("mod")) in.fail("expected 'mod'");
    const Nat m = in.read_nat();
    in.expect(")");
    if (m == 0 || r >= m) in.fail("residue must be below a positive modulus", at);
    return UPSet::from_residue(r, m);
  }
  if (word == "fin") {
    in.expect("{");
    std::vector<Nat> elems;
    if (!in.consume("}")) {
      do {
        elems.push_back(in.read_nat());
      } while (in.consume(","));
      in.expect("}");
    }
    return UPSet::from_finite(elems);
  }
  if (word == "up") return parse_up_literal(in);
  if (word == "all") return UPSet::naturals();
  if (word == "none") return UPSet::empty_set();
  if (word == "N0") return n0_set();
  if (word == "cl" || word == "clminus" || word == "companion") {
    in.expect("(");
    UPSet inner = parse_union(in);
    in.expect(")");
    if (word == "cl") return closure(inner);
    if (word == "clminus") return cl_minus(inner);
    return companion_image(inner);
  }
  in.fail("unknown set constructor '" + word + "'", at);
}

UPSet parse_unary(TextCursor& in) {
  if (in.consume("~")) return ~parse_unary(in);
  return parse_primary(in);
}

UPSet parse_inter(TextCursor& in) {
  UPSet s = parse_unary(in);
  while (in.consume("&")) s = s & parse_unary(in);
  return s;
}

UPSet parse_diff(TextCursor& in) {
  UPSet s = parse_inter(in);
  while (in.consume("\\")) s = s - parse_inter(in);
  return s;
}

UPSet parse_union(TextCursor& in) {
  UPSet s = parse_diff(in);
  while (in.consume("|")) s = s | parse_diff(in);
  return s;
}

}  // namespace

UPSet parse_upset_expr(TextCursor& in) { return parse_union(in); }

}  // namespace detail

UPSet parse_upset_expr(std::string_view text) {
  detail::TextCursor in(text);
  UPSet s = detail::parse_upset_expr(in);
  if (!in.at_end()) in.fail("trailing input after set expression");
  return s;
}

}  // namespace bethck
