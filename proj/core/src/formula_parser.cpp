#include "bethck/errors.hpp"
#include "bethck/formula.hpp"
#include "text_cursor.hpp"

namespace bethck {
namespace {

using detail::TextCursor;

Formula parse_iff(TextCursor& in);

Formula parse_unary(TextCursor& in) {
  if (in.consume("~")) return Formula::negation(parse_unary(in));
  if (in.consume("(")) {
    Formula f = parse_iff(in);
    in.expect(")");
    return f;
  }
  if (in.consume("_|_")) return Formula::bottom();
  const bool universal = in.consume_keyword("forall");
  if (universal || in.consume_keyword("exists")) {
    std::string var = in.read_ident();
    in.expect(".");
    Formula body = parse_unary(in);
    return universal ? Formula::forall(std::move(var), std::move(body))
                     : Formula::exists(std::move(var), std::move(body));
  }
  if (in.consume_keyword("s")) return Formula::s();
  const std::size_t at = in.position();
  for (auto [name, p] : {std::pair{"P", Pred::P}, {"Q", Pred::Q}, {"R", Pred::R}}) {
    if (in.consume_keyword(name)) {
      in.expect("(");
      std::string var = in.read_ident();
      in.expect(")");
      return Formula::atom(p, std::move(var));
    }
  }
  in.fail("expected formula", at);
}

Formula parse_conj(TextCursor& in) {
  Formula f = parse_unary(in);
  while (in.consume("&")) f = Formula::conj(f, parse_unary(in));
  return f;
}

Formula parse_disj(TextCursor& in) {
  Formula f = parse_conj(in);
  while (in.consume("|")) f = Formula::disj(f, parse_conj(in));
  return f;
}

Formula parse_imp(TextCursor& in) {
  Formula lhs = parse_disj(in);
  if (in.consume("->")) return Formula::imp(lhs, parse_imp(in));
  return lhs;
}

Formula parse_iff(TextCursor& in) {
  Formula f = parse_imp(in);
  while (in.consume("<->")) f = Formula::iff(f, parse_imp(in));
  return f;
}

}  // namespace

Formula parse_formula(std::string_view text) {
  TextCursor in(text);
  Formula f = parse_iff(in);
  if (!in.at_end()) in.fail("unexpected trailing input");
  return f;
}

Formula parse_sentence(std::string_view text) {
  Formula f = parse_formula(text);
  auto fv = f.free_vars();
  if (!fv.empty()) throw UnboundVariableError(*fv.begin());
  return f;
}

}  // namespace bethck
