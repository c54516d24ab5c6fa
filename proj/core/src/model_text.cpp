#include <sstream>

#include "bethck/errors.hpp"
#include "bethck/finite_model.hpp"
#include "text_cursor.hpp"

namespace bethck {
namespace {

using detail::TextCursor;

int read_index(TextCursor& in, int bound, const char* what) {
  const std::size_t at = in.position();
  const Nat n = in.read_nat();
  if (bound >= 0 && n >= static_cast<Nat>(bound))
    in.fail(std::string(what) + " index out of range", at);
  return static_cast<int>(n);
}

std::vector<int> read_index_set(TextCursor& in, int bound, const char* what) {
  std::vector<int> out;
  in.expect("{");
  if (in.consume("}")) return out;
  do {
    out.push_back(read_index(in, bound, what));
  } while (in.consume(","));
  in.expect("}");
  return out;
}

}  // namespace

FiniteCDModel parse_model(std::string_view text) {
  TextCursor in(text);
  if (!in.consume_keyword("model")) in.fail("expected 'model'");
  in.expect("{");

  int worlds = -1, dom = -1;
  std::vector<std::pair<int, int>> order;
  struct Entry {
    int pred;  // 0..2, or 3 for s
    int world;
    std::vector<int> elems;
    std::size_t at;
  };
  std::vector<Entry> entries;

  while (!in.consume("}")) {
    const std::size_t at = in.position();
    const std::string key = in.read_ident();
    if (key == "worlds" || key == "dom") {
      in.expect("=");
      const int n = read_index(in, -1, key.c_str());
      if (n < 1 || n > 32) in.fail(key + " must be between 1 and 32", at);
      (key == "worlds" ? worlds : dom) = n;
    } else if (key == "order") {
      in.expect("=");
      in.expect("{");
      if (!in.consume("}")) {
        do {
          in.expect("(");
          const int i = read_index(in, -1, "world");
          in.expect(",");
          const int j = read_index(in, -1, "world");
          in.expect(")");
          order.emplace_back(i, j);
        } while (in.consume(","));
        in.expect("}");
      }
    } else if (key == "P" || key == "Q" || key == "R") {
      in.expect("[");
      const int w = read_index(in, -1, "world");
      in.expect("]");
      in.expect("=");
      entries.push_back({key == "P" ? 0 : key == "Q" ? 1 : 2, w, read_index_set(in, -1, "element"), at});
    } else if (key == "s") {
      in.expect("=");
      entries.push_back({3, -1, read_index_set(in, -1, "world"), at});
    } else {
      in.fail("unknown model field '" + key + "'", at);
    }
    if (!in.consume(";") && in.peek() != '}') in.fail("expected ';'");
  }
  if (!in.at_end()) in.fail("unexpected trailing input");
  if (worlds < 0) in.fail("missing 'worlds'", 0);
  if (dom < 0) in.fail("missing 'dom'", 0);

  FiniteCDModel m;
  m.worlds = worlds;
  m.domain = dom;
  m.up.assign(worlds, 0);
  for (int w = 0; w < worlds; ++w) m.up[w] = WorldMask{1} << w;
  for (auto [i, j] : order) {
    if (i >= worlds || j >= worlds) throw ParseError("order mentions an unknown world", 0);
    m.up[i] |= WorldMask{1} << j;
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (int w = 0; w < worlds; ++w)
      for (int v = 0; v < worlds; ++v)
        if (m.leq(w, v) && (m.up[v] & ~m.up[w])) {
          m.up[w] |= m.up[v];
          changed = true;
        }
  }
  for (auto& e : m.ext) e.assign(dom, 0);
  for (const auto& e : entries) {
    if (e.pred == 3) {
      for (int w : e.elems) {
        if (w >= worlds) throw ParseError("s mentions an unknown world", e.at);
        m.s |= WorldMask{1} << w;
      }
      continue;
    }
    if (e.world >= worlds) throw ParseError("extension for an unknown world", e.at);
    for (int a : e.elems) {
      if (a >= dom) throw ParseError("element outside the domain", e.at);
      m.set(static_cast<Pred>(e.pred), e.world, a, true);
    }
  }
  m.validate();
  return m;
}

std::string model_text(const FiniteCDModel& m) {
  std::ostringstream out;
  out << "model { worlds=" << m.worlds << "; order={";
  bool first = true;
  for (int w = 0; w < m.worlds; ++w)
    for (int v = 0; v < m.worlds; ++v)
      if (v != w && m.leq(w, v)) {
        out << (first ? "" : ",") << '(' << w << ',' << v << ')';
        first = false;
      }
  out << "}; dom=" << m.domain << ';';
  for (Pred p : {Pred::P, Pred::Q, Pred::R}) {
    for (int w = 0; w < m.worlds; ++w) {
      out << ' ' << pred_letter(p) << '[' << w << "]={";
      bool first_elem = true;
      for (int a = 0; a < m.domain; ++a)
        if (m.holds(p, w, a)) {
          out << (first_elem ? "" : ",") << a;
          first_elem = false;
        }
      out << "};";
    }
  }
  out << " s={";
  bool first_world = true;
  for (int w = 0; w < m.worlds; ++w)
    if (m.forces_s(w)) {
      out << (first_world ? "" : ",") << w;
      first_world = false;
    }
  out << "} }";
  return out.str();
}

}  // namespace bethck
