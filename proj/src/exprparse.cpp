#include "wf/exprparse.hpp"

#include <cctype>

#include "wf/qmgraph.hpp"

namespace wf {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  bool peek(char c) {
    skip_ws();
    return i < s.size() && s[i] == c;
  }
  bool eat(char c) {
    if (!peek(c)) return false;
    ++i;
    return true;
  }
  void expect(char c, const std::string& what) {
    if (!eat(c)) throw parse_error(i, "expected '" + std::string(1, c) + "' " + what);
  }
  std::int64_t integer() {
    skip_ws();
    std::size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    std::size_t digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
    if (digits == 0) throw parse_error(start, "expected an integer");
    return std::stoll(s.substr(start, i - start));
  }
  std::string ident() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' || s[i] == '-'))
      ++i;
    if (i == start) throw parse_error(start, "expected an identifier");
    return s.substr(start, i - start);
  }
};

// `^3` or `^(1,-2)`; default exponent 1.
GroupElem parse_payload(Cursor& c, const GroupSpec& spec) {
  std::int64_t e = 1;
  std::vector<std::int64_t> tuple;
  bool has_tuple = false;
  if (c.eat('^')) {
    if (c.eat('(')) {
      has_tuple = true;
      tuple.push_back(c.integer());
      while (c.eat(',')) tuple.push_back(c.integer());
      c.expect(')', "to close the tuple");
    } else {
      e = c.integer();
    }
  }
  switch (spec.kind) {
    case SpecKind::cyclic:
      if (has_tuple) throw parse_error(c.i, "tuple exponent on a cyclic vertex group");
      return canonical(spec, GroupElem::integer(e));
    case SpecKind::table:
      if (has_tuple || e < 0) throw parse_error(c.i, "table elements are indexed by nonnegative integers");
      return canonical(spec, GroupElem::integer(e));
    case SpecKind::zd:
      if (!has_tuple) {
        if (spec.d != 1) throw parse_error(c.i, "expected a ^(..) tuple for a rank-" + std::to_string(spec.d) + " group");
        tuple.assign(1, e);
      }
      return canonical(spec, GroupElem::vec(tuple));
    case SpecKind::freeprod:
      throw parse_error(c.i, "free-product vertex groups are only supported through JSON words");
  }
  throw parse_error(c.i, "unknown vertex group kind");
}

}  // namespace

Canon parse_gp_word(const GPContext& ctx, const std::string& text) {
  if (ctx.is_lazy())
    throw std::invalid_argument("expressions address finite contexts; use JSON words for lazy ones");
  Cursor c{text};
  Word w;
  if (c.done()) throw parse_error(0, "empty expression");
  for (;;) {
    c.skip_ws();
    std::size_t at = c.i;
    if (c.eat('1')) {
      // identity atom
    } else {
      std::string name = c.ident();
      auto idx = ctx.graph().index_of(name);
      if (!idx) throw parse_error(at, "unknown vertex: " + name);
      VertexRef v = VertexRef::finite(*idx);
      GroupElem payload = parse_payload(c, ctx.vertex_spec(v));
      if (!(payload == identity(ctx.vertex_spec(v)))) w.push_back(Syllable{v, payload});
    }
    if (c.done()) break;
    c.expect('*', "between factors");
  }
  return canonicalize(ctx, w);
}

std::string render_gp_word(const GPContext& ctx, const Canon& w) {
  return display_word(ctx, w.word());
}

WreathElem parse_wreath(const WreathCtx& ctx, const std::string& text) {
  Cursor c{text};
  WreathElem out = w_identity(ctx);
  if (c.done()) throw parse_error(0, "empty expression");
  for (;;) {
    c.skip_ws();
    std::size_t at = c.i;
    WreathElem atom = w_identity(ctx);
    bool skip_pow = false;
    if (c.eat('1')) {
      skip_pow = true;  // identity atom
    } else {
      std::string name = c.ident();
      if (name == "lamp") {
        c.expect('(', "after lamp");
        c.skip_ws();
        std::size_t pos_start = c.i;
        // The value is the segment after the last top-level comma; the
        // position key may itself contain commas (Z^d tuples).
        std::size_t close = c.i;
        std::size_t last_comma = std::string::npos;
        int depth = 0;
        while (close < c.s.size()) {
          char ch = c.s[close];
          if (ch == '(') ++depth;
          if (ch == ')') {
            if (depth == 0) break;
            --depth;
          }
          if (ch == ',' && depth == 0) last_comma = close;
          ++close;
        }
        if (close >= c.s.size()) throw parse_error(pos_start, "unterminated lamp(...)");
        if (last_comma == std::string::npos)
          throw parse_error(pos_start, "lamp(...) needs a position and a value");
        std::string pos_text = text.substr(pos_start, last_comma - pos_start);
        while (!pos_text.empty() && std::isspace(static_cast<unsigned char>(pos_text.back())))
          pos_text.pop_back();
        GroupElem pos;
        try {
          pos = dec_key(ctx.B, pos_text);
        } catch (const parse_error& e) {
          throw parse_error(pos_start + e.pos, "bad lamp position: " + pos_text);
        }
        c.i = last_comma + 1;
        GroupElem val;
        if (ctx.A.kind == SpecKind::cyclic || ctx.A.kind == SpecKind::table) {
          val = canonical(ctx.A, GroupElem::integer(c.integer()));
        } else {
          throw parse_error(c.i, "lamp values in expressions need a cyclic or table lamp group");
        }
        c.expect(')', "to close lamp(...)");
        atom = w_lamp(ctx, pos, val);
      } else if (name == "t") {
        if (ctx.B.kind == SpecKind::cyclic) {
          atom = w_cursor(ctx, GroupElem::integer(1));
        } else if (ctx.B.kind == SpecKind::zd) {
          atom = w_identity(ctx);  // exponent tuple supplies the move
          if (!c.peek('^')) throw parse_error(c.i, "t needs ^(..) over Z^d");
          c.eat('^');
          c.expect('(', "for the Z^d move");
          std::vector<std::int64_t> tuple{c.integer()};
          while (c.eat(',')) tuple.push_back(c.integer());
          c.expect(')', "to close the tuple");
          atom = w_cursor(ctx, canonical(ctx.B, GroupElem::vec(tuple)));
          skip_pow = true;
        } else {
          throw parse_error(at, "t addresses Z or Z^d bases; use z0, z1, ... over free products");
        }
      } else if (name.size() >= 2 && name[0] == 'z' && ctx.B.kind == SpecKind::freeprod) {
        std::size_t idx = 0;
        std::int64_t f = -1;
        try {
          f = std::stoll(name.substr(1), &idx);
        } catch (const std::exception&) {
          throw parse_error(at, "unknown atom: " + name);
        }
        if (idx + 1 != name.size() || f < 0 ||
            f >= static_cast<std::int64_t>(ctx.B.moduli.size()))
          throw parse_error(at, "unknown factor generator: " + name);
        atom = w_cursor(ctx, GroupElem::word({FpSyllable{static_cast<std::int32_t>(f), 1}}));
      } else {
        throw parse_error(at, "unknown atom: " + name);
      }
    }
    if (!skip_pow && c.peek('^')) {
      c.eat('^');
      atom = w_pow(ctx, atom, c.integer());
    }
    out = w_mul(ctx, out, atom);
    if (c.done()) break;
    c.expect('*', "between factors");
  }
  return out;
}

std::string render_wreath(const WreathCtx& ctx, const WreathElem& x) {
  std::string out;
  for (const auto& [k, v] : x.lamps) {
    if (!out.empty()) out += '*';
    std::string val = v.is_int() ? std::to_string(v.as_int()) : "?";
    out += "lamp(" + enc_key(ctx.B, k) + "," + val + ")";
  }
  if (!(x.cursor == identity(ctx.B))) {
    if (!out.empty()) out += '*';
    if (ctx.B.kind == SpecKind::cyclic) {
      out += "t^" + std::to_string(x.cursor.as_int());
    } else if (ctx.B.kind == SpecKind::zd) {
      out += "t^(";
      const auto& vec = x.cursor.as_vec();
      for (std::size_t i = 0; i < vec.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(vec[i]);
      }
      out += ')';
    } else {
      bool first = true;
      for (const auto& s : x.cursor.as_word()) {
        if (!first) out += '*';
        first = false;
        out += "z" + std::to_string(s.factor) + "^" + std::to_string(s.val);
      }
    }
  }
  return out.empty() ? "1" : out;
}

Laurent parse_laurent(const std::string& text, std::int64_t fallback_mod) {
  Cursor c{text};
  std::map<std::int64_t, std::int64_t> coeffs;
  std::int64_t modulus = fallback_mod;
  if (c.done()) throw parse_error(0, "empty expression");
  bool negate = c.eat('-');
  for (;;) {
    c.skip_ws();
    std::int64_t coeff = 1;
    std::int64_t deg = 0;
    bool saw_x = false;
    if (c.peek('X')) {
      c.eat('X');
      saw_x = true;
      deg = 1;
    } else {
      coeff = c.integer();
      if (c.eat('*')) {
        c.skip_ws();
        std::size_t at = c.i;
        if (!c.eat('X')) throw parse_error(at, "expected X after '*'");
        saw_x = true;
        deg = 1;
      }
    }
    if (saw_x && c.eat('^')) deg = c.integer();
    coeffs[deg] += negate ? -coeff : coeff;

    c.skip_ws();
    if (c.eat('+')) {
      negate = false;
      continue;
    }
    if (c.eat('-')) {
      negate = true;
      continue;
    }
    break;
  }
  if (c.eat('(')) {
    c.skip_ws();
    std::size_t at = c.i;
    std::string word = c.ident();
    if (word != "mod") throw parse_error(at, "expected 'mod'");
    std::int64_t k = c.integer();
    if (k < 0) throw parse_error(at, "modulus must be >= 0");
    if (fallback_mod != 0 && k != fallback_mod)
      throw parse_error(at, "modulus annotation conflicts with --mod");
    modulus = k;
    c.expect(')', "to close (mod k)");
  }
  if (!c.done()) throw parse_error(c.i, "trailing characters");
  return l_make(modulus, coeffs);
}

std::string render_laurent(const Laurent& p) {
  if (p.c.empty()) return p.k > 0 ? "0 (mod " + std::to_string(p.k) + ")" : "0";
  std::string out;
  bool first = true;
  for (const auto& [d, coeff] : p.c) {
    std::int64_t a = coeff;
    if (first) {
      if (a < 0) {
        out += '-';
        a = -a;
      }
    } else {
      out += a < 0 ? '-' : '+';
      if (a < 0) a = -a;
    }
    first = false;
    if (d == 0) {
      out += std::to_string(a);
    } else {
      if (a != 1) out += std::to_string(a) + "*";
      out += "X";
      if (d != 1) out += "^" + std::to_string(d);
    }
  }
  if (p.k > 0) out += " (mod " + std::to_string(p.k) + ")";
  return out;
}

GWord parse_gword(const std::string& text) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (ch != 'a' && ch != 'b' && ch != 'c' && ch != 'd')
      throw parse_error(i, std::string("letter outside {a,b,c,d}: '") + ch + "'");
  }
  return text;
}

}  // namespace wf
