/*
 *   Copyright 2026 The Gradix Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "gradix/syntax.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <set>

#include "gradix/error.hpp"

namespace gradix {

namespace {

enum class Tok { ident, number, string, punct, end };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

const std::set<std::string>& keywords() {
  static const std::set<std::string> k = {
      "JOIN", "UNION", "ISECT", "SEMIJOIN", "MINUS", "SEMIMINUS", "PROJECT", "NABLA", "DELTA", "RES",
      "DIV",  "GSDO",  "GSD",   "GGDO",     "GDDO",  "GCODD",     "GTODD",   "EADOM", "DEE",   "OVER",
      "BY",   "MED",   "UNIV",  "ANY",      "ALL",   "LOAD",      "FROM",    "SCHEME", "LET",  "VAR",
      "EVAL", "EVALPTC", "COMPILE", "SAVE", "TO"};
  return k;
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    const int l = line;
    const int k = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::ident, std::string(src.substr(i, j - i)), l, k});
      advance(j - i);
      continue;
    }
    const bool neg = c == '-' && i + 1 < src.size() && std::isdigit(static_cast<unsigned char>(src[i + 1]));
    if (std::isdigit(static_cast<unsigned char>(c)) || neg) {
      std::size_t j = i + 1;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j + 1 < src.size() && src[j] == '.' && std::isdigit(static_cast<unsigned char>(src[j + 1]))) {
        ++j;
        while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      }
      if (j < src.size() && (src[j] == 'e' || src[j] == 'E')) {
        std::size_t e = j + 1;
        if (e < src.size() && (src[e] == '+' || src[e] == '-')) ++e;
        if (e < src.size() && std::isdigit(static_cast<unsigned char>(src[e]))) {
          while (e < src.size() && std::isdigit(static_cast<unsigned char>(src[e]))) ++e;
          j = e;
        }
      }
      out.push_back({Tok::number, std::string(src.substr(i, j - i)), l, k});
      advance(j - i);
      continue;
    }
    if (c == '"') {
      std::string s;
      advance(1);
      while (true) {
        if (i >= src.size()) throw ParseError("unterminated string", l, k);
        const char d = src[i];
        if (d == '"') {
          advance(1);
          break;
        }
        if (d == '\\' && i + 1 < src.size()) {
          advance(1);
          s += src[i];
          advance(1);
          continue;
        }
        s += d;
        advance(1);
      }
      out.push_back({Tok::string, std::move(s), l, k});
      continue;
    }
    if (src.substr(i, 2) == "->" || src.substr(i, 2) == "=>") {
      out.push_back({Tok::punct, std::string(src.substr(i, 2)), l, k});
      advance(2);
      continue;
    }
    if (std::string_view("()[]{},;:.*&=").find(c) != std::string_view::npos) {
      out.push_back({Tok::punct, std::string(1, c), l, k});
      advance(1);
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", l, k);
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  bool at_end() const { return peek().kind == Tok::end; }

  bool is_kw(const char* kw, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::ident && peek(ahead).text == kw;
  }
  bool is_punct(const char* p, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::punct && peek(ahead).text == p;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    const std::string found = t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
    throw ParseError(msg + ", found " + found, t.line, t.column);
  }

  Token take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  void expect_kw(const char* kw) {
    if (!is_kw(kw)) fail(std::string("expected ") + kw);
    take();
  }
  void expect(const char* p) {
    if (!is_punct(p)) fail(std::string("expected '") + p + "'");
    take();
  }

  std::string identifier(const char* what) {
    if (peek().kind != Tok::ident || keywords().count(peek().text)) fail(std::string("expected ") + what);
    return take().text;
  }

  std::string string_literal() {
    if (peek().kind != Tok::string) fail("expected a quoted string");
    return take().text;
  }

  Scheme attr_list(const char* open, const char* close) {
    expect(open);
    std::vector<Attribute> attrs;
    if (!is_punct(close)) {
      attrs.push_back(identifier("attribute name"));
      while (is_punct(",")) {
        take();
        attrs.push_back(identifier("attribute name"));
      }
    }
    expect(close);
    Scheme s(attrs);
    if (s.size() != attrs.size()) fail("duplicate attribute in scheme");
    return s;
  }

  // ---- relational algebra ------------------------------------------------

  RaExpr ra() {
    RaExpr left = ra_primary();
    while (true) {
      if (is_kw("JOIN")) {
        take();
        left = ra::join(left, ra_primary());
      } else if (is_kw("UNION")) {
        take();
        left = ra::unite(left, ra_primary());
      } else if (is_kw("ISECT")) {
        take();
        left = ra::isect(left, ra_primary());
      } else if (is_kw("SEMIJOIN")) {
        take();
        left = ra::semijoin(left, ra_primary());
      } else if (is_kw("MINUS")) {
        take();
        left = ra::difference(left, ra_primary());
      } else if (is_kw("SEMIMINUS")) {
        take();
        left = ra::semidifference(left, ra_primary());
      } else {
        return left;
      }
    }
  }

  Value value_literal() {
    const Token t = peek();
    if (t.kind == Tok::string) return take().text;
    if (t.kind != Tok::number) fail("expected a value");
    take();
    if (t.text.find_first_of(".eE") == std::string::npos) {
      std::int64_t v = 0;
      auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
      if (ec != std::errc{} || p != t.text.data() + t.text.size()) {
        throw ParseError("integer literal out of range", t.line, t.column);
      }
      return v;
    }
    return std::strtod(t.text.c_str(), nullptr);
  }

  RaExpr ra_primary() {
    const Token t = peek();
    if (is_punct("(")) {
      take();
      RaExpr e = ra();
      expect(")");
      return e;
    }
    if (is_punct("[")) {
      take();
      Attribute a = identifier("attribute name");
      expect(":");
      Value v = value_literal();
      expect("]");
      return ra::singleton(std::move(a), std::move(v));
    }
    if (t.kind != Tok::ident) fail("expected an expression");
    if (!keywords().count(t.text)) return ra::rel(take().text);
    const std::string kw = take().text;
    if (kw == "DEE") {
      expect("(");
      if (peek().kind != Tok::number && peek().kind != Tok::ident) fail("expected a degree");
      std::string lit = take().text;
      expect(")");
      return ra::dee(std::move(lit));
    }
    if (kw == "EADOM") return ra::eadom(attr_list("[", "]"));
    if (kw == "PROJECT") {
      Scheme s = attr_list("[", "]");
      expect("(");
      RaExpr e = ra();
      expect(")");
      return ra::project(std::move(s), std::move(e));
    }
    if (kw == "NABLA" || kw == "DELTA") {
      expect("(");
      RaExpr e = ra();
      expect(")");
      return kw == "NABLA" ? ra::nabla(e) : ra::delta(e);
    }
    if (kw == "RES" || kw == "DIV") {
      expect("(");
      RaExpr a = ra();
      if (kw == "RES") {
        expect("->");
      } else {
        expect_kw("BY");
      }
      RaExpr b = ra();
      expect_kw("OVER");
      RaExpr c = ra();
      expect(")");
      return kw == "RES" ? ra::residuum(a, b, c) : ra::div(a, b, c);
    }
    if (kw == "GSDO" || kw == "GSD" || kw == "GCODD" || kw == "GTODD") {
      expect("(");
      RaExpr a = ra();
      expect(",");
      RaExpr b = ra();
      expect(";");
      expect_kw(kw == "GCODD" || kw == "GTODD" ? "UNIV" : "MED");
      RaExpr c = ra();
      expect(")");
      if (kw == "GSDO") return ra::gsdo(a, b, c);
      if (kw == "GSD") return ra::gsd(a, b, c);
      if (kw == "GCODD") return ra::gcodd(a, b, c);
      return ra::gtodd(a, b, c);
    }
    if (kw == "GGDO" || kw == "GDDO") {
      expect("(");
      RaExpr a = ra();
      expect(",");
      RaExpr b = ra();
      expect(";");
      expect_kw("MED");
      RaExpr c = ra();
      expect(",");
      RaExpr d = ra();
      expect(")");
      return kw == "GGDO" ? ra::ggdo(a, b, c, d) : ra::gddo(a, b, c, d);
    }
    throw ParseError("keyword " + kw + " cannot start an expression", t.line, t.column);
  }

  // ---- calculus ------------------------------------------------------------

  PtcExpr ptc(const VarDecls& vars) {
    PtcExpr left = ptc_conj(vars);
    if (is_punct("=>")) {
      take();
      return ptc::implies(left, ptc(vars));
    }
    return left;
  }

  PtcExpr ptc_conj(const VarDecls& vars) {
    PtcExpr left = ptc_prod(vars);
    while (is_punct("&")) {
      take();
      left = ptc::wedge(left, ptc_prod(vars));
    }
    return left;
  }

  PtcExpr ptc_prod(const VarDecls& vars) {
    PtcExpr left = ptc_unary(vars);
    while (is_punct("*")) {
      take();
      left = ptc::otimes(left, ptc_unary(vars));
    }
    return left;
  }

  TupleVar variable(const VarDecls& vars) {
    const Token t = peek();
    const std::string name = identifier("tuple variable");
    auto it = vars.find(name);
    if (it == vars.end()) throw ParseError("undeclared tuple variable " + name, t.line, t.column);
    return {name, it->second};
  }

  std::vector<TupleVar> variables(const VarDecls& vars, const char* close) {
    std::vector<TupleVar> out;
    if (is_punct(close)) return out;
    out.push_back(variable(vars));
    while (is_punct(",")) {
      take();
      out.push_back(variable(vars));
    }
    return out;
  }

  PtcExpr ptc_unary(const VarDecls& vars) {
    if (is_kw("NABLA") || is_kw("DELTA")) {
      const bool nab = take().text == "NABLA";
      expect("(");
      PtcExpr e = ptc(vars);
      expect(")");
      return nab ? ptc::nabla(e) : ptc::delta(e);
    }
    if (is_kw("ANY") || is_kw("ALL")) {
      const bool any = take().text == "ANY";
      auto bound = variables(vars, ".");
      expect(".");
      PtcExpr body = ptc(vars);
      return any ? ptc::sup(std::move(bound), body) : ptc::inf(std::move(bound), body);
    }
    if (is_punct("(")) {
      take();
      PtcExpr e = ptc(vars);
      expect(")");
      return e;
    }
    RaExpr head;
    if (is_punct("{")) {
      take();
      head = ra();
      expect("}");
    } else {
      head = ra::rel(identifier("relation symbol or formula"));
    }
    expect("(");
    auto args = variables(vars, ")");
    expect(")");
    return ptc::atom(std::move(head), std::move(args));
  }

  // ---- scripts ---------------------------------------------------------------

  ValueType value_type() {
    const Token t = peek();
    const std::string name = identifier("attribute type");
    if (name == "int" || name == "integer") return ValueType::integer;
    if (name == "text" || name == "string") return ValueType::text;
    if (name == "decimal") return ValueType::decimal;
    throw ParseError("unknown attribute type " + name, t.line, t.column);
  }

  std::vector<std::pair<Attribute, ValueType>> type_list() {
    std::vector<std::pair<Attribute, ValueType>> out;
    do {
      if (!out.empty()) take();
      Attribute a = identifier("attribute name");
      expect(":");
      out.emplace_back(std::move(a), value_type());
    } while (is_punct(","));
    return out;
  }

  Script script() {
    Script s;
    VarDecls vars;
    while (!at_end()) {
      if (is_punct(";")) {
        take();
        continue;
      }
      const Token t = peek();
      Statement st{};
      st.line = t.line;
      st.column = t.column;
      if (t.kind != Tok::ident) fail("expected a statement");
      const std::string kw = take().text;
      if (kw == "LOAD") {
        st.kind = Statement::Kind::load;
        st.name = identifier("relation name");
        expect_kw("FROM");
        st.path = string_literal();
        if (is_kw("SCHEME")) {
          take();
          st.types = type_list();
        }
      } else if (kw == "VAR") {
        st.kind = Statement::Kind::var;
        const Token at = peek();
        st.name = identifier("tuple variable");
        expect(":");
        st.scheme = attr_list("{", "}");
        auto [it, inserted] = vars.emplace(st.name, st.scheme);
        if (!inserted && it->second != st.scheme) {
          throw ParseError("tuple variable " + st.name + " redeclared on " + st.scheme.to_string() +
                               ", previously " + it->second.to_string(),
                           at.line, at.column);
        }
      } else if (kw == "LET") {
        st.kind = Statement::Kind::let;
        st.name = identifier("view name");
        expect("=");
        st.ra = ra();
      } else if (kw == "EVAL") {
        st.kind = Statement::Kind::eval;
        st.ra = ra();
      } else if (kw == "EVALPTC" || kw == "COMPILE") {
        st.kind = kw == "EVALPTC" ? Statement::Kind::evalptc : Statement::Kind::compile;
        st.ptc = ptc(vars);
      } else if (kw == "SAVE") {
        st.kind = Statement::Kind::save;
        st.name = identifier("relation name");
        expect_kw("TO");
        st.path = string_literal();
      } else {
        throw ParseError("unknown statement " + kw, t.line, t.column);
      }
      s.statements.push_back(std::move(st));
      if (!at_end() && !is_punct(";") && !(peek().kind == Tok::ident && is_statement(peek().text))) {
        fail("expected end of statement");
      }
    }
    return s;
  }

  static bool is_statement(const std::string& w) {
    return w == "LOAD" || w == "VAR" || w == "LET" || w == "EVAL" || w == "EVALPTC" || w == "COMPILE" ||
           w == "SAVE";
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

RaExpr parse_ra(std::string_view text) {
  Parser p(text);
  RaExpr e = p.ra();
  if (!p.at_end()) p.fail("expected end of expression");
  return e;
}

PtcExpr parse_ptc(std::string_view text, const VarDecls& vars) {
  Parser p(text);
  PtcExpr e = p.ptc(vars);
  if (!p.at_end()) p.fail("expected end of formula");
  return e;
}

std::string print_var_decls(const VarDecls& vars) {
  std::string out;
  for (const auto& [name, s] : vars) out += "VAR " + name + " : " + s.to_string() + "\n";
  return out;
}

Script parse_script(std::string_view text) {
  Parser p(text);
  return p.script();
}

std::vector<std::pair<Attribute, ValueType>> parse_scheme_spec(std::string_view text) {
  Parser p(text);
  if (p.at_end()) return {};
  auto out = p.type_list();
  if (!p.at_end()) p.fail("expected end of scheme specification");
  return out;
}

}  // namespace gradix
