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

#include "gradix/algebra.hpp"

#include <cmath>

#include "gradix/error.hpp"

namespace gradix {

bool operator==(const RaNode& a, const RaNode& b) {
  if (a.op != b.op || a.name != b.name || a.attribute != b.attribute || a.value != b.value ||
      a.scheme != b.scheme || a.kids.size() != b.kids.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.kids.size(); ++i) {
    if (!equal(a.kids[i], b.kids[i])) return false;
  }
  return true;
}

bool equal(const RaExpr& a, const RaExpr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

namespace ra {

namespace {
RaExpr node(RaOp op, std::vector<RaExpr> kids) {
  auto n = std::make_shared<RaNode>();
  n->op = op;
  n->kids = std::move(kids);
  return n;
}
}  // namespace

RaExpr rel(std::string name) {
  auto n = std::make_shared<RaNode>();
  n->op = RaOp::rel;
  n->name = std::move(name);
  return n;
}

RaExpr dee(std::string literal) {
  auto n = std::make_shared<RaNode>();
  n->op = RaOp::dee;
  n->name = std::move(literal);
  return n;
}

RaExpr singleton(Attribute a, Value v) {
  auto n = std::make_shared<RaNode>();
  n->op = RaOp::singleton;
  n->attribute = std::move(a);
  n->value = std::move(v);
  return n;
}

RaExpr unite(RaExpr a, RaExpr b) { return node(RaOp::unite, {std::move(a), std::move(b)}); }
RaExpr isect(RaExpr a, RaExpr b) { return node(RaOp::isect, {std::move(a), std::move(b)}); }
RaExpr join(RaExpr a, RaExpr b) { return node(RaOp::join, {std::move(a), std::move(b)}); }

RaExpr project(Scheme s, RaExpr e) {
  auto n = std::make_shared<RaNode>();
  n->op = RaOp::project;
  n->scheme = std::move(s);
  n->kids = {std::move(e)};
  return n;
}

RaExpr nabla(RaExpr e) { return node(RaOp::nabla, {std::move(e)}); }
RaExpr delta(RaExpr e) { return node(RaOp::delta, {std::move(e)}); }
RaExpr residuum(RaExpr left, RaExpr right, RaExpr range) {
  return node(RaOp::residuum, {std::move(left), std::move(right), std::move(range)});
}
RaExpr div(RaExpr dividend, RaExpr divisor, RaExpr range) {
  return node(RaOp::div_ranged, {std::move(dividend), std::move(divisor), std::move(range)});
}

RaExpr eadom(Scheme s) {
  auto n = std::make_shared<RaNode>();
  n->op = RaOp::eadom;
  n->scheme = std::move(s);
  return n;
}

RaExpr semijoin(RaExpr a, RaExpr b) { return node(RaOp::semijoin, {std::move(a), std::move(b)}); }
RaExpr difference(RaExpr a, RaExpr b) { return node(RaOp::difference, {std::move(a), std::move(b)}); }
RaExpr semidifference(RaExpr a, RaExpr b) { return node(RaOp::semidifference, {std::move(a), std::move(b)}); }
RaExpr gsdo(RaExpr dividend, RaExpr divisor, RaExpr mediator) {
  return node(RaOp::gsdo, {std::move(dividend), std::move(divisor), std::move(mediator)});
}
RaExpr gsd(RaExpr dividend, RaExpr divisor, RaExpr mediator) {
  return node(RaOp::gsd, {std::move(dividend), std::move(divisor), std::move(mediator)});
}
RaExpr ggdo(RaExpr dividend, RaExpr divisor, RaExpr mediator1, RaExpr mediator2) {
  return node(RaOp::ggdo, {std::move(dividend), std::move(divisor), std::move(mediator1), std::move(mediator2)});
}
RaExpr gddo(RaExpr dividend, RaExpr divisor, RaExpr mediator1, RaExpr mediator2) {
  return node(RaOp::gddo, {std::move(dividend), std::move(divisor), std::move(mediator1), std::move(mediator2)});
}
RaExpr gcodd(RaExpr dividend, RaExpr divisor, RaExpr universe) {
  return node(RaOp::gcodd, {std::move(dividend), std::move(divisor), std::move(universe)});
}
RaExpr gtodd(RaExpr dividend, RaExpr divisor, RaExpr universe) {
  return node(RaOp::gtodd, {std::move(dividend), std::move(divisor), std::move(universe)});
}

}  // namespace ra

Catalog catalog_of(const DatabaseInstance& instance) {
  Catalog c;
  for (const auto& [name, t] : instance.tables()) c.emplace(name, t.scheme());
  return c;
}

// ---------------------------------------------------------------------------
// Static schemes.

namespace {

const char* keyword(RaOp op) {
  switch (op) {
    case RaOp::rel: return "relation";
    case RaOp::dee: return "DEE";
    case RaOp::singleton: return "singleton";
    case RaOp::unite: return "UNION";
    case RaOp::isect: return "ISECT";
    case RaOp::join: return "JOIN";
    case RaOp::project: return "PROJECT";
    case RaOp::nabla: return "NABLA";
    case RaOp::delta: return "DELTA";
    case RaOp::residuum: return "RES";
    case RaOp::div_ranged: return "DIV";
    case RaOp::eadom: return "EADOM";
    case RaOp::semijoin: return "SEMIJOIN";
    case RaOp::difference: return "MINUS";
    case RaOp::semidifference: return "SEMIMINUS";
    case RaOp::gsdo: return "GSDO";
    case RaOp::gsd: return "GSD";
    case RaOp::ggdo: return "GGDO";
    case RaOp::gddo: return "GDDO";
    case RaOp::gcodd: return "GCODD";
    case RaOp::gtodd: return "GTODD";
  }
  return "?";
}

[[noreturn]] void scheme_fail(RaOp op, const std::string& msg) {
  throw SchemeError(std::string(keyword(op)) + ": " + msg);
}

void need_equal(RaOp op, const Scheme& a, const Scheme& b, const char* what) {
  if (a != b) scheme_fail(op, std::string(what) + " " + a.to_string() + " and " + b.to_string() + " differ");
}

void need_disjoint(RaOp op, const Scheme& a, const Scheme& b, const char* what) {
  if (!a.disjoint_with(b)) {
    scheme_fail(op, std::string(what) + " " + a.to_string() + " and " + b.to_string() + " overlap");
  }
}

/// Scheme roles of the Darwen rewrite.
struct DarwenSchemes {
  Scheme r1p, r2p, r3p, r4p;
};

DarwenSchemes darwen_schemes(const Scheme& r1, const Scheme& r2, const Scheme& r3, const Scheme& r4) {
  const Scheme r12 = r1.unite(r2);
  return {r4.intersect(r12).unite(r1.intersect(r3)), r4.minus(r12), r3.intersect(r1.unite(r4)),
          r4.unite(r1.intersect(r3))};
}

}  // namespace

Scheme scheme_of(const RaExpr& e, const Catalog& catalog) {
  std::vector<Scheme> k;
  for (const auto& kid : e->kids) k.push_back(scheme_of(kid, catalog));
  switch (e->op) {
    case RaOp::rel: {
      auto it = catalog.find(e->name);
      if (it == catalog.end()) throw UnboundSymbol("relation symbol " + e->name + " is not bound");
      return it->second;
    }
    case RaOp::dee: return Scheme{};
    case RaOp::singleton: return Scheme{e->attribute};
    case RaOp::unite:
    case RaOp::isect:
    case RaOp::difference:
      need_equal(e->op, k[0], k[1], "operand schemes");
      return k[0];
    case RaOp::join: return k[0].unite(k[1]);
    case RaOp::project:
      if (!e->scheme.is_subset_of(k[0])) {
        scheme_fail(e->op, e->scheme.to_string() + " is not a subset of " + k[0].to_string());
      }
      return e->scheme;
    case RaOp::nabla:
    case RaOp::delta: return k[0];
    case RaOp::residuum:
      need_equal(e->op, k[0], k[2], "antecedent and range schemes");
      need_equal(e->op, k[1], k[2], "consequent and range schemes");
      return k[2];
    case RaOp::div_ranged:
      need_disjoint(e->op, k[2], k[1], "range and divisor schemes");
      need_equal(e->op, k[0], k[2].unite(k[1]), "dividend scheme and range u divisor");
      return k[2];
    case RaOp::eadom: return e->scheme;
    case RaOp::semijoin:
    case RaOp::semidifference: return k[0];
    case RaOp::gsdo:
      need_disjoint(e->op, k[0], k[1], "dividend and divisor schemes");
      need_equal(e->op, k[2], k[0].unite(k[1]), "mediator scheme and dividend u divisor");
      return k[0];
    case RaOp::gsd:
      need_disjoint(e->op, k[0], k[1], "dividend and divisor schemes");
      return k[0];
    case RaOp::ggdo: {
      need_disjoint(e->op, k[0], k[1], "dividend and divisor schemes");
      if (!k[0].is_subset_of(k[2])) scheme_fail(e->op, "first mediator must contain the dividend scheme");
      const Scheme s = k[2].minus(k[0]);
      need_disjoint(e->op, s, k[1], "mediator and divisor schemes");
      need_equal(e->op, k[3], s.unite(k[1]), "second mediator scheme and S u T");
      return k[0].unite(k[1]);
    }
    case RaOp::gddo: return k[0].unite(k[1]);
    case RaOp::gcodd:
      if (!k[1].is_subset_of(k[0])) scheme_fail(e->op, "divisor scheme must be contained in the dividend scheme");
      need_equal(e->op, k[2], k[0].minus(k[1]), "universe scheme and dividend \\ divisor");
      return k[2];
    case RaOp::gtodd: {
      const Scheme s = k[0].intersect(k[1]);
      need_equal(e->op, k[2], k[0].minus(s).unite(k[1].minus(s)), "universe scheme and R u T");
      return k[2];
    }
  }
  throw SchemeError("unknown expression node");
}

void collect_constants(const RaExpr& e, Constants& out) {
  if (e->op == RaOp::singleton) out[e->attribute].insert(e->value);
  for (const auto& k : e->kids) collect_constants(k, out);
}

Constants constants_of(const RaExpr& e) {
  Constants c;
  collect_constants(e, c);
  return c;
}

namespace {
void collect_symbols(const RaExpr& e, std::set<std::string>& out) {
  if (e->op == RaOp::rel) out.insert(e->name);
  for (const auto& k : e->kids) collect_symbols(k, out);
}
}  // namespace

std::set<std::string> symbols_of(const RaExpr& e) {
  std::set<std::string> s;
  collect_symbols(e, s);
  return s;
}

// ---------------------------------------------------------------------------
// Active domains.

RankedDataTable adom(const Attribute& y, const RankedDataTable& d) {
  if (!d.scheme().contains(y)) throw SchemeError("attribute " + y + " not in " + d.scheme().to_string());
  return project(nabla(d), Scheme{y});
}

std::set<Value> eadom_values(const DatabaseInstance& instance, const Attribute& y, const Constants& extra) {
  std::set<Value> vals;
  for (const auto& [name, t] : instance.tables()) {
    if (!t.scheme().contains(y)) continue;
    for (const auto& row : t.rows()) vals.insert(row.first.at(y));
  }
  if (auto it = extra.find(y); it != extra.end()) vals.insert(it->second.begin(), it->second.end());
  return vals;
}

RankedDataTable eadom(const DatabaseInstance& instance, const Scheme& r, const Constants& extra) {
  const auto& l = instance.lattice();
  std::vector<Tuple> acc{Tuple{}};
  for (const auto& y : r) {
    const auto vals = eadom_values(instance, y, extra);
    std::vector<Tuple> next;
    next.reserve(acc.size() * vals.size());
    for (const auto& t : acc) {
      for (const auto& v : vals) next.push_back(t.join(Tuple{{y, v}}));
    }
    acc = std::move(next);
  }
  RankedDataTable out(r, l);
  for (const auto& t : acc) out.set(t, l->top());
  return out;
}

RaExpr eadom_ra_expr(const Scheme& r, const Catalog& scope, const Constants& constants) {
  if (r.empty()) return ra::dee("1");
  RaExpr out;
  for (const auto& y : r) {
    RaExpr ay;
    const Scheme sy{y};
    for (const auto& [name, scheme] : scope) {
      if (!scheme.contains(y)) continue;
      RaExpr part = ra::project(sy, ra::nabla(ra::rel(name)));
      ay = ay ? ra::unite(ay, part) : part;
    }
    if (auto it = constants.find(y); it != constants.end()) {
      for (const auto& v : it->second) {
        RaExpr part = ra::singleton(y, v);
        ay = ay ? ra::unite(ay, part) : part;
      }
    }
    if (!ay) throw PreconditionError("attribute " + y + " occurs in no relation symbol in scope and no constant");
    out = out ? ra::join(out, ay) : ay;
  }
  return out;
}

RaExpr expand_eadom(const RaExpr& e, const Catalog& scope, const Constants& constants) {
  if (e->op == RaOp::eadom) return eadom_ra_expr(e->scheme, scope, constants);
  if (e->kids.empty()) return e;
  auto n = std::make_shared<RaNode>(*e);
  for (auto& k : n->kids) k = expand_eadom(k, scope, constants);
  return n;
}

// ---------------------------------------------------------------------------
// Sugar expansion.

namespace {

RaExpr empty_on(const Scheme& s) {
  return s.empty() ? ra::dee("0") : ra::join(ra::dee("0"), ra::eadom(s));
}

RaExpr difference_core(const RaExpr& a, const RaExpr& b, const Scheme& s) {
  return ra::residuum(b, empty_on(s), a);
}

/// d1 JOIN DIV(RES(divisor JOIN EADOM[R] -> mediator OVER EADOM[RS]) BY EADOM[S] OVER EADOM[R]).
RaExpr small_divide_core(const RaExpr& d1, const RaExpr& divisor, const RaExpr& mediator, const Scheme& r,
                         const Scheme& s) {
  const RaExpr e = ra::residuum(ra::join(divisor, ra::eadom(r)), mediator, ra::eadom(r.unite(s)));
  return ra::join(d1, ra::div(e, ra::eadom(s), ra::eadom(r)));
}

}  // namespace

RaExpr expand_sugar(const RaExpr& e, const Catalog& catalog) {
  std::vector<RaExpr> k;
  for (const auto& kid : e->kids) k.push_back(expand_sugar(kid, catalog));
  std::vector<Scheme> ks;
  for (const auto& kid : e->kids) ks.push_back(scheme_of(kid, catalog));
  scheme_of(e, catalog);

  switch (e->op) {
    case RaOp::semijoin: return ra::project(ks[0], ra::join(k[0], k[1]));
    case RaOp::difference: return difference_core(k[0], k[1], ks[0]);
    case RaOp::semidifference:
      return difference_core(k[0], ra::project(ks[0], ra::join(k[0], k[1])), ks[0]);
    case RaOp::gsdo: return small_divide_core(k[0], k[1], k[2], ks[0], ks[1]);
    case RaOp::gsd: {
      const Scheme r = ks[0].intersect(ks[2]);
      const Scheme s = ks[1].intersect(ks[2]);
      return small_divide_core(k[0], ra::project(s, k[1]), ra::project(r.unite(s), k[2]), r, s);
    }
    case RaOp::ggdo:
    case RaOp::gddo: {
      const auto d = darwen_schemes(ks[0], ks[1], ks[2], ks[3]);
      const RaExpr e4 = ra::residuum(ra::join(k[3], ra::eadom(d.r3p)),
                                     ra::join(ra::project(d.r3p, k[2]), ra::eadom(ks[3])), ra::eadom(d.r4p));
      return ra::join(ra::join(k[0], k[1]), ra::div(e4, ra::eadom(d.r2p), ra::eadom(d.r1p)));
    }
    case RaOp::gcodd: return ra::div(k[0], k[1], k[2]);
    case RaOp::gtodd: {
      const Scheme s = ks[0].intersect(ks[1]);
      const Scheme r = ks[0].minus(s);
      const Scheme t = ks[1].minus(s);
      const RaExpr e1 = ra::residuum(ra::join(k[1], ra::eadom(r)), ra::join(k[0], ra::eadom(t)),
                                     ra::eadom(r.unite(s).unite(t)));
      return ra::div(e1, ra::eadom(s), k[2]);
    }
    default: {
      if (k.empty()) return e;
      auto n = std::make_shared<RaNode>(*e);
      n->kids = std::move(k);
      return n;
    }
  }
}

// ---------------------------------------------------------------------------
// Evaluation.

namespace {

class Evaluator {
 public:
  Evaluator(const DatabaseInstance& instance, const Constants& constants)
      : instance_(instance), constants_(constants) {}

  RankedDataTable eval(const RaExpr& e) {
    const std::string key = print_ra(e);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    RankedDataTable out = compute(e);
    memo_.emplace(key, out);
    return out;
  }

 private:
  RankedDataTable compute(const RaExpr& e) {
    const auto& lat = instance_.lattice();
    switch (e->op) {
      case RaOp::rel: return instance_.get(e->name);
      case RaOp::dee: return dee(lat, lat->parse(e->name));
      case RaOp::singleton: {
        RankedDataTable t(Scheme{e->attribute}, lat);
        t.set(Tuple{{e->attribute, e->value}}, lat->top());
        return t;
      }
      case RaOp::eadom: return eadom(instance_, e->scheme, constants_);
      default: break;
    }
    std::vector<RankedDataTable> k;
    for (const auto& kid : e->kids) k.push_back(eval(kid));
    auto fail = [&](const std::string& msg) -> RankedDataTable {
      throw SchemeError(std::string(keyword(e->op)) + ": " + msg);
    };
    switch (e->op) {
      case RaOp::unite:
        if (k[0].scheme() != k[1].scheme()) return fail("operand schemes differ");
        return unite(k[0], k[1]);
      case RaOp::isect:
        if (k[0].scheme() != k[1].scheme()) return fail("operand schemes differ");
        return intersect(k[0], k[1]);
      case RaOp::join: return natural_join(k[0], k[1]);
      case RaOp::project: return project(k[0], e->scheme);
      case RaOp::nabla: return nabla(k[0]);
      case RaOp::delta: return delta(k[0]);
      case RaOp::residuum: return residuum_with_range(k[0], k[1], k[2]);
      case RaOp::div_ranged: return div_ranged(k[0], k[1], k[2]);
      case RaOp::semijoin: return semijoin(k[0], k[1]);
      case RaOp::difference: return difference_graded(k[0], k[1]);
      case RaOp::semidifference: return semidifference(k[0], k[1]);
      case RaOp::gsdo: return div_gsdo(k[0], k[1], k[2]);
      case RaOp::gsd: return div_gsd(k[0], k[1], k[2]);
      case RaOp::ggdo: return div_ggdo(k[0], k[1], k[2], k[3]);
      case RaOp::gddo: return div_gddo(k[0], k[1], k[2], k[3]);
      case RaOp::gcodd: return div_gcodd(k[0], k[1], k[2]);
      case RaOp::gtodd: return div_gtodd(k[0], k[1], k[2]);
      default: break;
    }
    throw SchemeError("unknown expression node");
  }

  const DatabaseInstance& instance_;
  const Constants& constants_;
  std::map<std::string, RankedDataTable> memo_;
};

}  // namespace

RankedDataTable eval_ra(const RaExpr& e, const DatabaseInstance& instance, const Constants& constants) {
  scheme_of(e, catalog_of(instance));
  Evaluator ev(instance, constants);
  return ev.eval(e);
}

RankedDataTable eval_ra(const RaExpr& e, const DatabaseInstance& instance) {
  return eval_ra(e, instance, constants_of(e));
}

// ---------------------------------------------------------------------------
// Printing.

namespace {

std::string print_scheme(const Scheme& s) {
  std::string out = "[";
  bool first = true;
  for (const auto& a : s) {
    if (!first) out += ",";
    first = false;
    out += a;
  }
  return out + "]";
}

std::string print_value(const Value& v) {
  if (const auto* s = std::get_if<std::string>(&v)) {
    std::string out = "\"";
    for (char c : *s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  }
  if (const auto* d = std::get_if<double>(&v)) {
    std::string out = format_real(*d);
    if (out.find_first_of(".en") == std::string::npos) out += ".0";
    return out;
  }
  return format_value(v);
}

void print_to(const RaExpr& e, std::string& out) {
  auto kid = [&](std::size_t i) { print_to(e->kids[i], out); };
  switch (e->op) {
    case RaOp::rel: out += e->name; return;
    case RaOp::dee: out += "DEE(" + e->name + ")"; return;
    case RaOp::singleton: out += "[" + e->attribute + ": " + print_value(e->value) + "]"; return;
    case RaOp::eadom: out += "EADOM" + print_scheme(e->scheme); return;
    case RaOp::unite:
    case RaOp::isect:
    case RaOp::join:
    case RaOp::semijoin:
    case RaOp::difference:
    case RaOp::semidifference:
      out += "(";
      kid(0);
      out += std::string(" ") + keyword(e->op) + " ";
      kid(1);
      out += ")";
      return;
    case RaOp::project:
      out += "PROJECT" + print_scheme(e->scheme) + "(";
      kid(0);
      out += ")";
      return;
    case RaOp::nabla:
    case RaOp::delta:
      out += std::string(keyword(e->op)) + "(";
      kid(0);
      out += ")";
      return;
    case RaOp::residuum:
      out += "RES(";
      kid(0);
      out += " -> ";
      kid(1);
      out += " OVER ";
      kid(2);
      out += ")";
      return;
    case RaOp::div_ranged:
      out += "DIV(";
      kid(0);
      out += " BY ";
      kid(1);
      out += " OVER ";
      kid(2);
      out += ")";
      return;
    case RaOp::gsdo:
    case RaOp::gsd:
    case RaOp::gcodd:
    case RaOp::gtodd:
      out += std::string(keyword(e->op)) + "(";
      kid(0);
      out += ", ";
      kid(1);
      out += (e->op == RaOp::gcodd || e->op == RaOp::gtodd) ? "; UNIV " : "; MED ";
      kid(2);
      out += ")";
      return;
    case RaOp::ggdo:
    case RaOp::gddo:
      out += std::string(keyword(e->op)) + "(";
      kid(0);
      out += ", ";
      kid(1);
      out += "; MED ";
      kid(2);
      out += ", ";
      kid(3);
      out += ")";
      return;
  }
}

}  // namespace

std::string print_ra(const RaExpr& e) {
  std::string out;
  print_to(e, out);
  return out;
}

}  // namespace gradix
