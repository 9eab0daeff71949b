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

#include "gradix/ptc.hpp"

#include <algorithm>
#include <map>

#include "gradix/error.hpp"

namespace gradix {

bool equal(const PtcExpr& a, const PtcExpr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->op != b->op || a->vars != b->vars || a->kids.size() != b->kids.size()) return false;
  if (a->op == PtcOp::atom && !equal(a->ra, b->ra)) return false;
  for (std::size_t i = 0; i < a->kids.size(); ++i) {
    if (!equal(a->kids[i], b->kids[i])) return false;
  }
  return true;
}

namespace ptc {

namespace {
PtcExpr node(PtcOp op, std::vector<TupleVar> vars, std::vector<PtcExpr> kids) {
  auto n = std::make_shared<PtcNode>();
  n->op = op;
  n->vars = std::move(vars);
  n->kids = std::move(kids);
  return n;
}

std::vector<TupleVar> normalized(std::vector<TupleVar> vars) {
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}
}  // namespace

PtcExpr atom(RaExpr e, std::vector<TupleVar> vars) {
  auto n = std::make_shared<PtcNode>();
  n->op = PtcOp::atom;
  n->ra = std::move(e);
  n->vars = normalized(std::move(vars));
  return n;
}

PtcExpr otimes(PtcExpr a, PtcExpr b) { return node(PtcOp::otimes, {}, {std::move(a), std::move(b)}); }
PtcExpr wedge(PtcExpr a, PtcExpr b) { return node(PtcOp::wedge, {}, {std::move(a), std::move(b)}); }
PtcExpr implies(PtcExpr a, PtcExpr b) { return node(PtcOp::implies, {}, {std::move(a), std::move(b)}); }
PtcExpr nabla(PtcExpr e) { return node(PtcOp::nabla, {}, {std::move(e)}); }
PtcExpr delta(PtcExpr e) { return node(PtcOp::delta, {}, {std::move(e)}); }
PtcExpr sup(std::vector<TupleVar> bound, PtcExpr body) {
  return node(PtcOp::sup, normalized(std::move(bound)), {std::move(body)});
}
PtcExpr inf(std::vector<TupleVar> bound, PtcExpr body) {
  return node(PtcOp::inf, normalized(std::move(bound)), {std::move(body)});
}

}  // namespace ptc

// ---------------------------------------------------------------------------
// Variables and schemes.

std::vector<TupleVar> free_vars(const PtcExpr& e) {
  std::vector<TupleVar> out;
  switch (e->op) {
    case PtcOp::atom: return e->vars;
    case PtcOp::sup:
    case PtcOp::inf:
      for (const auto& v : free_vars(e->kids[0])) {
        if (std::find(e->vars.begin(), e->vars.end(), v) == e->vars.end()) out.push_back(v);
      }
      return out;
    default:
      for (const auto& k : e->kids) {
        auto f = free_vars(k);
        out.insert(out.end(), f.begin(), f.end());
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
  }
}

Scheme scheme_of(const std::vector<TupleVar>& vars) {
  Scheme s;
  for (const auto& v : vars) s = s.unite(v.scheme);
  return s;
}

Scheme scheme_of(const PtcExpr& e) { return scheme_of(free_vars(e)); }

namespace {

void check_names(const PtcExpr& e, std::map<std::string, Scheme>& seen) {
  for (const auto& v : e->vars) {
    auto [it, inserted] = seen.emplace(v.name, v.scheme);
    if (!inserted && it->second != v.scheme) {
      throw SchemeError("tuple variable " + v.name + " used on " + it->second.to_string() + " and " +
                        v.scheme.to_string());
    }
  }
  for (const auto& k : e->kids) check_names(k, seen);
}

void check_node(const PtcExpr& e, const Catalog& catalog) {
  for (const auto& k : e->kids) check_node(k, catalog);
  if (e->op == PtcOp::atom) {
    const Scheme s = scheme_of(e->ra, catalog);
    if (s != scheme_of(e->vars)) {
      throw SchemeError("atom " + print_ra(e->ra) + " on " + s.to_string() + " applied to variables on " +
                        scheme_of(e->vars).to_string());
    }
  } else if (e->op == PtcOp::sup || e->op == PtcOp::inf) {
    const auto body_free = free_vars(e->kids[0]);
    for (const auto& v : e->vars) {
      if (std::find(body_free.begin(), body_free.end(), v) == body_free.end()) {
        throw SchemeError("quantified variable " + v.name + " is not free in its body");
      }
    }
    const Scheme bound = scheme_of(e->vars);
    const Scheme rest = scheme_of(e);
    if (!bound.disjoint_with(rest)) {
      throw SchemeError("quantified scheme " + bound.to_string() + " overlaps free scheme " + rest.to_string());
    }
  }
}

}  // namespace

void check_ptc(const PtcExpr& e, const Catalog& catalog) {
  std::map<std::string, Scheme> seen;
  check_names(e, seen);
  check_node(e, catalog);
}

Constants constants_of(const PtcExpr& e) {
  Constants c;
  std::vector<const PtcNode*> stack{e.get()};
  while (!stack.empty()) {
    const PtcNode* n = stack.back();
    stack.pop_back();
    if (n->op == PtcOp::atom) collect_constants(n->ra, c);
    for (const auto& k : n->kids) stack.push_back(k.get());
  }
  return c;
}

std::size_t empty_quantifier_domains(const PtcExpr& e, const DatabaseInstance& instance) {
  const Constants c = constants_of(e);
  std::size_t count = 0;
  std::vector<const PtcNode*> stack{e.get()};
  while (!stack.empty()) {
    const PtcNode* n = stack.back();
    stack.pop_back();
    if (n->op == PtcOp::sup || n->op == PtcOp::inf) {
      for (const auto& y : scheme_of(n->vars)) {
        if (eadom_values(instance, y, c).empty()) {
          ++count;
          break;
        }
      }
    }
    for (const auto& k : n->kids) stack.push_back(k.get());
  }
  return count;
}

// ---------------------------------------------------------------------------
// Evaluation by enumeration.

namespace {

class PtcEvaluator {
 public:
  PtcEvaluator(const DatabaseInstance& instance, Constants constants)
      : instance_(instance), lat_(*instance.lattice()), constants_(std::move(constants)) {}

  /// Scores on the node's free scheme; only nonzero scores are stored.
  std::map<Tuple, Degree> eval(const PtcExpr& e) {
    const Scheme r = scheme_of(e);
    std::map<Tuple, Degree> out;
    auto put = [&](const Tuple& t, Degree d) {
      if (!lat_.is_bottom(d)) out.emplace(t, d);
    };
    switch (e->op) {
      case PtcOp::atom: {
        const RankedDataTable table = eval_ra(e->ra, instance_, constants_);
        // ||vars||_r joined back together is r itself.
        for (const auto& t : domain(r)) put(t, table.score(valuation(e->vars, t)));
        return out;
      }
      case PtcOp::otimes:
      case PtcOp::wedge:
      case PtcOp::implies: {
        const auto left = eval(e->kids[0]);
        const auto right = eval(e->kids[1]);
        const Scheme r1 = scheme_of(e->kids[0]);
        const Scheme r2 = scheme_of(e->kids[1]);
        for (const auto& t : domain(r)) {
          const Degree a = lookup(left, t.project(r1));
          const Degree b = lookup(right, t.project(r2));
          Degree d;
          if (e->op == PtcOp::otimes) {
            d = lat_.otimes(a, b);
          } else if (e->op == PtcOp::wedge) {
            d = lat_.meet(a, b);
          } else {
            d = lat_.residuum(a, b);
          }
          put(t, d);
        }
        return out;
      }
      case PtcOp::nabla:
      case PtcOp::delta: {
        for (const auto& [t, a] : eval(e->kids[0])) {
          if (e->op == PtcOp::nabla || lat_.is_top(a)) put(t, lat_.top());
        }
        return out;
      }
      case PtcOp::sup:
      case PtcOp::inf: {
        const auto body = eval(e->kids[0]);
        const Scheme rb = scheme_of(e->kids[0]);
        const auto& bound = domain(scheme_of(e->vars));
        for (const auto& t : domain(r)) {
          Degree acc = e->op == PtcOp::sup ? lat_.bottom() : lat_.top();
          for (const auto& b : bound) {
            const Degree x = lookup(body, t.join(b).project(rb));
            acc = e->op == PtcOp::sup ? lat_.join(acc, x) : lat_.meet(acc, x);
          }
          put(t, acc);
        }
        return out;
      }
    }
    return out;
  }

 private:
  static Tuple valuation(const std::vector<TupleVar>& vars, const Tuple& t) {
    Tuple out;
    for (const auto& v : vars) out = out.join(t.project(v.scheme));
    return out;
  }

  Degree lookup(const std::map<Tuple, Degree>& m, const Tuple& t) const {
    auto it = m.find(t);
    return it == m.end() ? lat_.bottom() : it->second;
  }

  const std::vector<Tuple>& domain(const Scheme& s) {
    auto it = domains_.find(s);
    if (it != domains_.end()) return it->second;
    std::vector<Tuple> tuples;
    const RankedDataTable dom = eadom(instance_, s, constants_);
    for (const auto& row : dom.rows()) tuples.push_back(row.first);
    return domains_.emplace(s, std::move(tuples)).first->second;
  }

  const DatabaseInstance& instance_;
  const ResiduatedLattice& lat_;
  Constants constants_;
  std::map<Scheme, std::vector<Tuple>> domains_;
};

}  // namespace

RankedDataTable eval_ptc(const PtcExpr& e, const DatabaseInstance& instance) {
  check_ptc(e, catalog_of(instance));
  PtcEvaluator ev(instance, constants_of(e));
  RankedDataTable out(scheme_of(e), instance.lattice());
  for (const auto& [t, a] : ev.eval(e)) out.set(t, a);
  return out;
}

// ---------------------------------------------------------------------------
// Transformations.

PtcExpr split_variable(const PtcExpr& e, const TupleVar& var, const std::vector<TupleVar>& parts) {
  if (scheme_of(parts) != var.scheme) {
    throw SchemeError("parts on " + scheme_of(parts).to_string() + " do not cover " + var.name + " on " +
                      var.scheme.to_string());
  }
  std::vector<TupleVar> vars;
  for (const auto& v : e->vars) {
    if (v == var) {
      vars.insert(vars.end(), parts.begin(), parts.end());
    } else {
      vars.push_back(v);
    }
  }
  std::vector<PtcExpr> kids;
  for (const auto& k : e->kids) kids.push_back(split_variable(k, var, parts));
  switch (e->op) {
    case PtcOp::atom: return ptc::atom(e->ra, std::move(vars));
    case PtcOp::sup: return ptc::sup(std::move(vars), kids[0]);
    case PtcOp::inf: return ptc::inf(std::move(vars), kids[0]);
    default: {
      auto n = std::make_shared<PtcNode>(*e);
      n->kids = std::move(kids);
      return n;
    }
  }
}

PtcExpr embed_ra(const RaExpr& e, const Catalog& catalog, const std::string& name) {
  return ptc::atom(e, {TupleVar{name, scheme_of(e, catalog)}});
}

RaExpr compile_ptc_to_ra(const PtcExpr& e, const Catalog& catalog, InfForm form) {
  switch (e->op) {
    case PtcOp::atom: return e->ra;
    case PtcOp::otimes:
      return ra::join(compile_ptc_to_ra(e->kids[0], catalog, form), compile_ptc_to_ra(e->kids[1], catalog, form));
    case PtcOp::wedge:
    case PtcOp::implies: {
      const Scheme r1 = scheme_of(e->kids[0]);
      const Scheme r2 = scheme_of(e->kids[1]);
      const RaExpr f1 = ra::join(compile_ptc_to_ra(e->kids[0], catalog, form), ra::eadom(r2));
      const RaExpr f2 = ra::join(compile_ptc_to_ra(e->kids[1], catalog, form), ra::eadom(r1));
      if (e->op == PtcOp::wedge) return ra::isect(f1, f2);
      return ra::residuum(f1, f2, ra::eadom(r1.unite(r2)));
    }
    case PtcOp::nabla: return ra::nabla(compile_ptc_to_ra(e->kids[0], catalog, form));
    case PtcOp::delta: return ra::delta(compile_ptc_to_ra(e->kids[0], catalog, form));
    case PtcOp::sup: return ra::project(scheme_of(e), compile_ptc_to_ra(e->kids[0], catalog, form));
    case PtcOp::inf: {
      const RaExpr f = compile_ptc_to_ra(e->kids[0], catalog, form);
      const Scheme bound = scheme_of(e->vars);
      const Scheme rest = scheme_of(e);
      if (form == InfForm::small_divide) return ra::gsdo(ra::eadom(rest), ra::eadom(bound), f);
      return ra::div(f, ra::eadom(bound), ra::eadom(rest));
    }
  }
  throw SchemeError("unknown formula node");
}

// ---------------------------------------------------------------------------
// Printing.

namespace {

std::string print_vars(const std::vector<TupleVar>& vars) {
  std::string out;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) out += ", ";
    out += vars[i].name;
  }
  return out;
}

}  // namespace

std::string print_ptc(const PtcExpr& e) {
  switch (e->op) {
    case PtcOp::atom: {
      const std::string head = e->ra->op == RaOp::rel ? e->ra->name : "{" + print_ra(e->ra) + "}";
      return head + "(" + print_vars(e->vars) + ")";
    }
    case PtcOp::otimes: return "(" + print_ptc(e->kids[0]) + " * " + print_ptc(e->kids[1]) + ")";
    case PtcOp::wedge: return "(" + print_ptc(e->kids[0]) + " & " + print_ptc(e->kids[1]) + ")";
    case PtcOp::implies: return "(" + print_ptc(e->kids[0]) + " => " + print_ptc(e->kids[1]) + ")";
    case PtcOp::nabla: return "NABLA(" + print_ptc(e->kids[0]) + ")";
    case PtcOp::delta: return "DELTA(" + print_ptc(e->kids[0]) + ")";
    case PtcOp::sup: return "(ANY " + print_vars(e->vars) + " . " + print_ptc(e->kids[0]) + ")";
    case PtcOp::inf: return "(ALL " + print_vars(e->vars) + " . " + print_ptc(e->kids[0]) + ")";
  }
  return "?";
}

}  // namespace gradix
