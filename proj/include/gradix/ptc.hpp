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

/**
 * @file
 *
 * Pseudo tuple calculus: formulas over tuple variables whose atoms are
 * relational algebra expressions, evaluated over extended active domains,
 * and the translation of formulas into relational algebra.
 */
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gradix/algebra.hpp"

namespace gradix {

struct TupleVar {
  std::string name;
  Scheme scheme;

  friend bool operator==(const TupleVar&, const TupleVar&) = default;
  friend auto operator<=>(const TupleVar&, const TupleVar&) = default;
};

enum class PtcOp { atom, otimes, wedge, implies, nabla, delta, sup, inf };

struct PtcNode;
using PtcExpr = std::shared_ptr<const PtcNode>;

struct PtcNode {
  PtcOp op;
  /// atom only.
  RaExpr ra;
  /// Atom arguments, or the bound variables of a quantifier.
  std::vector<TupleVar> vars;
  std::vector<PtcExpr> kids;
};

bool equal(const PtcExpr& a, const PtcExpr& b);

namespace ptc {
PtcExpr atom(RaExpr e, std::vector<TupleVar> vars);
PtcExpr otimes(PtcExpr a, PtcExpr b);
PtcExpr wedge(PtcExpr a, PtcExpr b);
PtcExpr implies(PtcExpr a, PtcExpr b);
PtcExpr nabla(PtcExpr e);
PtcExpr delta(PtcExpr e);
PtcExpr sup(std::vector<TupleVar> bound, PtcExpr body);
PtcExpr inf(std::vector<TupleVar> bound, PtcExpr body);
}  // namespace ptc

/// Free variables in name order.
std::vector<TupleVar> free_vars(const PtcExpr& e);
/// Union of the schemes of the free variables.
Scheme scheme_of(const PtcExpr& e);
Scheme scheme_of(const std::vector<TupleVar>& vars);

/// Checks variable-name consistency, atom schemes against the catalog and
/// quantifier disjointness. Throws SchemeError.
void check_ptc(const PtcExpr& e, const Catalog& catalog);

Constants constants_of(const PtcExpr& e);

/// Number of quantifiers ranging over an attribute with no value anywhere in
/// the instance or the formula's constants (their infimum is 1, supremum 0).
std::size_t empty_quantifier_domains(const PtcExpr& e, const DatabaseInstance& instance);

/// Scores every tuple of eadom over the free scheme by enumeration; other
/// tuples score 0.
RankedDataTable eval_ptc(const PtcExpr& e, const DatabaseInstance& instance);

/// Replaces `var` by `parts` in every atom and quantifier. Throws
/// SchemeError when the part schemes do not cover the variable's scheme.
PtcExpr split_variable(const PtcExpr& e, const TupleVar& var, const std::vector<TupleVar>& parts);

/// Atom(E, {name : scheme_of(E)}).
PtcExpr embed_ra(const RaExpr& e, const Catalog& catalog, const std::string& name = "r");

/// How universal quantifiers are translated.
enum class InfForm { ranged_division, small_divide };

/// Translation into an RA expression using EADOM nodes.
RaExpr compile_ptc_to_ra(const PtcExpr& e, const Catalog& catalog, InfForm form = InfForm::ranged_division);

/// Fully parenthesized textual form; variables by name.
std::string print_ptc(const PtcExpr& e);

}  // namespace gradix
