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
 * Relational algebra expressions over ranked data tables.
 *
 * Expressions are immutable trees shared through RaExpr. Relation symbols are
 * resolved against a Catalog (symbol name to scheme) for static scheme
 * inference and against a DatabaseInstance for evaluation.
 *
 * Extended active domains: every EADOM[R] node inside an expression evaluates
 * to the cross join of the per-attribute value sets of the whole instance,
 * extended by the constants of all singleton nodes in the top-level
 * expression being evaluated.
 */
#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "gradix/division.hpp"
#include "gradix/table.hpp"

namespace gradix {

enum class RaOp {
  // core
  rel,
  dee,
  singleton,
  unite,
  isect,
  join,
  project,
  nabla,
  delta,
  residuum,
  div_ranged,
  eadom,
  // sugar
  semijoin,
  difference,
  semidifference,
  gsdo,
  gsd,
  ggdo,
  gddo,
  gcodd,
  gtodd,
};

struct RaNode;
using RaExpr = std::shared_ptr<const RaNode>;

struct RaNode {
  RaOp op;
  /// Relation symbol (rel) or degree literal (dee).
  std::string name;
  /// singleton only.
  Attribute attribute;
  Value value;
  /// Target scheme of project, scheme of eadom.
  Scheme scheme;
  std::vector<RaExpr> kids;
};

bool operator==(const RaNode& a, const RaNode& b);
/// Structural equality.
bool equal(const RaExpr& a, const RaExpr& b);

namespace ra {
RaExpr rel(std::string name);
RaExpr dee(std::string literal);
RaExpr singleton(Attribute a, Value v);
RaExpr unite(RaExpr a, RaExpr b);
RaExpr isect(RaExpr a, RaExpr b);
RaExpr join(RaExpr a, RaExpr b);
RaExpr project(Scheme s, RaExpr e);
RaExpr nabla(RaExpr e);
RaExpr delta(RaExpr e);
/// range (x) (left -> right).
RaExpr residuum(RaExpr left, RaExpr right, RaExpr range);
RaExpr div(RaExpr dividend, RaExpr divisor, RaExpr range);
RaExpr eadom(Scheme s);
RaExpr semijoin(RaExpr a, RaExpr b);
RaExpr difference(RaExpr a, RaExpr b);
RaExpr semidifference(RaExpr a, RaExpr b);
RaExpr gsdo(RaExpr dividend, RaExpr divisor, RaExpr mediator);
RaExpr gsd(RaExpr dividend, RaExpr divisor, RaExpr mediator);
RaExpr ggdo(RaExpr dividend, RaExpr divisor, RaExpr mediator1, RaExpr mediator2);
RaExpr gddo(RaExpr dividend, RaExpr divisor, RaExpr mediator1, RaExpr mediator2);
RaExpr gcodd(RaExpr dividend, RaExpr divisor, RaExpr universe);
RaExpr gtodd(RaExpr dividend, RaExpr divisor, RaExpr universe);
}  // namespace ra

/// Relation symbol schemes.
using Catalog = std::map<std::string, Scheme>;
Catalog catalog_of(const DatabaseInstance& instance);

/// Per-attribute constant values.
using Constants = std::map<Attribute, std::set<Value>>;

/// Static result scheme. Throws SchemeError naming the offending node, or
/// UnboundSymbol.
Scheme scheme_of(const RaExpr& e, const Catalog& catalog);

/// Values introduced by singleton nodes.
Constants constants_of(const RaExpr& e);
void collect_constants(const RaExpr& e, Constants& out);

/// Relation symbols referenced by the expression.
std::set<std::string> symbols_of(const RaExpr& e);

/// Evaluates with EADOM nodes extended by the expression's own constants.
RankedDataTable eval_ra(const RaExpr& e, const DatabaseInstance& instance);
/// Evaluates with EADOM nodes extended by `constants` (which should include
/// the expression's own).
RankedDataTable eval_ra(const RaExpr& e, const DatabaseInstance& instance, const Constants& constants);

/// pi_{y}(nabla D).
RankedDataTable adom(const Attribute& y, const RankedDataTable& d);

/// Distinct values of `y` over all tables of the instance plus `extra`.
std::set<Value> eadom_values(const DatabaseInstance& instance, const Attribute& y, const Constants& extra = {});

/// Cross join of the per-attribute extended active domains; dee(1) on the
/// empty scheme.
RankedDataTable eadom(const DatabaseInstance& instance, const Scheme& r, const Constants& extra = {});

/// An expression built from projection, nabla, union, join and singletons
/// that evaluates to eadom over `r` in every instance binding exactly the
/// symbols of `scope`. Throws PreconditionError when some attribute of `r`
/// occurs in no symbol and no constant.
RaExpr eadom_ra_expr(const Scheme& r, const Catalog& scope, const Constants& constants);

/// Replaces every EADOM node by eadom_ra_expr over `scope`.
RaExpr expand_eadom(const RaExpr& e, const Catalog& scope, const Constants& constants);

/// Rewrites sugar nodes (semijoin, differences, Small/Great/Darwen/Codd/Todd
/// divides) into core nodes. The division rewrites use ranged division over
/// EADOM nodes.
RaExpr expand_sugar(const RaExpr& e, const Catalog& catalog);

/// Textual form, fully parenthesized; parse_ra() reads it back.
std::string print_ra(const RaExpr& e);

}  // namespace gradix
