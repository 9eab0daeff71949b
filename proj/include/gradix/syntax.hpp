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
 * Text syntax for algebra expressions, calculus formulas and query scripts.
 *
 * Algebra:
 *
 *     D   DEE(0.7)   [A: "v"]   [N: 3]   EADOM[A,B]
 *     e1 JOIN e2   e1 UNION e2   e1 ISECT e2
 *     e1 SEMIJOIN e2   e1 MINUS e2   e1 SEMIMINUS e2
 *     PROJECT[A,B](e)   NABLA(e)   DELTA(e)
 *     RES(e1 -> e2 OVER e3)   DIV(e1 BY e2 OVER e3)
 *     GSDO(e1, e2; MED e3)   GSD(e1, e2; MED e3)
 *     GGDO(e1, e2; MED e3, e4)   GDDO(e1, e2; MED e3, e4)
 *     GCODD(e1, e2; UNIV e3)   GTODD(e1, e2; UNIV e3)
 *
 * Infix operators share one precedence level and associate to the left.
 *
 * Formulas (tightest first): atoms `D(r, s)` or `{expr}(r, s)`,
 * `NABLA(f)`, `DELTA(f)`, `*`, `&`, `=>` (right associative). Quantifiers
 * `ANY r, s . f` and `ALL r . f` extend as far right as possible.
 *
 * Scripts are sequences of statements; `#` starts a comment:
 *
 *     LOAD D FROM "d.csv" [SCHEME A:int, B:text]
 *     VAR r : {A,B}
 *     LET V = expr
 *     EVAL expr
 *     EVALPTC formula
 *     COMPILE formula
 *     SAVE V TO "out.csv"
 */
#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gradix/ptc.hpp"

namespace gradix {

RaExpr parse_ra(std::string_view text);

/// Declared tuple variables by name.
using VarDecls = std::map<std::string, Scheme>;
PtcExpr parse_ptc(std::string_view text, const VarDecls& vars);

/// `VAR` lines printed in name order.
std::string print_var_decls(const VarDecls& vars);

struct Statement {
  enum class Kind { load, var, let, eval, evalptc, compile, save };

  Kind kind;
  int line = 0;
  int column = 0;
  std::string name;
  std::string path;
  std::vector<std::pair<Attribute, ValueType>> types;
  Scheme scheme;
  RaExpr ra;
  PtcExpr ptc;
};

struct Script {
  std::vector<Statement> statements;
};

/// Throws ParseError with line and column.
Script parse_script(std::string_view text);

/// Parses `A:int,B:text,C:decimal`.
std::vector<std::pair<Attribute, ValueType>> parse_scheme_spec(std::string_view text);

}  // namespace gradix
