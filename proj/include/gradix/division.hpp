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
 * Division operations on ranked data tables.
 *
 * Every graded division quantifies universally over all tuples of some
 * scheme. Attribute types are open domains, so those universes are infinite;
 * the implementations take the infimum over the tuples that occur in the
 * supports of the arguments and meet it with the constant value every other
 * tuple contributes (1 for a residuum whose antecedent is 0, or the range
 * score for div_ranged).
 *
 * The `*_composed` forms and semidifference are the classic operations
 * written with join, projection and difference; they require the Boolean
 * lattice.
 */
#pragma once

#include "gradix/table.hpp"

namespace gradix {

/// Division of `dividend` (on R u S) by `divisor` (on S) ranging over
/// `range` (on R): inf_s range(r) (x) (divisor(s) -> dividend(rs)).
RankedDataTable div_ranged(const RankedDataTable& dividend, const RankedDataTable& divisor,
                           const RankedDataTable& range);

/// Graded original Small Divide: dividend on R, divisor on S, mediator on R u S.
RankedDataTable div_gsdo(const RankedDataTable& dividend, const RankedDataTable& divisor,
                         const RankedDataTable& mediator);

/// Graded general Small Divide: dividend on R u T, divisor on S u U,
/// mediator on R u S u V. R and S are the attributes the dividend and the
/// divisor share with the mediator; dividend and divisor must be disjoint.
RankedDataTable div_gsd(const RankedDataTable& dividend, const RankedDataTable& divisor,
                        const RankedDataTable& mediator);

/// Domain-dependent graded Codd division over an explicit non-ranked universe
/// on R = scheme(dividend) \ scheme(divisor).
RankedDataTable div_gcodd(const RankedDataTable& dividend, const RankedDataTable& divisor,
                          const RankedDataTable& universe);

/// Domain-dependent graded Todd division (Kohout-Bandler superproduct) over an
/// explicit non-ranked universe on R u T.
RankedDataTable div_gtodd(const RankedDataTable& dividend, const RankedDataTable& divisor,
                          const RankedDataTable& universe);

/// Graded original Great Divide: dividend on R, divisor on T, first mediator
/// on R u S, second mediator on S u T.
RankedDataTable div_ggdo(const RankedDataTable& dividend, const RankedDataTable& divisor,
                         const RankedDataTable& mediator1, const RankedDataTable& mediator2);

/// Three equivalent formulations of the graded Darwen divide.
enum class DarwenForm {
  /// Infimum over joinable second-mediator tuples of a supremum over joinable
  /// first-mediator tuples.
  joinable,
  /// Same quantifiers written over the attribute complements, no joinability.
  no_condition,
  /// Inner supremum replaced by a projection of the first mediator.
  projection,
};

/// Graded Darwen divide on arbitrary schemes; result on R1 u R2.
RankedDataTable div_gddo(const RankedDataTable& dividend, const RankedDataTable& divisor,
                         const RankedDataTable& mediator1, const RankedDataTable& mediator2,
                         DarwenForm form = DarwenForm::projection);

/// D1 \ (D1 semijoin D2); Boolean lattice only.
RankedDataTable semidifference(const RankedDataTable& d1, const RankedDataTable& d2);

/// Classic Codd division pi_R(D1) \ pi_R((pi_R(D1) join D2) \ D1).
RankedDataTable div_codd_composed(const RankedDataTable& dividend, const RankedDataTable& divisor);
/// Classic original Small Divide D1 \ pi_R((D1 join D2) \ D3).
RankedDataTable div_small_composed(const RankedDataTable& dividend, const RankedDataTable& divisor,
                                   const RankedDataTable& mediator);
/// Classic general Small Divide D1 semidiff ((pi_R D1 join pi_S D2) semidiff D3).
RankedDataTable div_small_general_composed(const RankedDataTable& dividend, const RankedDataTable& divisor,
                                           const RankedDataTable& mediator);
/// Classic original Great Divide (D1 join D2) semidiff ((D1 join D4) semidiff D3).
RankedDataTable div_great_composed(const RankedDataTable& dividend, const RankedDataTable& divisor,
                                   const RankedDataTable& mediator1, const RankedDataTable& mediator2);
/// Classic Darwen divide; same formula as the Great Divide on arbitrary schemes.
RankedDataTable div_darwen_composed(const RankedDataTable& dividend, const RankedDataTable& divisor,
                                    const RankedDataTable& mediator1, const RankedDataTable& mediator2);

}  // namespace gradix
