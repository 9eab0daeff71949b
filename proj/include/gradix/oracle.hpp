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
 * Reference evaluations used to check the engine.
 *
 * Nothing here calls the table, division or algebra code. Relations are plain
 * maps; the `set_*` functions work on supports (Boolean semantics) and are
 * written as the classic set comprehensions; the `naive_*` functions evaluate
 * the graded definitions by enumerating every tuple over the values of the
 * arguments plus one fresh value per attribute, which stands in for the
 * infinitely many values outside the data.
 */
#pragma once

#include <map>
#include <set>
#include <vector>

#include "gradix/lattice.hpp"
#include "gradix/tuple.hpp"

namespace gradix::oracle {

struct Rel {
  Scheme scheme;
  std::map<Tuple, Degree> rows;

  Degree at(const Tuple& t, const ResiduatedLattice& l) const {
    auto it = rows.find(t);
    return it == rows.end() ? l.bottom() : it->second;
  }
};

using TupleSet = std::set<Tuple>;
TupleSet support(const Rel& r);

// ---- classic operations on supports ----------------------------------------

TupleSet set_union(const TupleSet& a, const TupleSet& b);
TupleSet set_intersection(const TupleSet& a, const TupleSet& b);
TupleSet set_difference(const TupleSet& a, const TupleSet& b);
TupleSet set_join(const TupleSet& a, const TupleSet& b);
TupleSet set_project(const TupleSet& a, const Scheme& s);
/// {r in a | some tuple of b is joinable with r}.
TupleSet set_semijoin(const TupleSet& a, const TupleSet& b);
/// {r in a | no tuple of b is joinable with r}.
TupleSet set_semidifference(const TupleSet& a, const TupleSet& b);

/// {r in pi_R(D1) | for all s in D2: rs in D1}.
TupleSet set_with_range(const TupleSet& d1, const Scheme& s1, const TupleSet& d2, const Scheme& s2);
/// {r in D1 | for all s in D2: rs in D3}.
TupleSet set_small_original(const TupleSet& d1, const TupleSet& d2, const TupleSet& d3);
/// {rt in D1 | for all s in pi_S(D2): rs in pi_RS(D3)}.
TupleSet set_small_general(const TupleSet& d1, const Scheme& s1, const TupleSet& d2, const Scheme& s2,
                           const TupleSet& d3, const Scheme& s3);
/// {rt | r in pi_R D1, t in pi_T D2, for all s: st in D2 implies rs in D1}.
TupleSet set_todd(const TupleSet& d1, const Scheme& s1, const TupleSet& d2, const Scheme& s2);
/// {rt | r in D1, t in D2, for all s: st in D4 implies rs in D3}.
TupleSet set_great_original(const TupleSet& d1, const Scheme& s1, const TupleSet& d2, const Scheme& s2,
                            const TupleSet& d3, const Scheme& s3, const TupleSet& d4, const Scheme& s4);
/// {r1r2 in D1 join D2 | for all r4 in D4 joinable with r1r2 there is r3 in D3
/// joinable with r1r4}.
TupleSet set_darwen(const TupleSet& d1, const Scheme& s1, const TupleSet& d2, const TupleSet& d3,
                    const TupleSet& d4);

// ---- graded definitions by enumeration -----------------------------------------

/// Attribute values available for enumeration.
using Domain = std::map<Attribute, std::vector<Value>>;

/// Values of the given relations plus one fresh value for each attribute.
Domain domain_of(const std::vector<const Rel*>& rels);
/// Every tuple on `s` over the domain.
std::vector<Tuple> all_tuples(const Scheme& s, const Domain& dom);

/// inf_s range(r) (x) (divisor(s) -> dividend(rs)).
Rel naive_ranged(const ResiduatedLattice& l, const Rel& dividend, const Rel& divisor, const Rel& range);
/// dividend(r) (x) inf_s (divisor(s) -> mediator(rs)).
Rel naive_gsdo(const ResiduatedLattice& l, const Rel& dividend, const Rel& divisor, const Rel& mediator);
Rel naive_gsd(const ResiduatedLattice& l, const Rel& dividend, const Rel& divisor, const Rel& mediator);
Rel naive_gcodd(const ResiduatedLattice& l, const Rel& dividend, const Rel& divisor, const Rel& universe);
Rel naive_gtodd(const ResiduatedLattice& l, const Rel& dividend, const Rel& divisor, const Rel& universe);
Rel naive_ggdo(const ResiduatedLattice& l, const Rel& d1, const Rel& d2, const Rel& d3, const Rel& d4);
/// Joinability form of the graded Darwen divide.
Rel naive_gddo(const ResiduatedLattice& l, const Rel& d1, const Rel& d2, const Rel& d3, const Rel& d4);

/// Greatest c with a (x) c <= b found by scanning the carrier (finite
/// lattices) or a grid of `steps`+1 points in [0,1].
Degree residuum_by_search(const ResiduatedLattice& l, Degree a, Degree b, int steps = 1000);

}  // namespace gradix::oracle
