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

#include "gradix/division.hpp"

#include <set>

#include "gradix/error.hpp"

namespace gradix {

namespace {

void require_disjoint(const Scheme& a, const Scheme& b, const char* what) {
  if (!a.disjoint_with(b)) {
    throw SchemeError(std::string(what) + ": schemes " + a.to_string() + " and " + b.to_string() +
                      " must be disjoint");
  }
}

void require_scheme(const RankedDataTable& d, const Scheme& expected, const char* role) {
  if (d.scheme() != expected) {
    throw SchemeError(std::string(role) + " must be on " + expected.to_string() + ", got " +
                      d.scheme().to_string());
  }
}

void require_non_ranked(const RankedDataTable& d) {
  if (!d.non_ranked()) throw PreconditionError("universe of a domain-dependent division must be non-ranked");
}

void require_boolean(const RankedDataTable& d, const char* op) {
  if (d.lattice().kind() != LatticeKind::boolean) {
    throw UnsupportedLattice(std::string(op) + " is defined on the Boolean lattice only, got " +
                             d.lattice().name());
  }
}

/// inf over the divisor support of divisor(s) -> dividend(key s), tail 1.
Degree subsethood(const ResiduatedLattice& l, const RankedDataTable& divisor, const RankedDataTable& dividend,
                  const Tuple& key) {
  Degree acc = l.top();
  for (const auto& [s, b] : divisor.rows()) acc = l.meet(acc, l.residuum(b, dividend.score(key.join(s))));
  return acc;
}

}  // namespace

RankedDataTable div_ranged(const RankedDataTable& dividend, const RankedDataTable& divisor,
                           const RankedDataTable& range) {
  require_same_lattice(dividend, divisor);
  require_same_lattice(dividend, range);
  require_disjoint(range.scheme(), divisor.scheme(), "ranged division");
  require_scheme(dividend, range.scheme().unite(divisor.scheme()), "dividend");

  const auto& l = range.lattice();
  RankedDataTable out(range.scheme(), range.lattice_ptr());
  for (const auto& [r, c] : range.rows()) {
    // Tuples outside the divisor support contribute c (x) (0 -> x) = c.
    Degree acc = c;
    for (const auto& [s, b] : divisor.rows()) {
      acc = l.meet(acc, l.otimes(c, l.residuum(b, dividend.score(r.join(s)))));
    }
    out.set(r, acc);
  }
  return out;
}

RankedDataTable div_gsdo(const RankedDataTable& dividend, const RankedDataTable& divisor,
                         const RankedDataTable& mediator) {
  require_same_lattice(dividend, divisor);
  require_same_lattice(dividend, mediator);
  require_disjoint(dividend.scheme(), divisor.scheme(), "small divide");
  require_scheme(mediator, dividend.scheme().unite(divisor.scheme()), "mediator");

  const auto& l = dividend.lattice();
  RankedDataTable out(dividend.scheme(), dividend.lattice_ptr());
  for (const auto& [r, a] : dividend.rows()) out.set(r, l.otimes(a, subsethood(l, divisor, mediator, r)));
  return out;
}

RankedDataTable div_gsd(const RankedDataTable& dividend, const RankedDataTable& divisor,
                        const RankedDataTable& mediator) {
  require_same_lattice(dividend, divisor);
  require_same_lattice(dividend, mediator);
  if (!dividend.scheme().disjoint_with(divisor.scheme())) {
    throw SchemeError("general small divide: dividend " + dividend.scheme().to_string() + " and divisor " +
                      divisor.scheme().to_string() + " share attributes, decomposition is ambiguous");
  }
  const Scheme r = dividend.scheme().intersect(mediator.scheme());
  const Scheme s = divisor.scheme().intersect(mediator.scheme());

  const auto& l = dividend.lattice();
  const RankedDataTable divisor_s = project(divisor, s);
  const RankedDataTable mediator_rs = project(mediator, r.unite(s));
  RankedDataTable out(dividend.scheme(), dividend.lattice_ptr());
  for (const auto& [rt, a] : dividend.rows()) {
    out.set(rt, l.otimes(a, subsethood(l, divisor_s, mediator_rs, rt.project(r))));
  }
  return out;
}

RankedDataTable div_gcodd(const RankedDataTable& dividend, const RankedDataTable& divisor,
                          const RankedDataTable& universe) {
  require_same_lattice(dividend, divisor);
  require_same_lattice(dividend, universe);
  require_non_ranked(universe);
  if (!divisor.scheme().is_subset_of(dividend.scheme())) {
    throw SchemeError("codd division: divisor scheme must be contained in the dividend scheme");
  }
  require_scheme(universe, dividend.scheme().minus(divisor.scheme()), "universe");

  const auto& l = dividend.lattice();
  RankedDataTable out(universe.scheme(), universe.lattice_ptr());
  for (const auto& row : universe.rows()) out.set(row.first, subsethood(l, divisor, dividend, row.first));
  return out;
}

RankedDataTable div_gtodd(const RankedDataTable& dividend, const RankedDataTable& divisor,
                          const RankedDataTable& universe) {
  require_same_lattice(dividend, divisor);
  require_same_lattice(dividend, universe);
  require_non_ranked(universe);
  const Scheme s = dividend.scheme().intersect(divisor.scheme());
  const Scheme r = dividend.scheme().minus(s);
  const Scheme t = divisor.scheme().minus(s);
  require_scheme(universe, r.unite(t), "universe");

  const auto& l = dividend.lattice();
  RankedDataTable out(universe.scheme(), universe.lattice_ptr());
  for (const auto& row : universe.rows()) {
    const Tuple rp = row.first.project(r);
    const Tuple tp = row.first.project(t);
    Degree acc = l.top();
    for (const auto& [st, b] : divisor.rows()) {
      if (st.project(t) != tp) continue;
      acc = l.meet(acc, l.residuum(b, dividend.score(rp.join(st.project(s)))));
    }
    out.set(row.first, acc);
  }
  return out;
}

RankedDataTable div_ggdo(const RankedDataTable& dividend, const RankedDataTable& divisor,
                         const RankedDataTable& mediator1, const RankedDataTable& mediator2) {
  require_same_lattice(dividend, divisor);
  require_same_lattice(dividend, mediator1);
  require_same_lattice(dividend, mediator2);
  const Scheme& r = dividend.scheme();
  const Scheme& t = divisor.scheme();
  require_disjoint(r, t, "great divide");
  if (!r.is_subset_of(mediator1.scheme())) {
    throw SchemeError("great divide: first mediator must contain the dividend scheme");
  }
  const Scheme s = mediator1.scheme().minus(r);
  require_disjoint(s, t, "great divide");
  require_scheme(mediator2, s.unite(t), "second mediator");

  const auto& l = dividend.lattice();
  RankedDataTable out(r.unite(t), dividend.lattice_ptr());
  const RankedDataTable joined = natural_join(dividend, divisor);
  for (const auto& [rt, a] : joined.rows()) {
    const Tuple rp = rt.project(r);
    const Tuple tp = rt.project(t);
    Degree acc = l.top();
    for (const auto& [st, b] : mediator2.rows()) {
      if (st.project(t) != tp) continue;
      acc = l.meet(acc, l.residuum(b, mediator1.score(rp.join(st.project(s)))));
    }
    out.set(rt, l.otimes(a, acc));
  }
  return out;
}

RankedDataTable div_gddo(const RankedDataTable& dividend, const RankedDataTable& divisor,
                         const RankedDataTable& mediator1, const RankedDataTable& mediator2, DarwenForm form) {
  require_same_lattice(dividend, divisor);
  require_same_lattice(dividend, mediator1);
  require_same_lattice(dividend, mediator2);
  const auto& l = dividend.lattice();
  const Scheme& r1 = dividend.scheme();
  const Scheme& r3 = mediator1.scheme();
  const Scheme& r4 = mediator2.scheme();
  const Scheme r12 = r1.unite(divisor.scheme());
  const Scheme r4_in = r4.intersect(r12);            // R4 n (R1 u R2)
  const Scheme r4_out = r4.minus(r12);               // R4 \ (R1 u R2)
  const Scheme r3_in = r3.intersect(r1.unite(r4));   // R3 n (R1 u R4)
  const Scheme r3_out = r3.minus(r1.unite(r4));      // R3 \ (R1 u R4)

  // Fragments of the first mediator's support outside R1 u R4.
  std::set<Tuple> r3_fragments;
  for (const auto& row : mediator1.rows()) r3_fragments.insert(row.first.project(r3_out));
  const RankedDataTable mediator1_in = project(mediator1, r3_in);

  RankedDataTable out(r12, dividend.lattice_ptr());
  const RankedDataTable joined = natural_join(dividend, divisor);
  for (const auto& [r, a] : joined.rows()) {
    const Tuple t1 = r.project(r1);
    Degree acc = l.top();
    switch (form) {
      case DarwenForm::joinable:
        for (const auto& [t4, b] : mediator2.rows()) {
          if (!r.joinable(t4)) continue;
          const Tuple t14 = t1.join(t4);
          Degree best = l.bottom();
          for (const auto& [t3, c] : mediator1.rows()) {
            if (t14.joinable(t3)) best = l.join(best, c);
          }
          acc = l.meet(acc, l.residuum(b, best));
        }
        break;
      case DarwenForm::no_condition:
      case DarwenForm::projection: {
        const Tuple t124 = r.project(r4_in);
        for (const auto& [t4, b] : mediator2.rows()) {
          if (t4.project(r4_in) != t124) continue;
          const Tuple r4p = t4.project(r4_out);
          const Tuple t143 = t1.join(t124).join(r4p).project(r3_in);
          Degree best = l.bottom();
          if (form == DarwenForm::projection) {
            best = mediator1_in.score(t143);
          } else {
            for (const Tuple& r3p : r3_fragments) best = l.join(best, mediator1.score(t143.join(r3p)));
          }
          acc = l.meet(acc, l.residuum(mediator2.score(t124.join(r4p)), best));
        }
        break;
      }
    }
    out.set(r, l.otimes(a, acc));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Classic composed forms.

RankedDataTable semidifference(const RankedDataTable& d1, const RankedDataTable& d2) {
  require_boolean(d1, "semidifference");
  require_same_lattice(d1, d2);
  return difference_graded(d1, project(natural_join(d1, d2), d1.scheme()));
}

RankedDataTable div_codd_composed(const RankedDataTable& dividend, const RankedDataTable& divisor) {
  require_boolean(dividend, "codd division");
  if (!divisor.scheme().is_subset_of(dividend.scheme())) {
    throw SchemeError("codd division: divisor scheme must be contained in the dividend scheme");
  }
  const Scheme r = dividend.scheme().minus(divisor.scheme());
  const RankedDataTable range = project(dividend, r);
  return difference_graded(range, project(difference_graded(natural_join(range, divisor), dividend), r));
}

RankedDataTable div_small_composed(const RankedDataTable& dividend, const RankedDataTable& divisor,
                                   const RankedDataTable& mediator) {
  require_boolean(dividend, "small divide");
  require_disjoint(dividend.scheme(), divisor.scheme(), "small divide");
  require_scheme(mediator, dividend.scheme().unite(divisor.scheme()), "mediator");
  return difference_graded(
      dividend, project(difference_graded(natural_join(dividend, divisor), mediator), dividend.scheme()));
}

RankedDataTable div_small_general_composed(const RankedDataTable& dividend, const RankedDataTable& divisor,
                                           const RankedDataTable& mediator) {
  require_boolean(dividend, "general small divide");
  if (!dividend.scheme().disjoint_with(divisor.scheme())) {
    throw SchemeError("general small divide: dividend and divisor share attributes");
  }
  const Scheme r = dividend.scheme().intersect(mediator.scheme());
  const Scheme s = divisor.scheme().intersect(mediator.scheme());
  return semidifference(dividend,
                        semidifference(natural_join(project(dividend, r), project(divisor, s)), mediator));
}

RankedDataTable div_great_composed(const RankedDataTable& dividend, const RankedDataTable& divisor,
                                   const RankedDataTable& mediator1, const RankedDataTable& mediator2) {
  require_boolean(dividend, "great divide");
  const Scheme& r = dividend.scheme();
  const Scheme& t = divisor.scheme();
  require_disjoint(r, t, "great divide");
  if (!r.is_subset_of(mediator1.scheme())) {
    throw SchemeError("great divide: first mediator must contain the dividend scheme");
  }
  const Scheme s = mediator1.scheme().minus(r);
  require_disjoint(s, t, "great divide");
  require_scheme(mediator2, s.unite(t), "second mediator");
  return div_darwen_composed(dividend, divisor, mediator1, mediator2);
}

RankedDataTable div_darwen_composed(const RankedDataTable& dividend, const RankedDataTable& divisor,
                                    const RankedDataTable& mediator1, const RankedDataTable& mediator2) {
  require_boolean(dividend, "darwen divide");
  return semidifference(natural_join(dividend, divisor),
                        semidifference(natural_join(dividend, mediator2), mediator1));
}

}  // namespace gradix
