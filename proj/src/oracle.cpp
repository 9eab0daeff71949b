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

#include "gradix/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace gradix::oracle {

TupleSet support(const Rel& r) {
  TupleSet s;
  for (const auto& row : r.rows) s.insert(row.first);
  return s;
}

TupleSet set_union(const TupleSet& a, const TupleSet& b) {
  TupleSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

TupleSet set_intersection(const TupleSet& a, const TupleSet& b) {
  TupleSet out;
  for (const auto& t : a) {
    if (b.count(t)) out.insert(t);
  }
  return out;
}

TupleSet set_difference(const TupleSet& a, const TupleSet& b) {
  TupleSet out;
  for (const auto& t : a) {
    if (!b.count(t)) out.insert(t);
  }
  return out;
}

TupleSet set_join(const TupleSet& a, const TupleSet& b) {
  TupleSet out;
  for (const auto& x : a) {
    for (const auto& y : b) {
      if (x.joinable(y)) out.insert(x.join(y));
    }
  }
  return out;
}

TupleSet set_project(const TupleSet& a, const Scheme& s) {
  TupleSet out;
  for (const auto& t : a) out.insert(t.project(s));
  return out;
}

TupleSet set_semijoin(const TupleSet& a, const TupleSet& b) {
  TupleSet out;
  for (const auto& x : a) {
    if (std::any_of(b.begin(), b.end(), [&](const Tuple& y) { return x.joinable(y); })) out.insert(x);
  }
  return out;
}

TupleSet set_semidifference(const TupleSet& a, const TupleSet& b) {
  TupleSet out;
  for (const auto& x : a) {
    if (std::none_of(b.begin(), b.end(), [&](const Tuple& y) { return x.joinable(y); })) out.insert(x);
  }
  return out;
}

TupleSet set_with_range(const TupleSet& d1, const Scheme& s1, const TupleSet& d2, const Scheme& s2) {
  const Scheme r = s1.minus(s2);
  TupleSet out;
  for (const auto& x : set_project(d1, r)) {
    bool all = true;
    for (const auto& s : d2) all = all && d1.count(x.join(s));
    if (all) out.insert(x);
  }
  return out;
}

TupleSet set_small_original(const TupleSet& d1, const TupleSet& d2, const TupleSet& d3) {
  TupleSet out;
  for (const auto& r : d1) {
    bool all = true;
    for (const auto& s : d2) all = all && d3.count(r.join(s));
    if (all) out.insert(r);
  }
  return out;
}

TupleSet set_small_general(const TupleSet& d1, const Scheme& s1, const TupleSet& d2, const Scheme& s2,
                           const TupleSet& d3, const Scheme& s3) {
  const Scheme r = s1.intersect(s3);
  const Scheme s = s2.intersect(s3);
  const TupleSet d2s = set_project(d2, s);
  const TupleSet d3rs = set_project(d3, r.unite(s));
  TupleSet out;
  for (const auto& rt : d1) {
    bool all = true;
    for (const auto& x : d2s) all = all && d3rs.count(rt.project(r).join(x));
    if (all) out.insert(rt);
  }
  return out;
}

TupleSet set_todd(const TupleSet& d1, const Scheme& s1, const TupleSet& d2, const Scheme& s2) {
  const Scheme s = s1.intersect(s2);
  const Scheme r = s1.minus(s);
  const Scheme t = s2.minus(s);
  TupleSet out;
  for (const auto& x : set_project(d1, r)) {
    for (const auto& y : set_project(d2, t)) {
      bool all = true;
      for (const auto& st : d2) {
        if (st.project(t) == y) all = all && d1.count(x.join(st.project(s)));
      }
      if (all) out.insert(x.join(y));
    }
  }
  return out;
}

TupleSet set_great_original(const TupleSet& d1, const Scheme& s1, const TupleSet& d2, const Scheme& s2,
                            const TupleSet& d3, const Scheme& s3, const TupleSet& d4, const Scheme& s4) {
  const Scheme s = s3.minus(s1);
  (void)s4;
  TupleSet out;
  for (const auto& r : d1) {
    for (const auto& t : d2) {
      bool all = true;
      for (const auto& st : d4) {
        if (st.project(s2) == t) all = all && d3.count(r.join(st.project(s)));
      }
      if (all) out.insert(r.join(t));
    }
  }
  return out;
}

TupleSet set_darwen(const TupleSet& d1, const Scheme& s1, const TupleSet& d2, const TupleSet& d3,
                    const TupleSet& d4) {
  TupleSet out;
  for (const auto& u : set_join(d1, d2)) {
    const Tuple r1 = u.project(s1);
    bool all = true;
    for (const auto& r4 : d4) {
      if (!u.joinable(r4)) continue;
      const Tuple r14 = r1.join(r4);
      all = all && std::any_of(d3.begin(), d3.end(), [&](const Tuple& r3) { return r14.joinable(r3); });
    }
    if (all) out.insert(u);
  }
  return out;
}

// ---------------------------------------------------------------------------

Domain domain_of(const std::vector<const Rel*>& rels) {
  Domain dom;
  std::map<Attribute, std::set<Value>> vals;
  for (const Rel* r : rels) {
    for (const auto& a : r->scheme) vals[a];
    for (const auto& row : r->rows) {
      for (const auto& [a, v] : row.first.cells()) vals[a].insert(v);
    }
  }
  for (auto& [a, vs] : vals) {
    std::vector<Value> list(vs.begin(), vs.end());
    Value fresh = std::string("#fresh");
    if (!list.empty()) {
      const Value& last = list.back();
      if (const auto* i = std::get_if<std::int64_t>(&last)) fresh = *i + 1;
      if (const auto* d = std::get_if<double>(&last)) fresh = *d + 1.5;
      if (const auto* s = std::get_if<std::string>(&last)) fresh = *s + "#fresh";
    }
    list.push_back(fresh);
    dom.emplace(a, std::move(list));
  }
  return dom;
}

std::vector<Tuple> all_tuples(const Scheme& s, const Domain& dom) {
  std::vector<std::vector<Tuple::Cell>> acc{{}};
  for (const auto& a : s) {
    auto it = dom.find(a);
    if (it == dom.end()) throw std::logic_error("oracle domain lacks attribute " + a);
    std::vector<std::vector<Tuple::Cell>> next;
    for (const auto& cells : acc) {
      for (const auto& v : it->second) {
        auto c = cells;
        c.emplace_back(a, v);
        next.push_back(std::move(c));
      }
    }
    acc = std::move(next);
  }
  std::vector<Tuple> out;
  for (auto& cells : acc) out.emplace_back(std::move(cells));
  return out;
}

namespace {

void put(Rel& r, const ResiduatedLattice& l, const Tuple& t, Degree d) {
  if (!(d == l.bottom())) r.rows[t] = d;
}

/// sup over the rows of `r` projecting onto each target tuple.
std::map<Tuple, Degree> projection(const ResiduatedLattice& l, const Rel& r, const Scheme& s) {
  std::map<Tuple, Degree> out;
  for (const auto& [t, a] : r.rows) {
    auto [it, inserted] = out.emplace(t.project(s), a);
    if (!inserted) it->second = l.join(it->second, a);
  }
  return out;
}

Degree at(const std::map<Tuple, Degree>& m, const Tuple& t, const ResiduatedLattice& l) {
  auto it = m.find(t);
  return it == m.end() ? l.bottom() : it->second;
}

}  // namespace

Rel naive_ranged(const ResiduatedLattice& l, const Rel& dividend, const Rel& divisor, const Rel& range) {
  const Domain dom = domain_of({&dividend, &divisor, &range});
  Rel out{range.scheme, {}};
  const auto ss = all_tuples(divisor.scheme, dom);
  for (const auto& r : all_tuples(range.scheme, dom)) {
    Degree acc = l.top();
    for (const auto& s : ss) {
      acc = l.meet(acc, l.otimes(range.at(r, l), l.residuum(divisor.at(s, l), dividend.at(r.join(s), l))));
    }
    put(out, l, r, acc);
  }
  return out;
}

Rel naive_gsdo(const ResiduatedLattice& l, const Rel& dividend, const Rel& divisor, const Rel& mediator) {
  const Domain dom = domain_of({&dividend, &divisor, &mediator});
  Rel out{dividend.scheme, {}};
  const auto ss = all_tuples(divisor.scheme, dom);
  for (const auto& r : all_tuples(dividend.scheme, dom)) {
    Degree acc = l.top();
    for (const auto& s : ss) acc = l.meet(acc, l.residuum(divisor.at(s, l), mediator.at(r.join(s), l)));
    put(out, l, r, l.otimes(dividend.at(r, l), acc));
  }
  return out;
}

Rel naive_gsd(const ResiduatedLattice& l, const Rel& dividend, const Rel& divisor, const Rel& mediator) {
  const Domain dom = domain_of({&dividend, &divisor, &mediator});
  const Scheme r = dividend.scheme.intersect(mediator.scheme);
  const Scheme s = divisor.scheme.intersect(mediator.scheme);
  const auto d2s = projection(l, divisor, s);
  const auto d3rs = projection(l, mediator, r.unite(s));
  Rel out{dividend.scheme, {}};
  const auto ss = all_tuples(s, dom);
  for (const auto& [rt, a] : dividend.rows) {
    const Tuple rp = rt.project(r);
    Degree acc = l.top();
    for (const auto& x : ss) acc = l.meet(acc, l.residuum(at(d2s, x, l), at(d3rs, rp.join(x), l)));
    put(out, l, rt, l.otimes(a, acc));
  }
  return out;
}

Rel naive_gcodd(const ResiduatedLattice& l, const Rel& dividend, const Rel& divisor, const Rel& universe) {
  const Domain dom = domain_of({&dividend, &divisor, &universe});
  Rel out{universe.scheme, {}};
  const auto ss = all_tuples(divisor.scheme, dom);
  for (const auto& row : universe.rows) {
    Degree acc = l.top();
    for (const auto& s : ss) acc = l.meet(acc, l.residuum(divisor.at(s, l), dividend.at(row.first.join(s), l)));
    put(out, l, row.first, acc);
  }
  return out;
}

Rel naive_gtodd(const ResiduatedLattice& l, const Rel& dividend, const Rel& divisor, const Rel& universe) {
  const Domain dom = domain_of({&dividend, &divisor, &universe});
  const Scheme s = dividend.scheme.intersect(divisor.scheme);
  const Scheme r = dividend.scheme.minus(s);
  const Scheme t = divisor.scheme.minus(s);
  Rel out{universe.scheme, {}};
  const auto ss = all_tuples(s, dom);
  for (const auto& row : universe.rows) {
    const Tuple rp = row.first.project(r);
    const Tuple tp = row.first.project(t);
    Degree acc = l.top();
    for (const auto& x : ss) {
      acc = l.meet(acc, l.residuum(divisor.at(x.join(tp), l), dividend.at(rp.join(x), l)));
    }
    put(out, l, row.first, acc);
  }
  return out;
}

Rel naive_ggdo(const ResiduatedLattice& l, const Rel& d1, const Rel& d2, const Rel& d3, const Rel& d4) {
  const Domain dom = domain_of({&d1, &d2, &d3, &d4});
  const Scheme s = d3.scheme.minus(d1.scheme);
  Rel out{d1.scheme.unite(d2.scheme), {}};
  const auto ss = all_tuples(s, dom);
  for (const auto& [r, a] : d1.rows) {
    for (const auto& [t, b] : d2.rows) {
      Degree acc = l.top();
      for (const auto& x : ss) acc = l.meet(acc, l.residuum(d4.at(x.join(t), l), d3.at(r.join(x), l)));
      put(out, l, r.join(t), l.otimes(l.otimes(a, b), acc));
    }
  }
  return out;
}

Rel naive_gddo(const ResiduatedLattice& l, const Rel& d1, const Rel& d2, const Rel& d3, const Rel& d4) {
  const Domain dom = domain_of({&d1, &d2, &d3, &d4});
  Rel out{d1.scheme.unite(d2.scheme), {}};
  const auto r4s = all_tuples(d4.scheme, dom);
  for (const auto& [r1, a] : d1.rows) {
    for (const auto& [r2, b] : d2.rows) {
      if (!r1.joinable(r2)) continue;
      const Tuple u = r1.join(r2);
      Degree acc = l.top();
      for (const auto& r4 : r4s) {
        if (!u.joinable(r4)) continue;
        const Tuple r14 = r1.join(r4);
        Degree best = l.bottom();
        for (const auto& [r3, c] : d3.rows) {
          if (r14.joinable(r3)) best = l.join(best, c);
        }
        acc = l.meet(acc, l.residuum(d4.at(r4, l), best));
      }
      put(out, l, u, l.otimes(l.otimes(a, b), acc));
    }
  }
  return out;
}

Degree residuum_by_search(const ResiduatedLattice& l, Degree a, Degree b, int steps) {
  if (l.is_finite()) {
    std::vector<Degree> ok;
    for (Degree c : l.elements()) {
      if (l.leq(l.otimes(a, c), b)) ok.push_back(c);
    }
    for (Degree c : ok) {
      if (std::all_of(ok.begin(), ok.end(), [&](Degree d) { return l.leq(d, c); })) return c;
    }
    throw std::logic_error("no greatest residual");
  }
  auto fits = [&](double c) { return l.otimes(a, Degree{c}).value <= b.value + 1e-12; };
  int best = 0;
  for (int k = 0; k <= steps; ++k) {
    if (fits(static_cast<double>(k) / steps)) best = k;
  }
  double lo = static_cast<double>(best) / steps;
  if (best == steps) return Degree{1.0};
  double hi = static_cast<double>(best + 1) / steps;
  for (int i = 0; i < 60; ++i) {
    const double mid = (lo + hi) / 2;
    if (fits(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return Degree{lo};
}

}  // namespace gradix::oracle
