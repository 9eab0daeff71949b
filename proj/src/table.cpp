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

#include "gradix/table.hpp"

#include <algorithm>

#include "gradix/error.hpp"

namespace gradix {

namespace {

bool on_scheme(const Tuple& t, const Scheme& s) {
  const auto& cells = t.cells();
  if (cells.size() != s.size()) return false;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].first != s.attributes()[i]) return false;
  }
  return true;
}

}  // namespace

RankedDataTable::RankedDataTable(Scheme scheme, ResiduatedLatticePtr lattice)
    : scheme_(std::move(scheme)), lattice_(std::move(lattice)) {
  if (!lattice_) throw PreconditionError("table needs a lattice");
}

Degree RankedDataTable::score(const Tuple& t) const {
  auto it = rows_.find(t);
  if (it != rows_.end()) return it->second;
  if (!on_scheme(t, scheme_)) {
    throw SchemeError("tuple " + t.to_string() + " is not on scheme " + scheme_.to_string());
  }
  return lattice_->bottom();
}

bool RankedDataTable::non_ranked() const {
  return std::all_of(rows_.begin(), rows_.end(), [&](const auto& r) { return r.second == lattice_->top(); });
}

void RankedDataTable::set(const Tuple& t, Degree d) {
  if (!on_scheme(t, scheme_)) {
    throw SchemeError("tuple " + t.to_string() + " is not on scheme " + scheme_.to_string());
  }
  lattice_->validate(d);
  if (lattice_->is_bottom(d)) {
    rows_.erase(t);
  } else {
    rows_[t] = d;
  }
}

bool same_lattice(const ResiduatedLatticePtr& a, const ResiduatedLatticePtr& b) {
  return a.get() == b.get() || (a && b && a->kind() != LatticeKind::finite_table && a->name() == b->name());
}

void require_same_lattice(const RankedDataTable& a, const RankedDataTable& b) {
  if (!same_lattice(a.lattice_ptr(), b.lattice_ptr())) {
    throw LatticeMismatch("tables over " + a.lattice().name() + " and " + b.lattice().name());
  }
}

namespace {

void require_same_scheme(const RankedDataTable& a, const RankedDataTable& b, const char* op) {
  if (a.scheme() != b.scheme()) {
    throw SchemeError(std::string(op) + " needs equal schemes, got " + a.scheme().to_string() + " and " +
                      b.scheme().to_string());
  }
}

template <class F>
RankedDataTable pointwise(const RankedDataTable& d1, const RankedDataTable& d2, F f) {
  RankedDataTable out(d1.scheme(), d1.lattice_ptr());
  for (const auto& [t, a] : d1.rows()) out.set(t, f(a, d2.score(t)));
  for (const auto& [t, b] : d2.rows()) {
    if (!d1.rows().count(t)) out.set(t, f(d1.lattice().bottom(), b));
  }
  return out;
}

}  // namespace

RankedDataTable dee(const ResiduatedLatticePtr& lattice, Degree a) {
  RankedDataTable out(Scheme{}, lattice);
  out.set(Tuple{}, a);
  return out;
}

RankedDataTable empty_table(const ResiduatedLatticePtr& lattice, const Scheme& scheme) {
  return RankedDataTable(scheme, lattice);
}

RankedDataTable unite(const RankedDataTable& d1, const RankedDataTable& d2) {
  require_same_lattice(d1, d2);
  require_same_scheme(d1, d2, "union");
  const auto& l = d1.lattice();
  return pointwise(d1, d2, [&](Degree a, Degree b) { return l.join(a, b); });
}

RankedDataTable intersect(const RankedDataTable& d1, const RankedDataTable& d2) {
  require_same_lattice(d1, d2);
  require_same_scheme(d1, d2, "intersection");
  const auto& l = d1.lattice();
  RankedDataTable out(d1.scheme(), d1.lattice_ptr());
  for (const auto& [t, a] : d1.rows()) {
    auto it = d2.rows().find(t);
    if (it != d2.rows().end()) out.set(t, l.meet(a, it->second));
  }
  return out;
}

RankedDataTable natural_join(const RankedDataTable& d1, const RankedDataTable& d2) {
  require_same_lattice(d1, d2);
  const auto& l = d1.lattice();
  const Scheme common = d1.scheme().intersect(d2.scheme());
  RankedDataTable out(d1.scheme().unite(d2.scheme()), d1.lattice_ptr());

  std::map<Tuple, std::vector<const std::pair<const Tuple, Degree>*>> by_key;
  for (const auto& row : d2.rows()) by_key[row.first.project(common)].push_back(&row);
  for (const auto& [t1, a] : d1.rows()) {
    auto it = by_key.find(t1.project(common));
    if (it == by_key.end()) continue;
    for (const auto* row : it->second) out.set(t1.join(row->first), l.otimes(a, row->second));
  }
  return out;
}

RankedDataTable project(const RankedDataTable& d, const Scheme& target) {
  if (!target.is_subset_of(d.scheme())) {
    throw SchemeError("cannot project " + d.scheme().to_string() + " onto " + target.to_string());
  }
  const auto& l = d.lattice();
  RankedDataTable out(target, d.lattice_ptr());
  std::map<Tuple, Degree> acc;
  for (const auto& [t, a] : d.rows()) {
    auto [it, inserted] = acc.emplace(t.project(target), a);
    if (!inserted) it->second = l.join(it->second, a);
  }
  for (const auto& [t, a] : acc) out.set(t, a);
  return out;
}

RankedDataTable semijoin(const RankedDataTable& d1, const RankedDataTable& d2) {
  return natural_join(d1, project(d2, d1.scheme().intersect(d2.scheme())));
}

RankedDataTable difference_graded(const RankedDataTable& d1, const RankedDataTable& d2) {
  require_same_lattice(d1, d2);
  require_same_scheme(d1, d2, "difference");
  const auto& l = d1.lattice();
  RankedDataTable out(d1.scheme(), d1.lattice_ptr());
  for (const auto& [t, a] : d1.rows()) out.set(t, l.otimes(a, l.residuum(d2.score(t), l.bottom())));
  return out;
}

RankedDataTable nabla(const RankedDataTable& d) {
  RankedDataTable out(d.scheme(), d.lattice_ptr());
  for (const auto& row : d.rows()) out.set(row.first, d.lattice().top());
  return out;
}

RankedDataTable delta(const RankedDataTable& d) {
  RankedDataTable out(d.scheme(), d.lattice_ptr());
  for (const auto& [t, a] : d.rows()) {
    if (d.lattice().is_top(a)) out.set(t, d.lattice().top());
  }
  return out;
}

RankedDataTable residuum_with_range(const RankedDataTable& d1, const RankedDataTable& d2,
                                    const RankedDataTable& range) {
  require_same_lattice(d1, range);
  require_same_lattice(d2, range);
  require_same_scheme(d1, range, "residuum with range");
  require_same_scheme(d2, range, "residuum with range");
  const auto& l = range.lattice();
  RankedDataTable out(range.scheme(), range.lattice_ptr());
  for (const auto& [t, c] : range.rows()) out.set(t, l.otimes(c, l.residuum(d1.score(t), d2.score(t))));
  return out;
}

double max_deviation(const RankedDataTable& a, const RankedDataTable& b) {
  require_same_scheme(a, b, "comparison");
  const auto& l = a.lattice();
  double dev = 0.0;
  for (const auto& [t, x] : a.rows()) dev = std::max(dev, l.deviation(x, b.score(t)));
  for (const auto& [t, y] : b.rows()) dev = std::max(dev, l.deviation(a.score(t), y));
  return dev;
}

bool tables_equal(const RankedDataTable& a, const RankedDataTable& b) {
  if (a.scheme() != b.scheme()) return false;
  const auto& l = a.lattice();
  for (const auto& [t, x] : a.rows()) {
    if (!l.equal(x, b.score(t))) return false;
  }
  for (const auto& [t, y] : b.rows()) {
    if (!l.equal(a.score(t), y)) return false;
  }
  return true;
}

std::vector<std::pair<Tuple, Degree>> sorted_rows(const RankedDataTable& d) {
  std::vector<std::pair<Tuple, Degree>> rows(d.rows().begin(), d.rows().end());
  std::stable_sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
    if (x.second != y.second) return x.second > y.second;
    return x.first < y.first;
  });
  return rows;
}

std::string to_string(const RankedDataTable& d) {
  std::string s = d.scheme().to_string() + " [";
  bool first = true;
  for (const auto& [t, a] : sorted_rows(d)) {
    if (!first) s += ", ";
    first = false;
    s += t.to_string() + " " + d.lattice().format(a);
  }
  return s + "]";
}

// ---------------------------------------------------------------------------

void DatabaseInstance::add(const std::string& name, RankedDataTable table) {
  if (contains(name)) throw PreconditionError("relation symbol " + name + " already bound");
  put(name, std::move(table));
}

void DatabaseInstance::put(const std::string& name, RankedDataTable table) {
  if (!same_lattice(lattice_, table.lattice_ptr())) {
    throw LatticeMismatch("table " + name + " uses " + table.lattice().name() + ", instance uses " +
                          lattice_->name());
  }
  tables_.insert_or_assign(name, std::move(table));
}

const RankedDataTable& DatabaseInstance::get(const std::string& name) const {
  auto it = tables_.find(name);
  if (it == tables_.end()) throw UnboundSymbol("relation symbol " + name + " is not bound");
  return it->second;
}

}  // namespace gradix
