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
 * Ranked data tables and the fundamental relational operations on them.
 *
 * A table maps the tuples of its answer set to nonzero degrees; every other
 * tuple on the scheme implicitly scores 0. Operations never mutate their
 * arguments and drop zero scores from their results.
 */
#pragma once

#include <map>
#include <string>
#include <vector>

#include "gradix/lattice.hpp"
#include "gradix/tuple.hpp"

namespace gradix {

class RankedDataTable {
 public:
  using Rows = std::map<Tuple, Degree>;

  RankedDataTable(Scheme scheme, ResiduatedLatticePtr lattice);

  const Scheme& scheme() const noexcept { return scheme_; }
  const ResiduatedLattice& lattice() const noexcept { return *lattice_; }
  const ResiduatedLatticePtr& lattice_ptr() const noexcept { return lattice_; }

  /// Score of a tuple on the table's scheme (bottom outside the answer set).
  Degree score(const Tuple& t) const;
  const Rows& rows() const noexcept { return rows_; }
  std::size_t size() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return rows_.empty(); }
  /// All stored scores are the top element.
  bool non_ranked() const;

  /// Construction-time insertion: validates scheme and degree, overwrites any
  /// previous score and erases the row when `d` is bottom.
  void set(const Tuple& t, Degree d);

 private:
  Scheme scheme_;
  ResiduatedLatticePtr lattice_;
  Rows rows_;
};

bool same_lattice(const ResiduatedLatticePtr& a, const ResiduatedLatticePtr& b);

/// Throws LatticeMismatch when the tables use different lattices.
void require_same_lattice(const RankedDataTable& a, const RankedDataTable& b);

/// Table on the empty scheme scoring the empty tuple by `a`.
RankedDataTable dee(const ResiduatedLatticePtr& lattice, Degree a);
RankedDataTable empty_table(const ResiduatedLatticePtr& lattice, const Scheme& scheme);

RankedDataTable unite(const RankedDataTable& d1, const RankedDataTable& d2);
RankedDataTable intersect(const RankedDataTable& d1, const RankedDataTable& d2);
RankedDataTable natural_join(const RankedDataTable& d1, const RankedDataTable& d2);
RankedDataTable project(const RankedDataTable& d, const Scheme& target);
RankedDataTable semijoin(const RankedDataTable& d1, const RankedDataTable& d2);
/// d1(r) (x) (d2(r) -> 0).
RankedDataTable difference_graded(const RankedDataTable& d1, const RankedDataTable& d2);
RankedDataTable nabla(const RankedDataTable& d);
RankedDataTable delta(const RankedDataTable& d);
/// range(r) (x) (d1(r) -> d2(r)); the support stays inside the range.
RankedDataTable residuum_with_range(const RankedDataTable& d1, const RankedDataTable& d2,
                                    const RankedDataTable& range);

/// Largest pointwise deviation between two tables on the same scheme.
double max_deviation(const RankedDataTable& a, const RankedDataTable& b);
/// Pointwise equality under the lattice's degree equality.
bool tables_equal(const RankedDataTable& a, const RankedDataTable& b);

/// Rows in output order: descending score, then ascending tuple.
std::vector<std::pair<Tuple, Degree>> sorted_rows(const RankedDataTable& d);
/// Debug rendering `{A,B} [(A:a1, B:b1) 0.5, ...]`.
std::string to_string(const RankedDataTable& d);

/// Named tables sharing one lattice.
class DatabaseInstance {
 public:
  explicit DatabaseInstance(ResiduatedLatticePtr lattice) : lattice_(std::move(lattice)) {}

  const ResiduatedLatticePtr& lattice() const noexcept { return lattice_; }
  /// Throws LatticeMismatch for a foreign lattice and PreconditionError when
  /// the name is taken.
  void add(const std::string& name, RankedDataTable table);
  /// Adds or replaces.
  void put(const std::string& name, RankedDataTable table);
  bool contains(const std::string& name) const { return tables_.count(name) != 0; }
  /// Throws UnboundSymbol.
  const RankedDataTable& get(const std::string& name) const;
  const std::map<std::string, RankedDataTable>& tables() const noexcept { return tables_; }

 private:
  ResiduatedLatticePtr lattice_;
  std::map<std::string, RankedDataTable> tables_;
};

}  // namespace gradix
