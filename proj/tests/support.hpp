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

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gradix/table.hpp"

namespace gradix::test {

using Row = std::pair<std::vector<std::string>, double>;

/// Table whose rows list text values in the scheme's (sorted) attribute order.
inline RankedDataTable table(const ResiduatedLatticePtr& l, const Scheme& s, const std::vector<Row>& rows) {
  RankedDataTable t(s, l);
  for (const auto& [vals, d] : rows) {
    std::vector<Tuple::Cell> cells;
    std::size_t k = 0;
    for (const auto& a : s) cells.emplace_back(a, Value(vals.at(k++)));
    t.set(Tuple(std::move(cells)), Degree{d});
  }
  return t;
}

inline Tuple tup(const Scheme& s, const std::vector<std::string>& vals) {
  std::vector<Tuple::Cell> cells;
  std::size_t k = 0;
  for (const auto& a : s) cells.emplace_back(a, Value(vals.at(k++)));
  return Tuple(std::move(cells));
}

inline double score(const RankedDataTable& t, const std::vector<std::string>& vals) {
  return t.score(tup(t.scheme(), vals)).value;
}

}  // namespace gradix::test
