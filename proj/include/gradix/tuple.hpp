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

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace gradix {

using Attribute = std::string;

enum class ValueType { integer, text, decimal };

/// Equality-only scalar. The ordering is used for deterministic output only.
using Value = std::variant<std::int64_t, double, std::string>;

ValueType type_of(const Value& v);
std::string to_string(ValueType t);
std::string format_value(const Value& v);

/// Finite set of attribute names, kept sorted.
class Scheme {
 public:
  Scheme() = default;
  Scheme(std::initializer_list<Attribute> attrs);
  explicit Scheme(std::vector<Attribute> attrs);

  const std::vector<Attribute>& attributes() const noexcept { return attrs_; }
  std::size_t size() const noexcept { return attrs_.size(); }
  bool empty() const noexcept { return attrs_.empty(); }
  bool contains(const Attribute& a) const;
  bool is_subset_of(const Scheme& other) const;
  bool disjoint_with(const Scheme& other) const;

  Scheme unite(const Scheme& other) const;
  Scheme intersect(const Scheme& other) const;
  Scheme minus(const Scheme& other) const;

  /// `{A,B}`
  std::string to_string() const;

  auto begin() const noexcept { return attrs_.begin(); }
  auto end() const noexcept { return attrs_.end(); }

  friend bool operator==(const Scheme&, const Scheme&) = default;
  friend auto operator<=>(const Scheme&, const Scheme&) = default;

 private:
  std::vector<Attribute> attrs_;
};

/// Assignment of values to the attributes of a scheme.
class Tuple {
 public:
  using Cell = std::pair<Attribute, Value>;

  Tuple() = default;
  Tuple(std::initializer_list<Cell> cells);
  explicit Tuple(std::vector<Cell> cells);

  const std::vector<Cell>& cells() const noexcept { return cells_; }
  Scheme scheme() const;
  bool has(const Attribute& a) const;
  /// Throws SchemeError when `a` is not on the tuple's scheme.
  const Value& at(const Attribute& a) const;

  /// Restriction r(S); throws SchemeError unless S is a subset of the scheme.
  Tuple project(const Scheme& s) const;
  /// Agreement on every shared attribute.
  bool joinable(const Tuple& other) const;
  /// Union of two joinable tuples; throws NotJoinable otherwise.
  Tuple join(const Tuple& other) const;

  std::string to_string() const;

  friend bool operator==(const Tuple&, const Tuple&) = default;
  friend auto operator<=>(const Tuple&, const Tuple&) = default;

 private:
  std::vector<Cell> cells_;
};

/// Per-session attribute typing: attributes with one name share one type.
class AttributeRegistry {
 public:
  /// Throws SchemeError when `a` is already declared with another type.
  void declare(const Attribute& a, ValueType t);
  bool declared(const Attribute& a) const { return types_.count(a) != 0; }
  ValueType type(const Attribute& a) const;
  /// Throws SchemeError when the value does not belong to the attribute type.
  void check(const Attribute& a, const Value& v) const;
  Value parse(const Attribute& a, const std::string& text) const;

 private:
  std::map<Attribute, ValueType> types_;
};

}  // namespace gradix
