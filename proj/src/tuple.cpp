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

#include "gradix/tuple.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>

#include "gradix/error.hpp"
#include "gradix/lattice.hpp"

namespace gradix {

ValueType type_of(const Value& v) {
  switch (v.index()) {
    case 0: return ValueType::integer;
    case 1: return ValueType::decimal;
    default: return ValueType::text;
  }
}

std::string to_string(ValueType t) {
  switch (t) {
    case ValueType::integer: return "int";
    case ValueType::decimal: return "decimal";
    default: return "text";
  }
}

std::string format_value(const Value& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&v)) return format_real(*d);
  return std::get<std::string>(v);
}

// ---------------------------------------------------------------------------

Scheme::Scheme(std::initializer_list<Attribute> attrs) : Scheme(std::vector<Attribute>(attrs)) {}

Scheme::Scheme(std::vector<Attribute> attrs) : attrs_(std::move(attrs)) {
  std::sort(attrs_.begin(), attrs_.end());
  attrs_.erase(std::unique(attrs_.begin(), attrs_.end()), attrs_.end());
}

bool Scheme::contains(const Attribute& a) const {
  return std::binary_search(attrs_.begin(), attrs_.end(), a);
}

bool Scheme::is_subset_of(const Scheme& other) const {
  return std::includes(other.attrs_.begin(), other.attrs_.end(), attrs_.begin(), attrs_.end());
}

bool Scheme::disjoint_with(const Scheme& other) const { return intersect(other).empty(); }

Scheme Scheme::unite(const Scheme& other) const {
  Scheme out;
  std::set_union(attrs_.begin(), attrs_.end(), other.attrs_.begin(), other.attrs_.end(),
                 std::back_inserter(out.attrs_));
  return out;
}

Scheme Scheme::intersect(const Scheme& other) const {
  Scheme out;
  std::set_intersection(attrs_.begin(), attrs_.end(), other.attrs_.begin(), other.attrs_.end(),
                        std::back_inserter(out.attrs_));
  return out;
}

Scheme Scheme::minus(const Scheme& other) const {
  Scheme out;
  std::set_difference(attrs_.begin(), attrs_.end(), other.attrs_.begin(), other.attrs_.end(),
                      std::back_inserter(out.attrs_));
  return out;
}

std::string Scheme::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < attrs_.size(); ++i) {
    if (i) s += ",";
    s += attrs_[i];
  }
  return s + "}";
}

// ---------------------------------------------------------------------------

Tuple::Tuple(std::initializer_list<Cell> cells) : Tuple(std::vector<Cell>(cells)) {}

Tuple::Tuple(std::vector<Cell> cells) : cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end(), [](const Cell& a, const Cell& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < cells_.size(); ++i) {
    if (cells_[i].first == cells_[i - 1].first) {
      throw SchemeError("attribute " + cells_[i].first + " assigned twice in a tuple");
    }
  }
}

Scheme Tuple::scheme() const {
  std::vector<Attribute> a;
  a.reserve(cells_.size());
  for (const auto& c : cells_) a.push_back(c.first);
  return Scheme(std::move(a));
}

bool Tuple::has(const Attribute& a) const {
  return std::any_of(cells_.begin(), cells_.end(), [&](const Cell& c) { return c.first == a; });
}

const Value& Tuple::at(const Attribute& a) const {
  for (const auto& c : cells_) {
    if (c.first == a) return c.second;
  }
  throw SchemeError("attribute " + a + " not in tuple " + to_string());
}

Tuple Tuple::project(const Scheme& s) const {
  Tuple out;
  out.cells_.reserve(s.size());
  auto it = cells_.begin();
  for (const auto& a : s) {
    while (it != cells_.end() && it->first < a) ++it;
    if (it == cells_.end() || it->first != a) {
      throw SchemeError("cannot project " + to_string() + " onto " + s.to_string());
    }
    out.cells_.push_back(*it);
  }
  return out;
}

bool Tuple::joinable(const Tuple& other) const {
  auto a = cells_.begin();
  auto b = other.cells_.begin();
  while (a != cells_.end() && b != other.cells_.end()) {
    if (a->first < b->first) {
      ++a;
    } else if (b->first < a->first) {
      ++b;
    } else {
      if (a->second != b->second) return false;
      ++a;
      ++b;
    }
  }
  return true;
}

Tuple Tuple::join(const Tuple& other) const {
  Tuple out;
  out.cells_.reserve(cells_.size() + other.cells_.size());
  auto a = cells_.begin();
  auto b = other.cells_.begin();
  while (a != cells_.end() || b != other.cells_.end()) {
    if (b == other.cells_.end() || (a != cells_.end() && a->first < b->first)) {
      out.cells_.push_back(*a++);
    } else if (a == cells_.end() || b->first < a->first) {
      out.cells_.push_back(*b++);
    } else {
      if (a->second != b->second) {
        throw NotJoinable(to_string() + " and " + other.to_string() + " disagree on " + a->first);
      }
      out.cells_.push_back(*a);
      ++a;
      ++b;
    }
  }
  return out;
}

std::string Tuple::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (i) s += ", ";
    s += cells_[i].first + ":" + format_value(cells_[i].second);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------

void AttributeRegistry::declare(const Attribute& a, ValueType t) {
  auto [it, inserted] = types_.emplace(a, t);
  if (!inserted && it->second != t) {
    throw SchemeError("attribute " + a + " already declared as " + gradix::to_string(it->second) +
                      ", not " + gradix::to_string(t));
  }
}

ValueType AttributeRegistry::type(const Attribute& a) const {
  auto it = types_.find(a);
  if (it == types_.end()) throw SchemeError("attribute " + a + " has no declared type");
  return it->second;
}

void AttributeRegistry::check(const Attribute& a, const Value& v) const {
  if (type_of(v) != type(a)) {
    throw SchemeError("value " + format_value(v) + " is not of type " + gradix::to_string(type(a)) +
                      " required by attribute " + a);
  }
}

Value AttributeRegistry::parse(const Attribute& a, const std::string& text) const {
  switch (type(a)) {
    case ValueType::integer: {
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
      if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw SchemeError("'" + text + "' is not an integer value for attribute " + a);
      }
      return v;
    }
    case ValueType::decimal: {
      char* end = nullptr;
      const double v = std::strtod(text.c_str(), &end);
      if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(v)) {
        throw SchemeError("'" + text + "' is not a decimal value for attribute " + a);
      }
      return v;
    }
    default:
      return text;
  }
}

}  // namespace gradix
