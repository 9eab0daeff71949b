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

#include "gradix/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "gradix/error.hpp"

namespace gradix {

namespace {

constexpr double kTolerance = 1e-9;
// Lukasiewicz arithmetic is snapped to the bounds when this close to them.
constexpr double kSnap = 1e-12;

double parse_real(std::string_view text) {
  std::string s(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
    throw PreconditionError("not a decimal degree: '" + s + "'");
  }
  return v;
}

// ---------------------------------------------------------------------------
// [0,1] with one of the three continuous t-norms.

class UnitIntervalLattice final : public ResiduatedLattice {
 public:
  explicit UnitIntervalLattice(LatticeKind kind) : kind_(kind) {}

  LatticeKind kind() const override { return kind_; }

  std::string name() const override {
    switch (kind_) {
      case LatticeKind::goedel: return "godel";
      case LatticeKind::lukasiewicz: return "lukasiewicz";
      default: return "goguen";
    }
  }

  Degree bottom() const override { return {0.0}; }
  Degree top() const override { return {1.0}; }
  Degree meet(Degree a, Degree b) const override { return {std::min(a.value, b.value)}; }
  Degree join(Degree a, Degree b) const override { return {std::max(a.value, b.value)}; }

  Degree otimes(Degree a, Degree b) const override {
    switch (kind_) {
      case LatticeKind::goedel: return {std::min(a.value, b.value)};
      case LatticeKind::lukasiewicz: {
        if (a.value == 1.0) return b;
        if (b.value == 1.0) return a;
        const double v = a.value + b.value - 1.0;
        return {v < kSnap ? 0.0 : v};
      }
      default: return {a.value * b.value};
    }
  }

  Degree residuum(Degree a, Degree b) const override {
    if (a.value <= b.value) return {1.0};
    switch (kind_) {
      case LatticeKind::goedel: return b;
      case LatticeKind::lukasiewicz: {
        const double v = 1.0 - a.value + b.value;
        return {v > 1.0 - kSnap ? 1.0 : v};
      }
      default: {
        const double v = b.value / a.value;
        return {v > 1.0 - kSnap ? 1.0 : v};
      }
    }
  }

  bool leq(Degree a, Degree b) const override { return a.value <= b.value; }
  bool equal(Degree a, Degree b) const override { return std::abs(a.value - b.value) <= kTolerance; }
  double deviation(Degree a, Degree b) const override { return std::abs(a.value - b.value); }
  double tolerance() const override { return kTolerance; }

  void validate(Degree a) const override {
    if (!(a.value >= 0.0 && a.value <= 1.0)) {
      throw PreconditionError("degree " + format_real(a.value) + " outside [0,1]");
    }
  }

  bool is_finite() const override { return false; }
  std::vector<Degree> elements() const override { return {}; }
  std::string format(Degree a) const override { return format_real(a.value); }

  Degree parse(std::string_view text) const override {
    const Degree d{parse_real(text)};
    validate(d);
    return d;
  }

 private:
  LatticeKind kind_;
};

// ---------------------------------------------------------------------------
// Finite chain 0 < 1/(n-1) < ... < 1 with exact integer level arithmetic.

class ChainLattice final : public ResiduatedLattice {
 public:
  ChainLattice(int levels, ChainNorm norm, bool boolean)
      : levels_(levels), norm_(norm), boolean_(boolean) {
    if (levels < 2) throw PreconditionError("a finite chain needs at least 2 levels");
  }

  LatticeKind kind() const override { return boolean_ ? LatticeKind::boolean : LatticeKind::finite_chain; }

  std::string name() const override {
    if (boolean_) return "boolean";
    std::string n = "chain:" + std::to_string(levels_);
    if (norm_ == ChainNorm::goedel) n += ":godel";
    return n;
  }

  Degree bottom() const override { return {0.0}; }
  Degree top() const override { return {static_cast<double>(levels_ - 1)}; }
  Degree meet(Degree a, Degree b) const override { return {std::min(a.value, b.value)}; }
  Degree join(Degree a, Degree b) const override { return {std::max(a.value, b.value)}; }

  Degree otimes(Degree a, Degree b) const override {
    if (norm_ == ChainNorm::goedel) return {std::min(a.value, b.value)};
    return {std::max(a.value + b.value - (levels_ - 1), 0.0)};
  }

  Degree residuum(Degree a, Degree b) const override {
    if (a.value <= b.value) return top();
    if (norm_ == ChainNorm::goedel) return b;
    return {(levels_ - 1) - a.value + b.value};
  }

  bool leq(Degree a, Degree b) const override { return a.value <= b.value; }
  bool equal(Degree a, Degree b) const override { return a == b; }
  double deviation(Degree a, Degree b) const override {
    return std::abs(a.value - b.value) / (levels_ - 1);
  }
  double tolerance() const override { return 0.0; }

  void validate(Degree a) const override {
    if (!(a.value >= 0 && a.value <= levels_ - 1) || a.value != std::floor(a.value)) {
      throw PreconditionError("degree index " + format_real(a.value) + " is not a level of " + name());
    }
  }

  bool is_finite() const override { return true; }

  std::vector<Degree> elements() const override {
    std::vector<Degree> out;
    for (int k = 0; k < levels_; ++k) out.push_back({static_cast<double>(k)});
    return out;
  }

  std::string format(Degree a) const override { return format_real(a.value / (levels_ - 1)); }

  Degree parse(std::string_view text) const override {
    const double v = parse_real(text);
    const double level = v * (levels_ - 1);
    const double rounded = std::round(level);
    if (v < 0.0 || v > 1.0 || std::abs(level - rounded) > 1e-6) {
      throw PreconditionError("rank '" + std::string(text) + "' is not a level of " + name());
    }
    return {rounded};
  }

 private:
  int levels_;
  ChainNorm norm_;
  bool boolean_;
};

// ---------------------------------------------------------------------------
// Arbitrary finite lattice given by carrier, order and multiplication table.

class TableLattice final : public ResiduatedLattice {
 public:
  explicit TableLattice(const TableSpec& spec);

  LatticeKind kind() const override { return LatticeKind::finite_table; }
  std::string name() const override { return name_; }

  Degree bottom() const override { return idx(bottom_); }
  Degree top() const override { return idx(top_); }
  Degree meet(Degree a, Degree b) const override { return idx(meet_[at(a, b)]); }
  Degree join(Degree a, Degree b) const override { return idx(join_[at(a, b)]); }
  Degree otimes(Degree a, Degree b) const override { return idx(otimes_[at(a, b)]); }
  Degree residuum(Degree a, Degree b) const override { return idx(residuum_[at(a, b)]); }
  bool leq(Degree a, Degree b) const override { return leq_[at(a, b)]; }
  bool equal(Degree a, Degree b) const override { return a == b; }
  double deviation(Degree a, Degree b) const override { return a == b ? 0.0 : 1.0; }
  double tolerance() const override { return 0.0; }

  void validate(Degree a) const override {
    if (!(a.value >= 0 && a.value < static_cast<double>(n_)) || a.value != std::floor(a.value)) {
      throw PreconditionError("degree index " + format_real(a.value) + " not in carrier");
    }
  }

  bool is_finite() const override { return true; }

  std::vector<Degree> elements() const override {
    std::vector<Degree> out;
    for (std::size_t k = 0; k < n_; ++k) out.push_back(idx(k));
    return out;
  }

  std::string format(Degree a) const override { return labels_.at(static_cast<std::size_t>(a.value)); }

  Degree parse(std::string_view text) const override {
    for (std::size_t k = 0; k < n_; ++k) {
      if (labels_[k] == text) return idx(k);
    }
    if (text == "0") return bottom();
    if (text == "1") return top();
    throw PreconditionError("'" + std::string(text) + "' is not an element of the table lattice");
  }

  void set_name(std::string n) { name_ = std::move(n); }

 private:
  static Degree idx(std::size_t k) { return {static_cast<double>(k)}; }
  std::size_t at(Degree a, Degree b) const {
    return static_cast<std::size_t>(a.value) * n_ + static_cast<std::size_t>(b.value);
  }
  std::size_t at(std::size_t a, std::size_t b) const { return a * n_ + b; }

  [[noreturn]] void fail(const std::string& axiom, const std::string& detail) const {
    throw LatticeValidationError(axiom, detail);
  }
  std::string lab(std::size_t k) const { return labels_[k]; }

  std::size_t n_ = 0;
  std::vector<std::string> labels_;
  std::vector<char> leq_;
  std::vector<std::size_t> meet_, join_, otimes_, residuum_;
  std::size_t bottom_ = 0, top_ = 0;
  std::string name_ = "table";
};

TableLattice::TableLattice(const TableSpec& spec) : labels_(spec.carrier) {
  n_ = labels_.size();
  if (n_ < 2) fail("carrier", "at least two elements are required");
  std::map<std::string, std::size_t> index;
  for (std::size_t k = 0; k < n_; ++k) {
    if (!index.emplace(labels_[k], k).second) fail("carrier", "duplicate element '" + labels_[k] + "'");
  }
  auto lookup = [&](const std::string& s) {
    auto it = index.find(s);
    if (it == index.end()) fail("carrier", "unknown element '" + s + "'");
    return it->second;
  };

  // Partial order: reflexive-transitive closure of the listed pairs.
  leq_.assign(n_ * n_, 0);
  for (std::size_t k = 0; k < n_; ++k) leq_[at(k, k)] = 1;
  for (const auto& [a, b] : spec.order) leq_[at(lookup(a), lookup(b))] = 1;
  for (std::size_t m = 0; m < n_; ++m)
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (leq_[at(i, m)] && leq_[at(m, j)]) leq_[at(i, j)] = 1;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (leq_[at(i, j)] && leq_[at(j, i)]) fail("antisymmetry", lab(i) + " <= " + lab(j) + " <= " + lab(i));

  // Bounds and binary meets/joins.
  auto find_extreme = [&](bool least) -> std::size_t {
    for (std::size_t c = 0; c < n_; ++c) {
      bool ok = true;
      for (std::size_t x = 0; x < n_ && ok; ++x) ok = least ? leq_[at(c, x)] : leq_[at(x, c)];
      if (ok) return c;
    }
    fail("bounded", least ? "no least element" : "no greatest element");
  };
  bottom_ = find_extreme(true);
  top_ = find_extreme(false);

  meet_.assign(n_ * n_, 0);
  join_.assign(n_ * n_, 0);
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) {
      std::vector<std::size_t> lower, upper;
      for (std::size_t c = 0; c < n_; ++c) {
        if (leq_[at(c, a)] && leq_[at(c, b)]) lower.push_back(c);
        if (leq_[at(a, c)] && leq_[at(b, c)]) upper.push_back(c);
      }
      auto greatest = std::find_if(lower.begin(), lower.end(), [&](std::size_t c) {
        return std::all_of(lower.begin(), lower.end(), [&](std::size_t d) { return leq_[at(d, c)] != 0; });
      });
      auto least = std::find_if(upper.begin(), upper.end(), [&](std::size_t c) {
        return std::all_of(upper.begin(), upper.end(), [&](std::size_t d) { return leq_[at(c, d)] != 0; });
      });
      if (greatest == lower.end()) fail("lattice", "no meet of " + lab(a) + " and " + lab(b));
      if (least == upper.end()) fail("lattice", "no join of " + lab(a) + " and " + lab(b));
      meet_[at(a, b)] = *greatest;
      join_[at(a, b)] = *least;
    }
  }

  // Multiplication table, completed by commutativity and the unit law.
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  otimes_.assign(n_ * n_, unset);
  for (const auto& [a, b, c] : spec.products) {
    const std::size_t ia = lookup(a), ib = lookup(b), ic = lookup(c);
    if (otimes_[at(ia, ib)] != unset && otimes_[at(ia, ib)] != ic) {
      fail("function", "conflicting products for " + a + " (x) " + b);
    }
    otimes_[at(ia, ib)] = ic;
  }
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) {
      if (otimes_[at(a, b)] == unset) otimes_[at(a, b)] = otimes_[at(b, a)];
    }
  }
  for (std::size_t a = 0; a < n_; ++a) {
    if (otimes_[at(a, top_)] == unset) otimes_[at(a, top_)] = a;
    if (otimes_[at(top_, a)] == unset) otimes_[at(top_, a)] = a;
    if (otimes_[at(a, bottom_)] == unset) otimes_[at(a, bottom_)] = bottom_;
    if (otimes_[at(bottom_, a)] == unset) otimes_[at(bottom_, a)] = bottom_;
  }
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      if (otimes_[at(a, b)] == unset) fail("totality", "missing product " + lab(a) + " (x) " + lab(b));

  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      if (otimes_[at(a, b)] != otimes_[at(b, a)]) fail("commutativity", lab(a) + ", " + lab(b));
  for (std::size_t a = 0; a < n_; ++a)
    if (otimes_[at(a, top_)] != a) fail("unit", lab(a) + " (x) " + lab(top_) + " != " + lab(a));
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      for (std::size_t c = 0; c < n_; ++c)
        if (otimes_[at(otimes_[at(a, b)], c)] != otimes_[at(a, otimes_[at(b, c)])]) {
          fail("associativity", "(" + lab(a) + " (x) " + lab(b) + ") (x) " + lab(c));
        }
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      for (std::size_t c = 0; c < n_; ++c)
        if (leq_[at(a, b)] && !leq_[at(otimes_[at(a, c)], otimes_[at(b, c)])]) {
          fail("monotonicity", lab(a) + " <= " + lab(b) + " but not under (x) " + lab(c));
        }

  // Residuum as the greatest c with a (x) c <= b; it must exist.
  residuum_.assign(n_ * n_, 0);
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) {
      std::vector<std::size_t> sols;
      for (std::size_t c = 0; c < n_; ++c)
        if (leq_[at(otimes_[at(a, c)], b)]) sols.push_back(c);
      auto best = std::find_if(sols.begin(), sols.end(), [&](std::size_t c) {
        return std::all_of(sols.begin(), sols.end(), [&](std::size_t d) { return leq_[at(d, c)] != 0; });
      });
      if (best == sols.end()) fail("residuation", "no greatest c with " + lab(a) + " (x) c <= " + lab(b));
      residuum_[at(a, b)] = *best;
    }
  }
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      for (std::size_t c = 0; c < n_; ++c)
        if ((leq_[at(otimes_[at(a, b)], c)] != 0) != (leq_[at(a, residuum_[at(b, c)])] != 0)) {
          fail("adjointness", lab(a) + ", " + lab(b) + ", " + lab(c));
        }
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

Degree ResiduatedLattice::inf(std::span<const Degree> degrees) const {
  Degree acc = top();
  for (Degree d : degrees) acc = meet(acc, d);
  return acc;
}

Degree ResiduatedLattice::sup(std::span<const Degree> degrees) const {
  Degree acc = bottom();
  for (Degree d : degrees) acc = join(acc, d);
  return acc;
}

std::string format_real(double v) {
  if (v == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  std::string s(buf);
  if (s.find('e') == std::string::npos && s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  return s;
}

ResiduatedLatticePtr make_lattice(LatticeKind kind, const LatticeParams& params) {
  switch (kind) {
    case LatticeKind::boolean:
      return std::make_shared<ChainLattice>(2, ChainNorm::goedel, true);
    case LatticeKind::goedel:
    case LatticeKind::lukasiewicz:
    case LatticeKind::goguen:
      return std::make_shared<UnitIntervalLattice>(kind);
    case LatticeKind::finite_chain:
      return std::make_shared<ChainLattice>(params.levels, params.chain_norm, false);
    case LatticeKind::finite_table:
      return std::make_shared<TableLattice>(params.table);
  }
  throw PreconditionError("unknown lattice kind");
}

TableSpec parse_table_spec(std::string_view text) {
  TableSpec spec;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    std::istringstream words(t);
    std::vector<std::string> w;
    for (std::string x; words >> x;) w.push_back(x);
    if (w[0] == "carrier") {
      spec.carrier.assign(w.begin() + 1, w.end());
    } else if (w[0] == "leq") {
      if (w.size() != 3) throw PreconditionError("line " + std::to_string(lineno) + ": expected 'leq a b'");
      spec.order.emplace_back(w[1], w[2]);
    } else if (w.size() == 3) {
      spec.products.emplace_back(w[0], w[1], w[2]);
    } else {
      throw PreconditionError("line " + std::to_string(lineno) + ": expected 'a b a(x)b'");
    }
  }
  return spec;
}

ResiduatedLatticePtr lattice_from_selection(std::string_view selection) {
  const std::string s(selection);
  if (s == "boolean") return make_lattice(LatticeKind::boolean);
  if (s == "godel" || s == "goedel") return make_lattice(LatticeKind::goedel);
  if (s == "lukasiewicz") return make_lattice(LatticeKind::lukasiewicz);
  if (s == "goguen" || s == "product") return make_lattice(LatticeKind::goguen);
  if (s.rfind("chain:", 0) == 0) {
    LatticeParams p;
    std::string rest = s.substr(6);
    if (auto colon = rest.find(':'); colon != std::string::npos) {
      const std::string norm = rest.substr(colon + 1);
      rest = rest.substr(0, colon);
      if (norm == "godel" || norm == "goedel") {
        p.chain_norm = ChainNorm::goedel;
      } else if (norm != "lukasiewicz") {
        throw PreconditionError("unknown chain norm '" + norm + "'");
      }
    }
    int n = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
    if (ec != std::errc{} || ptr != rest.data() + rest.size()) {
      throw PreconditionError("bad chain size in '" + s + "'");
    }
    p.levels = n;
    return make_lattice(LatticeKind::finite_chain, p);
  }
  if (s.rfind("table:", 0) == 0) {
    const std::string path = s.substr(6);
    std::ifstream f(path);
    if (!f) throw IoError("cannot read lattice table '" + path + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    LatticeParams p;
    p.table = parse_table_spec(buf.str());
    auto lat = std::make_shared<TableLattice>(p.table);
    lat->set_name(s);
    return lat;
  }
  throw PreconditionError("unknown lattice '" + s + "'");
}

}  // namespace gradix
