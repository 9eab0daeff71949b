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
 * Complete residuated lattices used as structures of degrees.
 *
 * A lattice is an immutable object shared through ResiduatedLatticePtr. The
 * degrees it operates on are plain values: on the [0,1] lattices a Degree
 * holds the real score, on finite lattices it holds the element index (for
 * chains the index is the level, so the natural order is preserved).
 */
#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace gradix {

/// A member of the carrier of some lattice.
struct Degree {
  double value = 0.0;

  friend constexpr bool operator==(Degree, Degree) = default;
  friend constexpr auto operator<=>(Degree, Degree) = default;
};

enum class LatticeKind { boolean, goedel, lukasiewicz, goguen, finite_chain, finite_table };

/// Multiplication used on a finite chain.
enum class ChainNorm { lukasiewicz, goedel };

/// Textual description of a finite lattice: carrier labels, order pairs
/// (closed reflexively and transitively) and the multiplication table.
struct TableSpec {
  std::vector<std::string> carrier;
  std::vector<std::pair<std::string, std::string>> order;
  std::vector<std::tuple<std::string, std::string, std::string>> products;
};

struct LatticeParams {
  int levels = 2;
  ChainNorm chain_norm = ChainNorm::lukasiewicz;
  TableSpec table;
};

class ResiduatedLattice {
 public:
  virtual ~ResiduatedLattice() = default;

  virtual LatticeKind kind() const = 0;
  /// Selection string that recreates this lattice (`godel`, `chain:5`, ...).
  virtual std::string name() const = 0;

  virtual Degree bottom() const = 0;
  virtual Degree top() const = 0;
  virtual Degree meet(Degree a, Degree b) const = 0;
  virtual Degree join(Degree a, Degree b) const = 0;
  virtual Degree otimes(Degree a, Degree b) const = 0;
  virtual Degree residuum(Degree a, Degree b) const = 0;
  virtual bool leq(Degree a, Degree b) const = 0;

  /// Degree equality: exact on finite lattices, within tolerance() on [0,1].
  virtual bool equal(Degree a, Degree b) const = 0;
  /// Distance used by equivalence reports; 0 iff equal() on finite lattices.
  virtual double deviation(Degree a, Degree b) const = 0;
  virtual double tolerance() const = 0;

  /// Throws PreconditionError when `a` is not in the carrier.
  virtual void validate(Degree a) const = 0;
  virtual bool is_finite() const = 0;
  /// All carrier elements in index order; empty for the [0,1] lattices.
  virtual std::vector<Degree> elements() const = 0;

  virtual std::string format(Degree a) const = 0;
  /// Parses a rank literal (`0` and `1` always denote bottom and top);
  /// throws PreconditionError when not in the carrier.
  virtual Degree parse(std::string_view text) const = 0;

  bool is_bottom(Degree a) const { return a == bottom(); }
  /// Kernel test used by Delta: scores within tolerance of 1 count as 1.
  bool is_top(Degree a) const { return equal(a, top()); }

  Degree inf(std::span<const Degree> degrees) const;
  Degree sup(std::span<const Degree> degrees) const;
};

using ResiduatedLatticePtr = std::shared_ptr<const ResiduatedLattice>;

ResiduatedLatticePtr make_lattice(LatticeKind kind, const LatticeParams& params = {});

/// Parses `boolean`, `godel`, `lukasiewicz`, `goguen`, `chain:<n>[:godel]` or
/// `table:<path>`.
ResiduatedLatticePtr lattice_from_selection(std::string_view selection);

/// Parses the `table:` file format:
///
///     carrier 0 a b 1
///     leq 0 a
///     a b 0        # a (x) b = 0
///
/// Lines starting with `#` are ignored. Missing products are filled by
/// commutativity, products with the top element by the unit law and
/// products with the bottom element by bottom.
TableSpec parse_table_spec(std::string_view text);

/// Formats a real score with 9 significant digits, trailing zeros trimmed.
std::string format_real(double v);

}  // namespace gradix
