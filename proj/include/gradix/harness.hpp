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
 * Random instances, equivalence suites and the search for finite residuated
 * lattices.
 *
 * Every suite builds both sides of an identity on `instances` seeded random
 * databases and compares them pointwise. Instance `i` of a run is generated
 * from a seed derived from `(seed, i)` only, so a run is reproducible from the
 * suite id and the seed.
 */
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gradix/error.hpp"
#include "gradix/ptc.hpp"

namespace gradix {

struct GenConfig {
  std::uint64_t seed = 1;
  /// Defaults to the Goedel lattice.
  ResiduatedLatticePtr lattice;
  /// Attributes per scheme.
  int max_attrs = 3;
  /// Values per attribute.
  int max_values = 4;
  /// Rows per table, at least one row is always generated.
  int max_rows = 8;
  /// Real scores are multiples of 1/grid.
  int grid = 20;
  std::size_t instances = 200;
  /// T1 only: replace the range table by its support.
  bool nonranked_range = false;
};

/// Throws PreconditionError on non-positive bounds.
void validate(const GenConfig& config);

/// Seeded source of sizes, values and scores.
class Generator {
 public:
  Generator(const GenConfig& config, std::uint64_t seed);

  std::size_t below(std::size_t n);
  bool coin(int percent);
  /// Nonzero score on the configured grid or carrier.
  Degree score();
  /// `a1`..`aN` for attribute `A`.
  Value value(const Attribute& a);
  RankedDataTable table(const Scheme& s);
  /// Same table with every score set to the top element.
  RankedDataTable table_nonranked(const Scheme& s);

  const GenConfig& config() const { return config_; }
  const ResiduatedLatticePtr& lattice() const { return lattice_; }

 private:
  GenConfig config_;
  ResiduatedLatticePtr lattice_;
  std::mt19937_64 rng_;
};

/// Seed of instance `index` in a run seeded with `seed`.
std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index);

RankedDataTable gen_rdt(const GenConfig& config, const Scheme& scheme);
DatabaseInstance gen_instance(const GenConfig& config, const std::map<std::string, Scheme>& symbols);

/// Tables as `# name` headed CSV blocks, loadable one block at a time.
std::string dump_instance(const DatabaseInstance& instance);

struct EquivalenceReport {
  std::string theorem;
  std::string lattice;
  std::size_t instances = 0;
  double max_dev = 0.0;
  double tolerance = 0.0;
  bool passed = true;
  /// Instance, tuple and both scores of the first failing instance.
  std::string counterexample;

  /// `THEOREM <id> instances=<n> max_dev=<d> status=PASS|FAIL`
  std::string line() const;
  /// Human summary followed by line().
  std::string text() const;
};

class UnknownSuite : public Error {
 public:
  using Error::Error;
};

const std::vector<std::string>& suite_ids();

/// Throws UnknownSuite.
EquivalenceReport run_theorem_suite(const std::string& id, const GenConfig& config);

/// Random PTC expression over tuple variables named after disjoint attribute
/// blocks, together with a matching instance.
struct PtcCase {
  DatabaseInstance instance;
  PtcExpr expr;
};
PtcCase gen_ptc_case(const GenConfig& config, int max_depth = 4);

/// Finite residuated lattice found by enumeration.
struct FiniteLattice {
  TableSpec spec;
  ResiduatedLatticePtr lattice;
};

/// Every residuated lattice with 2..max_size elements: all bounded lattice
/// orders up to isomorphism, each with every admissible multiplication.
std::vector<FiniteLattice> enumerate_residuated_lattices(int max_size);

struct DistributivityCounterexample {
  FiniteLattice lattice;
  /// a (x) (b ^ c) != (a (x) b) ^ (a (x) c)
  Degree a, b, c;
};

/// Smallest lattice (in enumeration order) where (x) fails to distribute
/// over binary meets.
std::optional<DistributivityCounterexample> search_distributivity_counterexample(int max_size);

/// The T1 suite check on the two row instance built from the triple: range {r: a},
/// divisor {s1: 1, s2: 1}, dividend {r s1: b, r s2: c}.
EquivalenceReport t1_witness_report(const DistributivityCounterexample& w);

}  // namespace gradix
