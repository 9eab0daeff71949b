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
 * Batch execution of query scripts.
 *
 * `LET` defines a view: later references are replaced by the defining
 * expression. `EVAL` and `EVALPTC` results are written as CSV to the output
 * stream, each followed by an empty line, or to `<out_dir>/result_<k>.csv`
 * when an output directory is set. `COMPILE` prints the translated algebra
 * expression. Relative paths are resolved against the base directory.
 */
#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "gradix/syntax.hpp"

namespace gradix {

enum ExitCode : int { exit_ok = 0, exit_query_error = 1, exit_io_error = 2, exit_unknown_suite = 3 };

class Session {
 public:
  explicit Session(ResiduatedLatticePtr lattice);

  AttributeRegistry& registry() { return registry_; }
  const DatabaseInstance& instance() const { return instance_; }
  void declare(const std::vector<std::pair<Attribute, ValueType>>& types);

  std::string base_dir;
  std::string out_dir;

  /// Executes the statements in order; throws on the first failure.
  void run(const Script& script, std::ostream& out, std::ostream& err);

 private:
  RaExpr resolve(const RaExpr& e);
  PtcExpr resolve(const PtcExpr& e);
  Catalog catalog() const;
  std::string path_of(const std::string& p) const;
  void emit(const RankedDataTable& t, std::ostream& out);

  ResiduatedLatticePtr lattice_;
  AttributeRegistry registry_;
  DatabaseInstance instance_;
  std::map<std::string, RaExpr> views_;
  int emitted_ = 0;
};

/// Runs the script and maps failures to exit codes; the message goes to
/// `err`.
int run_script(const Script& script, Session& session, std::ostream& out, std::ostream& err);

/// Parses then runs; parse errors are query errors.
int run_script_text(const std::string& text, Session& session, std::ostream& out, std::ostream& err);

}  // namespace gradix
