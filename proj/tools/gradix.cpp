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

// gradix eval  --lattice <kind> --script <path> [--out <dir>] [--scheme A:int,...]
// gradix check --suite <id> [--lattice <kind>] [--seed <n>] [--n <count>]
// gradix search [--max-size <n>]

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gradix/harness.hpp"
#include "gradix/session.hpp"

using namespace gradix;

namespace {

int cmd_eval(const std::string& lattice, const std::string& script_path, const std::string& out_dir,
             const std::string& scheme) {
  ResiduatedLatticePtr l;
  try {
    l = lattice_from_selection(lattice);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_io_error;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_query_error;
  }
  std::ifstream in(script_path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << script_path << "\n";
    return exit_io_error;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  Session session(l);
  session.base_dir = std::filesystem::path(script_path).parent_path().string();
  session.out_dir = out_dir;
  if (!scheme.empty()) {
    try {
      session.declare(parse_scheme_spec(scheme));
    } catch (const Error& e) {
      std::cerr << "error: --scheme: " << e.what() << "\n";
      return exit_query_error;
    }
  }
  return run_script_text(buf.str(), session, std::cout, std::cerr);
}

int cmd_check(const std::string& suite, const std::string& lattice, std::uint64_t seed, std::size_t n) {
  GenConfig config;
  config.seed = seed;
  config.instances = n;
  try {
    config.lattice = lattice_from_selection(lattice);
    const EquivalenceReport rep = run_theorem_suite(suite, config);
    std::cout << rep.text();
    return rep.passed ? exit_ok : exit_query_error;
  } catch (const UnknownSuite& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_unknown_suite;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_io_error;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_query_error;
  }
}

int cmd_search(int max_size) {
  if (max_size > 6) {
    std::cerr << "error: --max-size is limited to 6\n";
    return exit_query_error;
  }
  const auto all = enumerate_residuated_lattices(max_size);
  std::cout << all.size() << " residuated lattices with at most " << max_size << " elements\n";
  const auto w = search_distributivity_counterexample(max_size);
  if (!w) {
    std::cout << "no distributivity counterexample up to size " << max_size << "\n";
    return exit_ok;
  }
  const ResiduatedLattice& l = *w->lattice.lattice;
  std::cout << "counterexample on " << l.elements().size() << " elements: a=" << l.format(w->a)
            << " b=" << l.format(w->b) << " c=" << l.format(w->c) << "\n";
  std::cout << "a (x) (b ^ c) = " << l.format(l.otimes(w->a, l.meet(w->b, w->c)))
            << ", (a (x) b) ^ (a (x) c) = " << l.format(l.meet(l.otimes(w->a, w->b), l.otimes(w->a, w->c)))
            << "\n";
  const auto& spec = w->lattice.spec;
  std::cout << "carrier";
  for (const auto& c : spec.carrier) std::cout << " " << c;
  std::cout << "\n";
  for (const auto& [a, b] : spec.order) std::cout << "leq " << a << " " << b << "\n";
  for (const auto& [a, b, c] : spec.products) {
    if (a <= b) std::cout << a << " " << b << " " << c << "\n";
  }
  std::cout << t1_witness_report(*w).text();
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank-aware relational algebra over residuated lattices"};
  app.require_subcommand(1);

  std::string lattice = "godel";
  std::string script, out_dir, scheme;
  auto* eval = app.add_subcommand("eval", "Run a query script");
  eval->add_option("--lattice", lattice, "boolean, godel, lukasiewicz, goguen, chain:<n>[:godel] or table:<path>");
  eval->add_option("--script", script, "Script file")->required();
  eval->add_option("--out", out_dir, "Write results to <dir>/result_<k>.csv");
  eval->add_option("--scheme", scheme, "Attribute types, e.g. A:int,B:text");

  std::string suite;
  std::uint64_t seed = 1;
  std::size_t n = 200;
  auto* check = app.add_subcommand("check", "Run an equivalence suite");
  check->add_option("--suite", suite, "Suite id")->required();
  check->add_option("--lattice", lattice, "Lattice selection");
  auto* seed_opt = check->add_option("--seed", seed, "Seed, falls back to GRADIX_SEED");
  check->add_option("--n", n, "Instances")->check(CLI::PositiveNumber);

  int max_size = 6;
  auto* search = app.add_subcommand("search", "Search finite lattices for a distributivity counterexample");
  search->add_option("--max-size", max_size, "Largest carrier")->check(CLI::Range(2, 6));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : exit_query_error;
  }

  if (*eval) return cmd_eval(lattice, script, out_dir, scheme);
  if (*check) {
    if (seed_opt->count() == 0) {
      if (const char* env = std::getenv("GRADIX_SEED")) {
        try {
          seed = std::stoull(env);
        } catch (const std::exception&) {
          std::cerr << "error: GRADIX_SEED is not a number\n";
          return exit_query_error;
        }
      }
    }
    return cmd_check(suite, lattice, seed, n);
  }
  return cmd_search(max_size);
}
