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

// Acceptance checks. Prints one line per criterion and exits nonzero when any
// of them fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "gradix/division.hpp"
#include "gradix/harness.hpp"
#include "gradix/session.hpp"

using namespace gradix;

namespace {

constexpr double kRealTol = 1e-9;
constexpr double kExact = 0.0;
constexpr double kAdjointLimitS = 10.0;
constexpr double kCollapseLimitS = 60.0;
constexpr double kCompilerLimitS = 300.0;
constexpr std::size_t kRandomTriples = 10000;
constexpr int kMaxCarrier = 6;
constexpr std::uint64_t kSeed = 20260;

const std::vector<std::string> kStandard = {"godel", "lukasiewicz", "goguen", "chain:3", "chain:5", "chain:5:godel"};

double tol_for(const ResiduatedLattice& l) { return l.is_finite() ? kExact : kRealTol; }

/// a <= b, up to the real tolerance on [0,1].
bool within(const ResiduatedLattice& l, Degree a, Degree b) {
  return l.is_finite() ? l.leq(a, b) : a.value <= b.value + kRealTol;
}

struct Outcome {
  bool ok = true;
  std::size_t checks = 0;
  double max_dev = 0.0;
  std::string note;

  void fail(const std::string& what) {
    if (ok) std::cerr << "  first failure: " << what << "\n";
    ok = false;
  }
  void report(const EquivalenceReport& rep, double tol) {
    ++checks;
    max_dev = std::max(max_dev, rep.max_dev);
    if (!rep.passed || rep.max_dev > tol) fail(rep.text() + "\n" + rep.counterexample);
  }
};

int failures = 0;

void criterion(int n, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o = body();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && secs >= limit_s) o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(limit_s));
  std::ostringstream line;
  line << "CRITERION " << n << " " << (o.ok ? "PASS" : "FAIL") << " " << title << " checks=" << o.checks
       << " max_dev=" << o.max_dev << " time=" << std::fixed;
  line.precision(2);
  line << secs << "s";
  if (limit_s > 0) line << " limit=" << limit_s << "s";
  if (!o.note.empty()) line << " " << o.note;
  std::cout << line.str() << std::endl;
  if (!o.ok) ++failures;
}

EquivalenceReport suite(const std::string& id, const std::string& lattice, std::size_t n, bool nonranked = false) {
  GenConfig cfg;
  cfg.seed = kSeed;
  cfg.instances = n;
  cfg.lattice = lattice_from_selection(lattice);
  cfg.nonranked_range = nonranked;
  return run_theorem_suite(id, cfg);
}

Outcome suites(const std::vector<std::string>& ids, std::size_t n) {
  Outcome o;
  for (const auto& id : ids)
    for (const auto& l : kStandard) o.report(suite(id, l, n), tol_for(*lattice_from_selection(l)));
  return o;
}

Outcome adjointness() {
  Outcome o;
  auto exhaustive = [&](const ResiduatedLattice& l, const std::string& name) {
    for (Degree a : l.elements())
      for (Degree b : l.elements())
        for (Degree c : l.elements()) {
          ++o.checks;
          if (l.leq(l.otimes(a, b), c) != l.leq(a, l.residuum(b, c))) o.fail(name + ": adjointness");
        }
  };
  for (const auto& f : enumerate_residuated_lattices(kMaxCarrier)) exhaustive(*f.lattice, "enumerated lattice");
  for (int n = 2; n <= kMaxCarrier; ++n)
    for (const char* norm : {"", ":godel"}) {
      const std::string name = "chain:" + std::to_string(n) + norm;
      exhaustive(*lattice_from_selection(name), name);
    }
  exhaustive(*lattice_from_selection("boolean"), "boolean");

  std::mt19937_64 rng(kSeed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (const char* name : {"godel", "lukasiewicz", "goguen"}) {
    auto l = lattice_from_selection(name);
    for (std::size_t k = 0; k < kRandomTriples; ++k) {
      const Degree a{unit(rng)}, b{unit(rng)}, c{unit(rng)};
      ++o.checks;
      const double prod = l->otimes(a, b).value, res = l->residuum(b, c).value;
      const bool lhs = prod <= c.value + kRealTol;
      const bool rhs = a.value <= res + kRealTol;
      // outside the tolerance band both sides must agree
      if (lhs != rhs && std::abs(prod - c.value) > kRealTol && std::abs(a.value - res) > kRealTol)
        o.fail(std::string(name) + ": adjointness on random triple");
    }
  }
  return o;
}

Outcome ranged_equals_small() {
  Outcome o;
  for (const char* l : {"godel", "lukasiewicz", "goguen", "chain:3", "chain:5"})
    o.report(suite("T1", l, 500), tol_for(*lattice_from_selection(l)));
  for (const char* l : {"godel", "lukasiewicz", "goguen", "chain:3", "chain:5", "chain:5:godel", "boolean"})
    o.report(suite("T1", l, 500, true), tol_for(*lattice_from_selection(l)));
  std::size_t finite = 0;
  for (const auto& f : enumerate_residuated_lattices(kMaxCarrier)) {
    GenConfig cfg;
    cfg.seed = kSeed;
    cfg.instances = 50;
    cfg.lattice = f.lattice;
    cfg.nonranked_range = true;
    o.report(run_theorem_suite("T1", cfg), kExact);
    ++finite;
  }
  o.note = "nonranked_on_enumerated=" + std::to_string(finite);
  return o;
}

Outcome greatest_solution() {
  Outcome o;
  std::vector<ResiduatedLatticePtr> ls;
  for (const auto& l : kStandard) ls.push_back(lattice_from_selection(l));
  ls.push_back(lattice_from_selection("boolean"));
  if (auto w = search_distributivity_counterexample(kMaxCarrier)) ls.push_back(w->lattice.lattice);
  for (const auto& l : ls) {
    GenConfig cfg;
    cfg.lattice = l;
    for (std::uint64_t i = 0; i < 200; ++i) {
      Generator g(cfg, instance_seed(kSeed, i));
      const auto d1 = g.table(Scheme{"A", "B", "C"});
      const auto d2 = g.table(Scheme{"B", "C"});
      const auto d3 = g.table_nonranked(Scheme{"A"});
      const auto q = div_ranged(d1, d2, d3);
      for (const auto& [r, qr] : q.rows())
        if (!d3.rows().count(r)) o.fail(l->name() + ": answer outside the range");
      for (const auto& [r, one] : d3.rows()) {
        const Degree qr = q.score(r);
        auto fits = [&](Degree c) {
          for (const auto& [s, b] : d2.rows())
            if (!within(*l, l->otimes(c, b), d1.score(r.join(s)))) return false;
          return true;
        };
        ++o.checks;
        if (!fits(qr)) o.fail(l->name() + ": answer joined with the divisor leaves the dividend");
        if (l->is_finite()) {
          for (Degree c : l->elements())
            if (!l->leq(c, qr) && fits(c)) o.fail(l->name() + ": larger solution exists");
        } else if (qr.value + 1e-6 <= 1.0 && fits(Degree{qr.value + 1e-6})) {
          o.fail(l->name() + ": larger solution exists");
        }
      }
      // empty quotient scheme: subsethood degree
      const auto e1 = g.table(Scheme{"B", "C"});
      Degree want = l->top();
      for (const auto& [s, b] : d2.rows()) want = l->meet(want, l->residuum(b, e1.score(s)));
      const auto sub = div_ranged(e1, d2, dee(l, l->top()));
      ++o.checks;
      const double dev = l->deviation(sub.score(Tuple{}), want);
      o.max_dev = std::max(o.max_dev, dev);
      if (!sub.scheme().empty() || dev > tol_for(*l)) o.fail(l->name() + ": subsethood degree");
    }
  }
  return o;
}

std::string run_cli(const std::string& args) {
  FILE* p = ::popen(("\"" GRADIX_CLI "\" " + args + " 2>&1").c_str(), "r");
  if (!p) return "<popen failed>";
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  const int status = ::pclose(p);
  return out + "\nexit=" + std::to_string(WIFEXITED(status) ? WEXITSTATUS(status) : -1);
}

Outcome determinism() {
  Outcome o;
  for (const auto& id : suite_ids()) {
    ++o.checks;
    if (suite(id, "lukasiewicz", 50).text() != suite(id, "lukasiewicz", 50).text()) o.fail(id + ": suite output differs");
  }
  const auto dir = std::filesystem::temp_directory_path() / ("gradix_accept_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "d1.csv") << "A,B,rank\na1,b1,0.75\na1,b2,0.25\na2,b1,0.5\na2,b2,1\n";
  std::ofstream(dir / "d2.csv") << "B,rank\nb1,1\nb2,0.75\n";
  std::ofstream(dir / "q.gx") << "LOAD D1 FROM \"d1.csv\"\nLOAD D2 FROM \"d2.csv\"\nVAR r : {A}\nVAR s : {B}\n"
                                  "EVAL DIV(D1 BY D2 OVER EADOM[A])\n"
                                  "EVALPTC ANY s . D1(r, s) * D2(s)\n"
                                  "COMPILE ALL s . D2(s) => D1(r, s)\n"
                                  "EVAL GDDO(PROJECT[A](D1), D2; MED D1, D2)\n";
  for (const char* l : {"godel", "lukasiewicz", "goguen", "chain:5"}) {
    const std::string args = std::string("eval --lattice ") + l + " --script " + (dir / "q.gx").string();
    ++o.checks;
    const auto first = run_cli(args);
    if (first.find("exit=0") == std::string::npos || first != run_cli(args)) o.fail(std::string(l) + ": script output");
  }
  for (const auto& id : {std::string("T1"), std::string("ptc-compiler")}) {
    const std::string args = "check --suite " + id + " --lattice goguen --seed 9 --n 40";
    ++o.checks;
    if (run_cli(args) != run_cli(args)) o.fail(id + ": CLI output differs");
  }
  std::filesystem::remove_all(dir);
  return o;
}

}  // namespace

int main() {
  std::cout << "tolerance real=" << kRealTol << " finite=exact seed=" << kSeed << std::endl;
  criterion(1, "adjointness on finite lattices up to 6 elements and random real triples", kAdjointLimitS, adjointness);
  criterion(2, "Boolean collapse against the classic set oracle", kCollapseLimitS, [] {
    Outcome o;
    o.report(suite("boolean-collapse", "boolean", 200), kExact);
    return o;
  });
  criterion(3, "ranged division equals the original Small Divide", 0, ranged_equals_small);
  criterion(4, "Small Divide through Great and Darwen divides with dee(1)", 0,
            [] { return suites({"C-gsdo-ggdo", "C-gsdo-gddo"}, 200); });
  criterion(5, "Great equals Darwen divide and Darwen variants agree", 0,
            [] { return suites({"T-ggdo-gddo", "T-gddo-variants"}, 200); });
  criterion(6, "classic Darwen set form and semidifference", 0, [] {
    Outcome o;
    o.report(suite("T-darwen-set", "boolean", 200), kExact);
    o.report(suite("L-semidiff", "boolean", 200), kExact);
    return o;
  });
  criterion(7, "divisions expressed through each other, stable under widening", 0,
            [] { return suites({"T-rdiv-via-gsdo", "T-gsdo-via-rdiv", "T-gddo-via-rdiv"}, 200); });
  criterion(8, "calculus compiler soundness", kCompilerLimitS, [] {
    Outcome o;
    for (const auto& l : kStandard) o.report(suite("ptc-compiler", l, 300), tol_for(*lattice_from_selection(l)));
    return o;
  });
  criterion(9, "greatest solution with non-ranked range and subsethood degree", 0, greatest_solution);
  criterion(10, "determinism of suites and scripts", 0, determinism);
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
