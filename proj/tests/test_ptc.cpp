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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gradix/error.hpp"
#include "gradix/harness.hpp"
#include "gradix/ptc.hpp"
#include "support.hpp"

using namespace gradix;
using test::score;
using test::table;

namespace {

const auto G = make_lattice(LatticeKind::goedel);
const TupleVar r{"r", Scheme{"A"}}, s{"s", Scheme{"B"}};

DatabaseInstance small() {
  DatabaseInstance db(G);
  db.add("D1", table(G, {"A", "B"}, {{{"a1", "b1"}, 0.9}, {{"a1", "b2"}, 0.4}, {{"a2", "b1"}, 0.2}}));
  db.add("D2", table(G, {"B"}, {{{"b1"}, 1.0}, {{"b2"}, 0.7}}));
  db.add("D3", table(G, {"A"}, {{{"a1"}, 1.0}, {{"a2"}, 0.5}}));
  return db;
}

PtcExpr division() {
  using namespace ptc;
  return otimes(atom(ra::rel("D3"), {r}), inf({s}, implies(atom(ra::rel("D2"), {s}), atom(ra::rel("D1"), {r, s}))));
}

}  // namespace

TEST_CASE("free variables and schemes") {
  auto f = division();
  REQUIRE(free_vars(f).size() == 1);
  CHECK(free_vars(f)[0] == r);
  CHECK(scheme_of(f) == Scheme{"A"});
  CHECK(scheme_of(std::vector<TupleVar>{r, s}) == Scheme{"A", "B"});
}

TEST_CASE("well-formedness") {
  const Catalog cat = catalog_of(small());
  CHECK_NOTHROW(check_ptc(division(), cat));
  CHECK_THROWS_AS(check_ptc(ptc::atom(ra::rel("D1"), {r}), cat), SchemeError);
  const TupleVar r2{"r", Scheme{"B"}};
  CHECK_THROWS_AS(check_ptc(ptc::otimes(ptc::atom(ra::rel("D3"), {r}), ptc::atom(ra::rel("D2"), {r2})), cat), SchemeError);
  const TupleVar t{"t", Scheme{"A"}};
  CHECK_THROWS_AS(check_ptc(ptc::atom(ra::rel("D1"), {r, t}), cat), SchemeError);
}

TEST_CASE("evaluation by enumeration") {
  auto db = small();
  auto q = eval_ptc(division(), db);
  // a1: min(1 -> 0.9, 0.7 -> 0.4) = 0.4; a2: 0.5 (x) min(0.2, 0.7 -> 0) = 0
  CHECK(score(q, {"a1"}) == 0.4);
  CHECK(score(q, {"a2"}) == 0);
  auto any = eval_ptc(ptc::sup({s}, ptc::atom(ra::rel("D1"), {r, s})), db);
  CHECK(score(any, {"a1"}) == 0.9);
  CHECK(score(any, {"a2"}) == 0.2);
  auto n = eval_ptc(ptc::nabla(ptc::atom(ra::rel("D3"), {r})), db);
  CHECK(score(n, {"a2"}) == 1);
  auto d = eval_ptc(ptc::delta(ptc::atom(ra::rel("D3"), {r})), db);
  CHECK(d.size() == 1);
  auto closed = eval_ptc(ptc::inf({r}, ptc::atom(ra::rel("D3"), {r})), db);
  CHECK(closed.scheme().empty());
  CHECK(closed.score(Tuple{}).value == 0.5);
}

TEST_CASE("empty quantifier domains") {
  auto db = small();
  const TupleVar z{"z", Scheme{"Z"}};
  db.add("E", empty_table(G, Scheme{"Z"}));
  auto all = ptc::inf({z}, ptc::atom(ra::rel("E"), {z}));
  auto some = ptc::sup({z}, ptc::atom(ra::rel("E"), {z}));
  CHECK(empty_quantifier_domains(all, db) == 1);
  CHECK(empty_quantifier_domains(division(), db) == 0);
  CHECK(eval_ptc(all, db).score(Tuple{}).value == 1);
  CHECK(eval_ptc(some, db).empty());
}

TEST_CASE("embedding an algebra expression") {
  auto db = small();
  const Catalog cat = catalog_of(db);
  auto e = ra::project(Scheme{"A"}, ra::rel("D1"));
  auto f = embed_ra(e, cat);
  CHECK(scheme_of(f) == Scheme{"A"});
  CHECK(tables_equal(eval_ptc(f, db), eval_ra(e, db)));
}

TEST_CASE("splitting a variable") {
  auto db = small();
  const TupleVar w{"w", Scheme{"A", "B"}};
  auto f = ptc::sup({w}, ptc::atom(ra::rel("D1"), {w}));
  const TupleVar wa{"wa", Scheme{"A"}}, wb{"wb", Scheme{"B"}};
  auto g = split_variable(f, w, {wa, wb});
  CHECK(tables_equal(eval_ptc(f, db), eval_ptc(g, db)));
  CHECK_THROWS_AS(split_variable(f, w, {wa}), SchemeError);
}

TEST_CASE("compiled algebra agrees with enumeration") {
  auto db = small();
  for (auto form : {InfForm::ranged_division, InfForm::small_divide}) {
    auto e = compile_ptc_to_ra(division(), catalog_of(db), form);
    CHECK(tables_equal(eval_ra(e, db, constants_of(division())), eval_ptc(division(), db)));
  }
  for (const char* sel : {"godel", "lukasiewicz", "chain:4"}) {
    GenConfig cfg;
    cfg.lattice = lattice_from_selection(sel);
    for (std::uint64_t i = 0; i < 40; ++i) {
      cfg.seed = instance_seed(23, i);
      auto c = gen_ptc_case(cfg);
      const auto want = eval_ptc(c.expr, c.instance);
      for (auto form : {InfForm::ranged_division, InfForm::small_divide}) {
        INFO(print_ptc(c.expr));
        auto got = eval_ra(compile_ptc_to_ra(c.expr, catalog_of(c.instance), form), c.instance, constants_of(c.expr));
        CHECK(got.scheme() == want.scheme());
        double worst = 0;
        for (const auto& [t, d] : got.rows()) worst = std::max(worst, cfg.lattice->deviation(d, want.score(t)));
        for (const auto& [t, d] : want.rows()) worst = std::max(worst, cfg.lattice->deviation(d, got.score(t)));
        CHECK(worst <= 1e-9);
      }
    }
  }
}
