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
#include "gradix/table.hpp"
#include "support.hpp"

using namespace gradix;
using test::score;
using test::table;

namespace {
const auto G = make_lattice(LatticeKind::goedel);
const auto L = make_lattice(LatticeKind::lukasiewicz);
const auto P = make_lattice(LatticeKind::goguen);
const auto B = make_lattice(LatticeKind::boolean);
}  // namespace

TEST_CASE("schemes") {
  Scheme s{"B", "A", "B"};
  CHECK(s.size() == 2);
  CHECK(s.to_string() == "{A,B}");
  CHECK(s.unite(Scheme{"C"}) == Scheme{"A", "B", "C"});
  CHECK(s.minus(Scheme{"A"}) == Scheme{"B"});
  CHECK(s.intersect(Scheme{"B", "C"}) == Scheme{"B"});
  CHECK(Scheme{}.is_subset_of(s));
}

TEST_CASE("tuple projection and join") {
  Tuple r{{"A", Value(std::int64_t{1})}, {"B", Value(std::int64_t{2})}};
  CHECK(r.project(Scheme{"A"}) == Tuple{{"A", Value(std::int64_t{1})}});
  CHECK(r.project(Scheme{}) == Tuple{});
  CHECK_THROWS_AS(Tuple({{"A", Value(std::int64_t{1})}}).project(Scheme{"B"}), SchemeError);

  Tuple s{{"B", Value(std::int64_t{2})}, {"C", Value(std::int64_t{3})}};
  CHECK(r.joinable(s));
  CHECK(r.join(s) == Tuple{{"A", Value(std::int64_t{1})}, {"B", Value(std::int64_t{2})}, {"C", Value(std::int64_t{3})}});
  Tuple bad{{"B", Value(std::int64_t{9})}};
  CHECK_FALSE(r.joinable(bad));
  CHECK_THROWS_AS(r.join(bad), NotJoinable);
  CHECK(r.joinable(Tuple{}));
  CHECK(r.join(Tuple{}) == r);
}

TEST_CASE("attribute registry") {
  AttributeRegistry reg;
  reg.declare("N", ValueType::integer);
  CHECK(reg.parse("N", "42") == Value(std::int64_t{42}));
  CHECK_THROWS_AS(reg.parse("N", "x"), Error);
  CHECK_THROWS_AS(reg.declare("N", ValueType::text), SchemeError);
  CHECK_THROWS_AS(reg.check("N", Value(std::string("x"))), SchemeError);
}

TEST_CASE("dee tables") {
  CHECK(dee(G, Degree{1}).size() == 1);
  CHECK(dee(G, Degree{0}).empty());
  CHECK(dee(G, Degree{0.5}).score(Tuple{}).value == 0.5);
}

TEST_CASE("construction validates degrees and schemes") {
  RankedDataTable t(Scheme{"A"}, G);
  CHECK_THROWS_AS(t.set(Tuple{{"B", Value(std::string("x"))}}, Degree{0.5}), SchemeError);
  CHECK_THROWS_AS(t.set(Tuple{{"A", Value(std::string("x"))}}, Degree{1.5}), PreconditionError);
  t.set(Tuple{{"A", Value(std::string("x"))}}, Degree{0.5});
  t.set(Tuple{{"A", Value(std::string("x"))}}, Degree{0});
  CHECK(t.empty());
}

TEST_CASE("union and intersection") {
  auto d1 = table(G, {"A"}, {{{"r"}, 0.3}, {{"s"}, 0.6}});
  auto d2 = table(G, {"A"}, {{{"r"}, 0.8}});
  auto u = unite(d1, d2);
  auto i = intersect(d1, d2);
  CHECK(score(u, {"r"}) == 0.8);
  CHECK(score(u, {"s"}) == 0.6);
  CHECK(score(i, {"r"}) == 0.3);
  CHECK(i.size() == 1);
  CHECK(tables_equal(unite(d1, empty_table(G, Scheme{"A"})), d1));
  CHECK(tables_equal(intersect(d1, d1), d1));
  CHECK_THROWS_AS(unite(d1, table(G, {"B"}, {})), SchemeError);
  CHECK_THROWS_AS(unite(d1, table(L, {"A"}, {})), LatticeMismatch);
}

TEST_CASE("natural join") {
  auto d1 = table(P, {"A", "B"}, {{{"a1", "b1"}, 0.8}});
  auto d2 = table(P, {"B", "C"}, {{{"b1", "c1"}, 0.5}});
  auto j = natural_join(d1, d2);
  CHECK(j.scheme() == Scheme{"A", "B", "C"});
  CHECK(score(j, {"a1", "b1", "c1"}) == doctest::Approx(0.4));
  CHECK(tables_equal(natural_join(d1, dee(P, P->top())), d1));
  CHECK(natural_join(d1, table(P, {"B", "C"}, {{{"b2", "c1"}, 0.5}})).empty());
}

TEST_CASE("projection") {
  auto d = table(G, {"A", "B"}, {{{"a1", "b1"}, 0.6}, {{"a1", "b2"}, 0.9}});
  auto p = project(d, Scheme{"A"});
  CHECK(p.size() == 1);
  CHECK(score(p, {"a1"}) == 0.9);
  CHECK(tables_equal(project(d, d.scheme()), d));
  CHECK(project(d, Scheme{}).score(Tuple{}).value == 0.9);
  CHECK_THROWS_AS(project(d, Scheme{"C"}), SchemeError);
}

TEST_CASE("semijoin") {
  auto d1 = table(G, {"A", "B"}, {{{"a1", "b1"}, 0.7}});
  CHECK(tables_equal(semijoin(d1, dee(G, G->top())), d1));
  CHECK(semijoin(d1, empty_table(G, Scheme{"B"})).empty());
  auto d2 = table(G, {"B"}, {{{"b1"}, 0.4}});
  CHECK(score(semijoin(d1, d2), {"a1", "b1"}) == 0.4);
}

TEST_CASE("graded difference") {
  auto b1 = table(B, {"A"}, {{{"r"}, 1}});
  CHECK(difference_graded(b1, b1).empty());
  auto g1 = table(G, {"A"}, {{{"r"}, 0.6}});
  auto g2 = table(G, {"A"}, {{{"r"}, 0.3}});
  CHECK(difference_graded(g1, g2).empty());
  auto l1 = table(L, {"A"}, {{{"r"}, 0.9}});
  auto l2 = table(L, {"A"}, {{{"r"}, 0.3}});
  CHECK(score(difference_graded(l1, l2), {"r"}) == doctest::Approx(0.6).epsilon(1e-12));
}

TEST_CASE("nabla and delta") {
  auto d = table(G, {"A"}, {{{"r"}, 0.3}, {{"s"}, 1.0}});
  auto n = nabla(d);
  CHECK(score(n, {"r"}) == 1);
  CHECK(score(n, {"s"}) == 1);
  auto dl = delta(d);
  CHECK(dl.size() == 1);
  CHECK(score(dl, {"s"}) == 1);
  CHECK(nabla(empty_table(G, Scheme{"A"})).empty());
}

TEST_CASE("residuum with range") {
  auto one = table(G, {"A"}, {{{"r"}, 1.0}});
  auto d1 = table(G, {"A"}, {{{"r"}, 0.8}});
  auto d2 = table(G, {"A"}, {{{"r"}, 0.5}});
  CHECK(score(residuum_with_range(d1, d2, one), {"r"}) == 0.5);
  CHECK(residuum_with_range(d1, d2, empty_table(G, Scheme{"A"})).empty());
  // tuples outside the first table score the range degree
  auto range = table(G, {"A"}, {{{"r"}, 0.7}, {{"t"}, 0.4}});
  CHECK(score(residuum_with_range(d1, d2, range), {"t"}) == 0.4);
}

TEST_CASE("output order") {
  auto d = table(G, {"A"}, {{{"b"}, 0.5}, {{"a"}, 0.5}, {{"c"}, 0.9}});
  auto rows = sorted_rows(d);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].first == test::tup(Scheme{"A"}, {"c"}));
  CHECK(rows[1].first == test::tup(Scheme{"A"}, {"a"}));
  CHECK(rows[2].first == test::tup(Scheme{"A"}, {"b"}));
}

TEST_CASE("database instance") {
  DatabaseInstance db(G);
  db.add("D", table(G, {"A"}, {}));
  CHECK_THROWS_AS(db.add("D", table(G, {"A"}, {})), PreconditionError);
  CHECK_THROWS_AS(db.add("E", table(L, {"A"}, {})), LatticeMismatch);
  CHECK_THROWS_AS(db.get("X"), UnboundSymbol);
}
