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
#include "gradix/lattice.hpp"
#include "gradix/oracle.hpp"

using namespace gradix;

namespace {

Degree d(double v) { return Degree{v}; }

ResiduatedLatticePtr godel() { return make_lattice(LatticeKind::goedel); }
ResiduatedLatticePtr luk() { return make_lattice(LatticeKind::lukasiewicz); }
ResiduatedLatticePtr goguen() { return make_lattice(LatticeKind::goguen); }

ResiduatedLatticePtr chain(int n, ChainNorm norm = ChainNorm::lukasiewicz) {
  LatticeParams p;
  p.levels = n;
  p.chain_norm = norm;
  return make_lattice(LatticeKind::finite_chain, p);
}

}  // namespace

TEST_CASE("multiplication on the unit interval") {
  CHECK(luk()->otimes(d(0.7), d(0.6)).value == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(goguen()->otimes(d(0.8), d(0.5)).value == doctest::Approx(0.4));
  CHECK(godel()->otimes(d(0.8), d(0.5)).value == 0.5);
  for (const auto& l : {godel(), luk(), goguen(), chain(4), make_lattice(LatticeKind::boolean)}) {
    CHECK(l->otimes(l->top(), l->top()) == l->top());
    CHECK(l->otimes(l->bottom(), l->top()) == l->bottom());
  }
  CHECK(luk()->otimes(d(0.35), d(1.0)).value == 0.35);
}

TEST_CASE("residuum boundaries and closed forms") {
  for (const auto& l : {godel(), luk(), goguen()}) {
    CHECK(l->residuum(d(0), d(0.3)) == l->top());
    CHECK(l->residuum(d(0.4), d(1)) == l->top());
  }
  CHECK(godel()->residuum(d(0.7), d(0.4)).value == 0.4);
  CHECK(luk()->residuum(d(0.7), d(0.4)).value == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(goguen()->residuum(d(0.8), d(0.4)).value == doctest::Approx(0.5));
}

TEST_CASE("closed-form residua agree with the search oracle on a 1001 point grid") {
  for (const auto& l : {godel(), luk(), goguen()}) {
    double worst = 0.0;
    for (int i = 0; i <= 1000; i += 37) {
      for (int j = 0; j <= 1000; j += 41) {
        const Degree a{i / 1000.0}, b{j / 1000.0};
        worst = std::max(worst, std::abs(l->residuum(a, b).value - oracle::residuum_by_search(*l, a, b).value));
      }
    }
    INFO(l->name());
    CHECK(worst < 1e-6);
  }
}

TEST_CASE("finite residua agree with the search oracle") {
  for (const auto& l : {chain(3), chain(5), chain(5, ChainNorm::goedel), make_lattice(LatticeKind::boolean)}) {
    for (Degree a : l->elements())
      for (Degree b : l->elements()) CHECK(l->residuum(a, b) == oracle::residuum_by_search(*l, a, b));
  }
}

TEST_CASE("adjointness on random triples") {
  unsigned x = 12345;
  auto next = [&] {
    x = x * 1103515245u + 12345u;
    return (x >> 8) % 10001 / 10000.0;
  };
  for (const auto& l : {godel(), luk(), goguen()}) {
    int bad = 0;
    for (int k = 0; k < 2000; ++k) {
      const Degree a{next()}, b{next()}, c{next()};
      const bool lhs = l->otimes(a, b).value <= c.value + 1e-9;
      const bool rhs = a.value <= l->residuum(b, c).value + 1e-9;
      if (lhs != rhs) ++bad;
    }
    CHECK(bad == 0);
  }
}

TEST_CASE("infimum and supremum") {
  auto l = godel();
  CHECK(l->inf({}) == l->top());
  CHECK(l->sup({}) == l->bottom());
  std::vector<Degree> v{d(0.2), d(0.9), d(0.4)};
  CHECK(l->sup(v).value == 0.9);
  CHECK(l->inf(v).value == 0.2);
  auto c5 = chain(5);
  std::vector<Degree> w{d(2), d(3)};
  CHECK(c5->inf(w) == d(2));
}

TEST_CASE("Boolean lattice is classical") {
  auto b = make_lattice(LatticeKind::boolean);
  REQUIRE(b->elements().size() == 2);
  for (Degree x : b->elements())
    for (Degree y : b->elements()) {
      CHECK(b->otimes(x, y) == b->meet(x, y));
      const bool imp = !(x == b->top()) || y == b->top();
      CHECK((b->residuum(x, y) == b->top()) == imp);
    }
}

TEST_CASE("finite chains") {
  auto c3 = chain(3);
  CHECK(c3->otimes(d(1), d(1)) == d(0));
  CHECK(c3->format(d(1)) == "0.5");
  CHECK(c3->parse("0.5") == d(1));
  CHECK_THROWS_AS(c3->parse("0.3"), PreconditionError);
  auto g5 = chain(5, ChainNorm::goedel);
  CHECK(g5->otimes(d(2), d(3)) == d(2));
  CHECK(g5->residuum(d(3), d(2)) == d(2));
}

TEST_CASE("table lattice validation") {
  SUBCASE("diamond with meet as multiplication") {
    auto spec = parse_table_spec(
        "carrier 0 a b 1\n"
        "leq 0 a\nleq 0 b\nleq a 1\nleq b 1\n"
        "a a a\nb b b\na b 0\n");
    LatticeParams p;
    p.table = spec;
    auto l = make_lattice(LatticeKind::finite_table, p);
    CHECK(l->elements().size() == 4);
    CHECK(l->format(l->residuum(l->parse("a"), l->parse("b"))) == "b");
    CHECK(l->parse("0") == l->bottom());
    CHECK(l->parse("1") == l->top());
  }
  SUBCASE("non-associative multiplication is rejected") {
    auto spec = parse_table_spec(
        "carrier 0 a b 1\n"
        "leq 0 a\nleq 0 b\nleq a 1\nleq b 1\n"
        "a a b\nb b a\na b 0\n");
    LatticeParams p;
    p.table = spec;
    try {
      make_lattice(LatticeKind::finite_table, p);
      FAIL("accepted");
    } catch (const LatticeValidationError& e) {
      CHECK(e.axiom() == "associativity");
    }
  }
  SUBCASE("missing residual is rejected") {
    // 0 < a < b < 1 with a (x) b = b breaks a (x) b <= a
    auto spec = parse_table_spec(
        "carrier 0 a b 1\n"
        "leq 0 a\nleq a b\nleq b 1\n"
        "a a a\na b b\nb b b\n");
    LatticeParams p;
    p.table = spec;
    CHECK_THROWS_AS(make_lattice(LatticeKind::finite_table, p), LatticeValidationError);
  }
}

TEST_CASE("lattice selection strings") {
  CHECK(lattice_from_selection("boolean")->name() == "boolean");
  CHECK(lattice_from_selection("chain:5:godel")->name() == "chain:5:godel");
  CHECK(lattice_from_selection("lukasiewicz")->kind() == LatticeKind::lukasiewicz);
  CHECK_THROWS_AS(lattice_from_selection("nope"), Error);
  CHECK_THROWS_AS(lattice_from_selection("table:/nonexistent/file"), IoError);
}

TEST_CASE("real formatting") {
  CHECK(format_real(0.5) == "0.5");
  CHECK(format_real(1.0) == "1");
  CHECK(format_real(0.0) == "0");
  CHECK(format_real(1.0 / 3.0) == "0.333333333");
}
