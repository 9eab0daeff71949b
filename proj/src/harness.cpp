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

#include "gradix/harness.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>

#include "gradix/csv.hpp"
#include "gradix/division.hpp"
#include "gradix/oracle.hpp"

namespace gradix {

namespace {

const std::vector<Attribute> kPool = {"A", "B", "C", "D", "E", "F"};

std::string lower(const Attribute& a) {
  std::string s = a;
  for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return s;
}

std::string fmt_dev(double d) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", d);
  return buf;
}

}  // namespace

// ---- generation -------------------------------------------------------------

void validate(const GenConfig& c) {
  if (c.max_attrs <= 0 || c.max_values <= 0 || c.max_rows <= 0 || c.grid <= 0 || c.instances == 0) {
    throw PreconditionError("generator bounds must be positive");
  }
}

std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 of the pair
  std::uint64_t z = seed * 0x9E3779B97F4A7C15ULL + index + 0x632BE59BD9B4E019ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Generator::Generator(const GenConfig& config, std::uint64_t seed)
    : config_(config), lattice_(config.lattice ? config.lattice : make_lattice(LatticeKind::goedel)), rng_(seed) {
  validate(config_);
}

std::size_t Generator::below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng_() % n); }

bool Generator::coin(int percent) { return below(100) < static_cast<std::size_t>(percent); }

Degree Generator::score() {
  const ResiduatedLattice& l = *lattice_;
  if (l.kind() == LatticeKind::boolean) return l.top();
  if (l.is_finite()) {
    std::vector<Degree> nz;
    for (Degree d : l.elements()) {
      if (!(d == l.bottom())) nz.push_back(d);
    }
    return nz[below(nz.size())];
  }
  const auto k = 1 + below(static_cast<std::size_t>(config_.grid));
  return Degree{static_cast<double>(k) / config_.grid};
}

Value Generator::value(const Attribute& a) {
  return lower(a) + std::to_string(1 + below(static_cast<std::size_t>(config_.max_values)));
}

RankedDataTable Generator::table(const Scheme& s) {
  RankedDataTable t(s, lattice_);
  std::size_t space = 1;
  for (std::size_t k = 0; k < s.size() && space < 1000; ++k) space *= static_cast<std::size_t>(config_.max_values);
  const std::size_t rows = std::min<std::size_t>(1 + below(static_cast<std::size_t>(config_.max_rows)), space);
  for (int guard = 0; t.size() < rows && guard < 1000; ++guard) {
    std::vector<Tuple::Cell> cells;
    for (const auto& a : s) cells.emplace_back(a, value(a));
    Tuple tup(std::move(cells));
    if (!t.rows().count(tup)) t.set(tup, score());
  }
  return t;
}

RankedDataTable Generator::table_nonranked(const Scheme& s) {
  RankedDataTable t = table(s);
  RankedDataTable out(s, lattice_);
  for (const auto& row : t.rows()) out.set(row.first, lattice_->top());
  return out;
}

RankedDataTable gen_rdt(const GenConfig& config, const Scheme& scheme) {
  Generator g(config, config.seed);
  return g.table(scheme);
}

DatabaseInstance gen_instance(const GenConfig& config, const std::map<std::string, Scheme>& symbols) {
  Generator g(config, config.seed);
  DatabaseInstance inst(g.lattice());
  for (const auto& [name, s] : symbols) inst.add(name, g.table(s));
  return inst;
}

std::string dump_instance(const DatabaseInstance& instance) {
  std::string out;
  for (const auto& [name, t] : instance.tables()) out += "# " + name + "\n" + write_csv(t);
  return out;
}

// ---- reports ----------------------------------------------------------------

std::string EquivalenceReport::line() const {
  return "THEOREM " + theorem + " instances=" + std::to_string(instances) + " max_dev=" + fmt_dev(max_dev) +
         " status=" + (passed ? "PASS" : "FAIL");
}

std::string EquivalenceReport::text() const {
  std::string out = theorem + " on " + lattice + ": " + std::to_string(instances) + " instances, max deviation " +
                    fmt_dev(max_dev) + " (tolerance " + fmt_dev(tolerance) + ")\n";
  if (!passed) out += "first counterexample:\n" + counterexample;
  return out + line() + "\n";
}

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = {
      "T1",          "C-gsdo-ggdo",     "T-ggdo-gddo",     "C-gsdo-gddo",
      "T-gddo-variants", "T-rdiv-via-gsdo", "T-gsdo-via-rdiv", "T-gddo-via-rdiv",
      "L-semidiff",  "T-darwen-set",    "boolean-collapse", "ptc-compiler"};
  return ids;
}

namespace {

/// Pointwise comparison sink of one suite run.
class Tally {
 public:
  Tally(EquivalenceReport& rep, const ResiduatedLattice& l) : rep_(rep), l_(l) {}

  void begin(std::size_t index, std::uint64_t seed) {
    index_ = index;
    seed_ = seed;
    inst_ = nullptr;
  }
  /// Instance dumped with a counterexample.
  void attach(const DatabaseInstance* inst) { inst_ = inst; }

  void compare(const std::string& what, const RankedDataTable& lhs, const RankedDataTable& rhs) {
    if (lhs.scheme() != rhs.scheme()) {
      fail(what, "schemes differ: " + lhs.scheme().to_string() + " vs " + rhs.scheme().to_string(), 1.0);
      return;
    }
    std::set<Tuple> keys;
    for (const auto& row : lhs.rows()) keys.insert(row.first);
    for (const auto& row : rhs.rows()) keys.insert(row.first);
    double worst = 0.0;
    const Tuple* where = nullptr;
    for (const auto& t : keys) {
      const double d = l_.deviation(lhs.score(t), rhs.score(t));
      if (d > worst) {
        worst = d;
        where = &t;
      }
    }
    if (worst > rep_.max_dev) rep_.max_dev = worst;
    if (worst > rep_.tolerance) {
      fail(what,
           "tuple " + where->to_string() + ": lhs=" + l_.format(lhs.score(*where)) +
               " rhs=" + l_.format(rhs.score(*where)),
           worst);
    }
  }

  /// Score must be bottom.
  void expect_zero(const std::string& what, const RankedDataTable& t, const Tuple& probe) {
    if (!(t.score(probe) == l_.bottom())) {
      fail(what, "tuple " + probe.to_string() + " scored " + l_.format(t.score(probe)), 1.0);
      rep_.max_dev = std::max(rep_.max_dev, 1.0);
    }
  }

  void fail(const std::string& what, const std::string& detail, double dev) {
    rep_.max_dev = std::max(rep_.max_dev, dev);
    if (!rep_.passed) return;
    rep_.passed = false;
    std::ostringstream os;
    os << "instance " << index_ << " (seed " << seed_ << "): " << what << "\n" << detail << "\n";
    if (inst_) os << dump_instance(*inst_);
    rep_.counterexample = os.str();
  }

 private:
  EquivalenceReport& rep_;
  const ResiduatedLattice& l_;
  std::size_t index_ = 0;
  std::uint64_t seed_ = 0;
  const DatabaseInstance* inst_ = nullptr;
};

using Suite = std::function<void(Generator&, Tally&)>;

/// Pool attributes in random order.
std::vector<Attribute> shuffled(Generator& g, std::size_t n) {
  std::vector<Attribute> p(kPool.begin(), kPool.begin() + static_cast<long>(std::min(n, kPool.size())));
  for (std::size_t i = p.size(); i > 1; --i) std::swap(p[i - 1], p[g.below(i)]);
  return p;
}

/// Disjoint schemes with the given sizes.
std::vector<Scheme> disjoint(Generator& g, const std::vector<std::size_t>& sizes) {
  auto pool = shuffled(g, kPool.size());
  std::vector<Scheme> out;
  std::size_t k = 0;
  for (std::size_t n : sizes) {
    std::vector<Attribute> attrs(pool.begin() + static_cast<long>(k), pool.begin() + static_cast<long>(k + n));
    k += n;
    out.emplace_back(attrs);
  }
  return out;
}

/// Random subset of the first `width` pool attributes.
Scheme subset(Generator& g, std::size_t width) {
  std::vector<Attribute> attrs;
  for (std::size_t k = 0; k < width; ++k) {
    if (g.coin(50)) attrs.push_back(kPool[k]);
  }
  return Scheme(attrs);
}

std::size_t width(const Generator& g) { return static_cast<std::size_t>(std::min(g.config().max_attrs, 3)); }

/// Sizes |R|, |S| with |R| + |S| within the attribute bound.
std::pair<std::size_t, std::size_t> two_sizes(Generator& g) {
  const std::size_t w = width(g);
  const std::size_t r = g.below(std::min<std::size_t>(w, 2) + 1);
  const std::size_t s = g.below(w - r + 1);
  return {r, s};
}

RankedDataTable project_to(const RankedDataTable& t, const Scheme& s) { return project(t, s); }

RankedDataTable support_of(const RankedDataTable& t) {
  RankedDataTable out(t.scheme(), t.lattice_ptr());
  for (const auto& row : t.rows()) out.set(row.first, t.lattice().top());
  return out;
}

/// Tables as D1, D2, ... for counterexample dumps.
DatabaseInstance named(const ResiduatedLatticePtr& l, const std::vector<RankedDataTable>& tables) {
  DatabaseInstance inst(l);
  for (std::size_t k = 0; k < tables.size(); ++k) inst.add("D" + std::to_string(k + 1), tables[k]);
  return inst;
}

oracle::Rel to_rel(const RankedDataTable& t) { return {t.scheme(), t.rows()}; }

RankedDataTable from_rel(const oracle::Rel& r, const ResiduatedLatticePtr& l) {
  RankedDataTable out(r.scheme, l);
  for (const auto& [t, d] : r.rows) out.set(t, d);
  return out;
}

RankedDataTable from_set(const oracle::TupleSet& s, const Scheme& scheme, const ResiduatedLatticePtr& l) {
  RankedDataTable out(scheme, l);
  for (const auto& t : s) out.set(t, l->top());
  return out;
}

oracle::TupleSet sup(const RankedDataTable& t) {
  oracle::TupleSet s;
  for (const auto& row : t.rows()) s.insert(row.first);
  return s;
}

/// Extra table on pool attributes with values no other table uses.
RankedDataTable unrelated(Generator& g) {
  Scheme s = subset(g, kPool.size());
  if (s.empty()) s = Scheme{kPool[g.below(kPool.size())]};
  RankedDataTable t(s, g.lattice());
  const std::size_t rows = 1 + g.below(3);
  for (std::size_t k = 0; k < rows; ++k) {
    std::vector<Tuple::Cell> cells;
    for (const auto& a : s) cells.emplace_back(a, lower(a) + "x" + std::to_string(1 + g.below(3)));
    t.set(Tuple(std::move(cells)), g.score());
  }
  return t;
}

// ---- suites -----------------------------------------------------------------

void suite_t1(Generator& g, Tally& tally) {
  auto [r, s] = two_sizes(g);
  auto sc = disjoint(g, {r, s});
  DatabaseInstance inst(g.lattice());
  inst.add("D1", g.config().nonranked_range ? g.table_nonranked(sc[0]) : g.table(sc[0]));
  inst.add("D2", g.table(sc[1]));
  inst.add("D3", g.table(sc[0].unite(sc[1])));
  tally.attach(&inst);
  const auto& d1 = inst.get("D1");
  const auto& d2 = inst.get("D2");
  const auto& d3 = inst.get("D3");
  tally.compare("div_ranged(D3, D2, D1) vs div_gsdo(D1, D2, D3)", div_ranged(d3, d2, d1), div_gsdo(d1, d2, d3));
  const auto n1 = support_of(d1);
  tally.compare("non-ranked range: div_ranged(D3, D2, supp D1) vs div_gsdo(supp D1, D2, D3)",
                div_ranged(d3, d2, n1), div_gsdo(n1, d2, d3));
}

void suite_gsdo_dee(Generator& g, Tally& tally, bool darwen) {
  auto [r, s] = two_sizes(g);
  auto sc = disjoint(g, {r, s});
  const auto d1 = g.table(sc[0]);
  const auto d2 = g.table(sc[1]);
  const auto d3 = g.table(sc[0].unite(sc[1]));
  const auto one = dee(g.lattice(), g.lattice()->top());
  const auto inst = named(g.lattice(), {d1, d2, d3});
  tally.attach(&inst);
  if (darwen) {
    tally.compare("div_gsdo(D1, D2, D3) vs div_gddo(D1, dee, D3, D2)", div_gsdo(d1, d2, d3),
                  div_gddo(d1, one, d3, d2));
  } else {
    tally.compare("div_gsdo(D1, D2, D3) vs div_ggdo(D1, dee, D3, D2)", div_gsdo(d1, d2, d3),
                  div_ggdo(d1, one, d3, d2));
  }
}

void suite_ggdo_gddo(Generator& g, Tally& tally) {
  const std::size_t w = width(g);
  const std::size_t r = g.below(std::min<std::size_t>(w, 2) + 1);
  const std::size_t s = g.below(w - r + 1);
  const std::size_t t = g.below(w - s + 1);
  auto sc = disjoint(g, {r, s, t});
  const auto d1 = g.table(sc[0]);
  const auto d2 = g.table(sc[2]);
  const auto d3 = g.table(sc[0].unite(sc[1]));
  const auto d4 = g.table(sc[1].unite(sc[2]));
  const auto inst = named(g.lattice(), {d1, d2, d3, d4});
  tally.attach(&inst);
  tally.compare("div_ggdo vs div_gddo", div_ggdo(d1, d2, d3, d4), div_gddo(d1, d2, d3, d4));
}

void suite_gddo_variants(Generator& g, Tally& tally) {
  const std::size_t w = width(g);
  std::vector<RankedDataTable> d;
  for (int k = 0; k < 4; ++k) d.push_back(g.table(subset(g, w)));
  const auto inst = named(g.lattice(), d);
  tally.attach(&inst);
  const auto a = div_gddo(d[0], d[1], d[2], d[3], DarwenForm::joinable);
  const auto b = div_gddo(d[0], d[1], d[2], d[3], DarwenForm::no_condition);
  const auto c = div_gddo(d[0], d[1], d[2], d[3], DarwenForm::projection);
  tally.compare("joinable vs no_condition", a, b);
  tally.compare("joinable vs projection", a, c);
  const auto naive =
      oracle::naive_gddo(*g.lattice(), to_rel(d[0]), to_rel(d[1]), to_rel(d[2]), to_rel(d[3]));
  tally.compare("joinable vs enumeration", a, from_rel(naive, g.lattice()));
}

/// Both sides of a reconstruction identity: `lhs` computed by the division
/// code, `rhs(E)` an algebra expression over symbols D1.. built with the
/// domain constructor `E`.
void reconstruct(Generator& g, Tally& tally, DatabaseInstance inst, const RankedDataTable& lhs,
                 const std::function<RaExpr(const std::function<RaExpr(const Scheme&)>&)>& rhs,
                 const RaExpr& lhs_expr) {
  tally.attach(&inst);
  const Catalog scope = catalog_of(inst);
  auto explicit_dom = [&](const Scheme& s) { return eadom_ra_expr(s, scope, {}); };
  auto node_dom = [](const Scheme& s) { return ra::eadom(s); };
  tally.compare("explicit domain expressions", lhs, eval_ra(rhs(explicit_dom), inst));
  tally.compare("EADOM nodes", lhs, eval_ra(rhs(node_dom), inst));
  inst.add("X", unrelated(g));
  tally.compare("EADOM nodes, widened instance", lhs, eval_ra(rhs(node_dom), inst));
  tally.compare("explicit domain expressions, widened instance", lhs, eval_ra(rhs(explicit_dom), inst));
  tally.compare("left side, widened instance", lhs, eval_ra(lhs_expr, inst));
}

void suite_rdiv_via_gsdo(Generator& g, Tally& tally) {
  auto [r, s] = two_sizes(g);
  auto sc = disjoint(g, {r, s});
  const Scheme R = sc[0], S = sc[1];
  DatabaseInstance inst(g.lattice());
  inst.add("D1", g.table(R.unite(S)));
  inst.add("D2", g.table(S));
  inst.add("D3", g.table(R));
  tally.attach(&inst);
  const auto lhs = div_ranged(inst.get("D1"), inst.get("D2"), inst.get("D3"));
  auto rhs = [&](const std::function<RaExpr(const Scheme&)>& E) {
    RaExpr med = ra::join(ra::rel("D3"),
                          ra::residuum(ra::join(ra::rel("D2"), E(R)), ra::rel("D1"), E(R.unite(S))));
    return ra::gsdo(E(R), E(S), med);
  };
  reconstruct(g, tally, inst, lhs, rhs, ra::div(ra::rel("D1"), ra::rel("D2"), ra::rel("D3")));
}

void suite_gsdo_via_rdiv(Generator& g, Tally& tally) {
  auto [r, s] = two_sizes(g);
  auto sc = disjoint(g, {r, s});
  const Scheme R = sc[0], S = sc[1];
  DatabaseInstance inst(g.lattice());
  inst.add("D1", g.table(R));
  inst.add("D2", g.table(S));
  inst.add("D3", g.table(R.unite(S)));
  const auto lhs = div_gsdo(inst.get("D1"), inst.get("D2"), inst.get("D3"));
  auto rhs = [&](const std::function<RaExpr(const Scheme&)>& E) {
    RaExpr res = ra::residuum(ra::join(ra::rel("D2"), E(R)), ra::rel("D3"), E(R.unite(S)));
    return ra::join(ra::rel("D1"), ra::div(res, E(S), E(R)));
  };
  reconstruct(g, tally, inst, lhs, rhs, ra::gsdo(ra::rel("D1"), ra::rel("D2"), ra::rel("D3")));
}

void suite_gddo_via_rdiv(Generator& g, Tally& tally) {
  const std::size_t w = width(g);
  DatabaseInstance inst(g.lattice());
  std::vector<Scheme> s;
  for (int k = 0; k < 4; ++k) {
    s.push_back(subset(g, w));
    inst.add("D" + std::to_string(k + 1), g.table(s.back()));
  }
  const Scheme &R1 = s[0], &R2 = s[1], &R3 = s[2], &R4 = s[3];
  const Scheme R12 = R1.unite(R2);
  const Scheme R1p = R4.intersect(R12).unite(R1.intersect(R3));
  const Scheme R2p = R4.minus(R12);
  const Scheme R3p = R3.intersect(R1.unite(R4));
  const Scheme R4p = R4.unite(R1.intersect(R3));
  const auto lhs = div_gddo(inst.get("D1"), inst.get("D2"), inst.get("D3"), inst.get("D4"));
  auto rhs = [&](const std::function<RaExpr(const Scheme&)>& E) {
    RaExpr e = ra::residuum(ra::join(ra::rel("D4"), E(R3p)), ra::join(ra::project(R3p, ra::rel("D3")), E(R4)),
                            E(R4p));
    return ra::join(ra::join(ra::rel("D1"), ra::rel("D2")), ra::div(e, E(R2p), E(R1p)));
  };
  reconstruct(g, tally, inst, lhs, rhs,
              ra::gddo(ra::rel("D1"), ra::rel("D2"), ra::rel("D3"), ra::rel("D4")));
}

void suite_semidiff(Generator& g, Tally& tally) {
  const std::size_t w = width(g);
  DatabaseInstance inst(g.lattice());
  inst.add("D1", g.table(subset(g, w)));
  inst.add("D2", g.table(subset(g, w)));
  tally.attach(&inst);
  const auto& d1 = inst.get("D1");
  const auto& d2 = inst.get("D2");
  const auto expected = from_set(oracle::set_semidifference(sup(d1), sup(d2)), d1.scheme(), g.lattice());
  tally.compare("semidifference vs comprehension", semidifference(d1, d2), expected);
  tally.compare("SEMIMINUS vs comprehension", eval_ra(ra::semidifference(ra::rel("D1"), ra::rel("D2")), inst),
                expected);
}

void suite_darwen_set(Generator& g, Tally& tally) {
  const std::size_t w = width(g);
  std::vector<RankedDataTable> d;
  for (int k = 0; k < 4; ++k) d.push_back(g.table(subset(g, w)));
  const auto inst = named(g.lattice(), d);
  tally.attach(&inst);
  const auto expected =
      from_set(oracle::set_darwen(sup(d[0]), d[0].scheme(), sup(d[1]), sup(d[2]), sup(d[3])),
               d[0].scheme().unite(d[1].scheme()), g.lattice());
  tally.compare("composed Darwen divide vs comprehension", div_darwen_composed(d[0], d[1], d[2], d[3]), expected);
  tally.compare("graded Darwen divide vs comprehension", div_gddo(d[0], d[1], d[2], d[3]), expected);
}

void suite_boolean_collapse(Generator& g, Tally& tally) {
  const auto& L = g.lattice();
  const std::size_t w = width(g);
  Scheme x = subset(g, w);
  Scheme y = subset(g, w);
  const auto p = g.table(x);
  const auto q = g.table(x);
  const auto q2 = g.table(y);
  const auto i0 = named(L, {p, q, q2});
  tally.attach(&i0);
  tally.compare("union", unite(p, q), from_set(oracle::set_union(sup(p), sup(q)), x, L));
  tally.compare("intersection", intersect(p, q), from_set(oracle::set_intersection(sup(p), sup(q)), x, L));
  tally.compare("join", natural_join(p, q2), from_set(oracle::set_join(sup(p), sup(q2)), x.unite(y), L));
  const Scheme z = subset(g, w).intersect(x);
  tally.compare("projection", project(p, z), from_set(oracle::set_project(sup(p), z), z, L));
  tally.compare("semijoin", semijoin(p, q2), from_set(oracle::set_semijoin(sup(p), sup(q2)), x, L));
  tally.compare("difference", difference_graded(p, q), from_set(oracle::set_difference(sup(p), sup(q)), x, L));

  {  // Codd with range, Codd over a universe
    auto [r, s] = two_sizes(g);
    auto sc = disjoint(g, {r, s});
    const Scheme rs = sc[0].unite(sc[1]);
    const auto d1 = g.table(rs);
    const auto d2 = g.table(sc[1]);
    const auto u = project_to(d1, sc[0]);
    const auto inst = named(L, {d1, d2});
    tally.attach(&inst);
    const auto expected = from_set(oracle::set_with_range(sup(d1), rs, sup(d2), sc[1]), sc[0], L);
    tally.compare("division with range", div_ranged(d1, d2, u), expected);
    tally.compare("Codd division over a universe", div_gcodd(d1, d2, u), expected);
    tally.compare("composed Codd division", div_codd_composed(d1, d2), expected);
  }
  {  // original Small Divide
    auto [r, s] = two_sizes(g);
    auto sc = disjoint(g, {r, s});
    const auto d1 = g.table(sc[0]);
    const auto d2 = g.table(sc[1]);
    const auto d3 = g.table(sc[0].unite(sc[1]));
    const auto inst = named(L, {d1, d2, d3});
    tally.attach(&inst);
    const auto expected = from_set(oracle::set_small_original(sup(d1), sup(d2), sup(d3)), sc[0], L);
    tally.compare("original Small Divide", div_gsdo(d1, d2, d3), expected);
    tally.compare("composed original Small Divide", div_small_composed(d1, d2, d3), expected);
  }
  {  // general Small Divide: R, S, T, U, V
    std::vector<std::size_t> sizes;
    for (int k = 0; k < 5; ++k) sizes.push_back(g.below(2));
    auto sc = disjoint(g, sizes);
    const Scheme s1 = sc[0].unite(sc[2]);
    const Scheme s2 = sc[1].unite(sc[3]);
    const Scheme s3 = sc[0].unite(sc[1]).unite(sc[4]);
    const auto d1 = g.table(s1);
    const auto d2 = g.table(s2);
    const auto d3 = g.table(s3);
    const auto inst = named(L, {d1, d2, d3});
    tally.attach(&inst);
    const auto expected = from_set(oracle::set_small_general(sup(d1), s1, sup(d2), s2, sup(d3), s3), s1, L);
    tally.compare("general Small Divide", div_gsd(d1, d2, d3), expected);
    tally.compare("composed general Small Divide", div_small_general_composed(d1, d2, d3), expected);
  }
  {  // Todd
    std::vector<std::size_t> sizes{g.below(2), g.below(2), g.below(2)};
    auto sc = disjoint(g, sizes);
    const Scheme s1 = sc[0].unite(sc[1]);
    const Scheme s2 = sc[1].unite(sc[2]);
    const auto d1 = g.table(s1);
    const auto d2 = g.table(s2);
    const auto inst = named(L, {d1, d2});
    tally.attach(&inst);
    const auto u = natural_join(project_to(d1, sc[0]), project_to(d2, sc[2]));
    const auto expected = from_set(oracle::set_todd(sup(d1), s1, sup(d2), s2), sc[0].unite(sc[2]), L);
    tally.compare("Todd division", div_gtodd(d1, d2, u), expected);
  }
  {  // original Great Divide
    std::vector<std::size_t> sizes{g.below(2), g.below(2), g.below(2)};
    auto sc = disjoint(g, sizes);
    const auto d1 = g.table(sc[0]);
    const auto d2 = g.table(sc[2]);
    const Scheme s3 = sc[0].unite(sc[1]);
    const Scheme s4 = sc[1].unite(sc[2]);
    const auto d3 = g.table(s3);
    const auto d4 = g.table(s4);
    const auto inst = named(L, {d1, d2, d3, d4});
    tally.attach(&inst);
    const auto expected =
        from_set(oracle::set_great_original(sup(d1), sc[0], sup(d2), sc[2], sup(d3), s3, sup(d4), s4),
                 sc[0].unite(sc[2]), L);
    tally.compare("original Great Divide", div_ggdo(d1, d2, d3, d4), expected);
    tally.compare("composed original Great Divide", div_great_composed(d1, d2, d3, d4), expected);
  }
  {  // Darwen
    std::vector<RankedDataTable> d;
    for (int k = 0; k < 4; ++k) d.push_back(g.table(subset(g, w)));
    const auto inst = named(L, d);
    tally.attach(&inst);
    const auto expected = from_set(oracle::set_darwen(sup(d[0]), d[0].scheme(), sup(d[1]), sup(d[2]), sup(d[3])),
                                   d[0].scheme().unite(d[1].scheme()), L);
    tally.compare("Darwen divide", div_gddo(d[0], d[1], d[2], d[3]), expected);
    tally.compare("composed Darwen divide", div_darwen_composed(d[0], d[1], d[2], d[3]), expected);
  }
}

void suite_ptc(Generator& g, Tally& tally, std::uint64_t seed) {
  GenConfig c = g.config();
  c.seed = seed;
  c.lattice = g.lattice();
  PtcCase pc = gen_ptc_case(c);
  tally.attach(&pc.instance);
  const Catalog cat = catalog_of(pc.instance);
  check_ptc(pc.expr, cat);
  const auto direct = eval_ptc(pc.expr, pc.instance);
  const auto a = eval_ra(compile_ptc_to_ra(pc.expr, cat, InfForm::ranged_division), pc.instance);
  const auto b = eval_ra(compile_ptc_to_ra(pc.expr, cat, InfForm::small_divide), pc.instance);
  const std::string text = print_ptc(pc.expr);
  tally.compare("eval_ptc vs compiled (ranged division): " + text, direct, a);
  tally.compare("eval_ptc vs compiled (small divide): " + text, direct, b);
  // domain expressions over the symbols of the formula only, against the
  // instance restricted to those symbols
  Catalog scope;
  std::vector<PtcExpr> todo{pc.expr};
  while (!todo.empty()) {
    const PtcExpr n = todo.back();
    todo.pop_back();
    if (n->op == PtcOp::atom)
      for (const auto& name : symbols_of(n->ra)) scope[name] = cat.at(name);
    for (const auto& k : n->kids) todo.push_back(k);
  }
  DatabaseInstance sub(pc.instance.lattice());
  for (const auto& [name, sch] : scope) sub.add(name, pc.instance.get(name));
  const Constants consts = constants_of(pc.expr);
  const auto narrow = eval_ptc(pc.expr, sub);
  for (auto form : {InfForm::ranged_division, InfForm::small_divide}) {
    const RaExpr e = expand_eadom(compile_ptc_to_ra(pc.expr, scope, form), scope, consts);
    tally.compare("eval_ptc on own symbols vs compiled with explicit domains: " + text, narrow, eval_ra(e, pc.instance));
  }
  const Scheme s = direct.scheme();
  if (s.empty()) return;
  for (int k = 0; k < 10; ++k) {
    std::vector<Tuple::Cell> cells;
    for (const auto& attr : s) {
      cells.emplace_back(attr, g.coin(50) ? Value(lower(attr) + "z" + std::to_string(k)) : g.value(attr));
    }
    bool outside = false;
    Tuple probe(cells);
    for (const auto& [attr, v] : probe.cells()) {
      outside = outside || std::get<std::string>(v).find('z') != std::string::npos;
    }
    if (!outside) {
      cells.front().second = lower(cells.front().first) + "z" + std::to_string(k);
      probe = Tuple(cells);
    }
    tally.expect_zero("out-of-domain probe, eval_ptc: " + text, direct, probe);
    tally.expect_zero("out-of-domain probe, compiled: " + text, a, probe);
    tally.expect_zero("out-of-domain probe, compiled: " + text, b, probe);
  }
}

bool boolean_only(const std::string& id) {
  return id == "L-semidiff" || id == "T-darwen-set" || id == "boolean-collapse";
}

}  // namespace

EquivalenceReport run_theorem_suite(const std::string& id, const GenConfig& config) {
  const auto& ids = suite_ids();
  if (std::find(ids.begin(), ids.end(), id) == ids.end()) throw UnknownSuite("unknown suite '" + id + "'");
  validate(config);
  GenConfig cfg = config;
  if (!cfg.lattice) cfg.lattice = make_lattice(LatticeKind::goedel);
  if (boolean_only(id) && cfg.lattice->kind() != LatticeKind::boolean) cfg.lattice = make_lattice(LatticeKind::boolean);

  EquivalenceReport rep;
  rep.theorem = id;
  rep.lattice = cfg.lattice->name();
  rep.tolerance = cfg.lattice->tolerance();
  Tally tally(rep, *cfg.lattice);
  for (std::size_t i = 0; i < cfg.instances; ++i) {
    const std::uint64_t seed = instance_seed(cfg.seed, i);
    Generator g(cfg, seed);
    tally.begin(i, seed);
    try {
      if (id == "T1") suite_t1(g, tally);
      else if (id == "C-gsdo-ggdo") suite_gsdo_dee(g, tally, false);
      else if (id == "C-gsdo-gddo") suite_gsdo_dee(g, tally, true);
      else if (id == "T-ggdo-gddo") suite_ggdo_gddo(g, tally);
      else if (id == "T-gddo-variants") suite_gddo_variants(g, tally);
      else if (id == "T-rdiv-via-gsdo") suite_rdiv_via_gsdo(g, tally);
      else if (id == "T-gsdo-via-rdiv") suite_gsdo_via_rdiv(g, tally);
      else if (id == "T-gddo-via-rdiv") suite_gddo_via_rdiv(g, tally);
      else if (id == "L-semidiff") suite_semidiff(g, tally);
      else if (id == "T-darwen-set") suite_darwen_set(g, tally);
      else if (id == "boolean-collapse") suite_boolean_collapse(g, tally);
      else suite_ptc(g, tally, seed);
    } catch (const Error& e) {
      tally.attach(nullptr);
      tally.fail("evaluation error", e.what(), 1.0);
    }
    ++rep.instances;
  }
  return rep;
}

// ---- random PTC -------------------------------------------------------------

namespace {

class PtcGen {
 public:
  PtcGen(Generator& g, std::vector<TupleVar> vars, std::map<std::string, std::vector<TupleVar>> symbols)
      : g_(g), vars_(std::move(vars)), symbols_(std::move(symbols)) {}

  PtcExpr gen(int depth) {
    if (depth == 0 || g_.coin(20)) return atom();
    const auto roll = g_.below(100);
    if (roll < 55) {
      PtcExpr left = gen(depth - 1);
      PtcExpr right = gen(depth - 1);
      if (roll < 15) return ptc::otimes(left, right);
      if (roll < 30) return ptc::wedge(left, right);
      return ptc::implies(left, right);
    }
    if (roll < 60) return ptc::nabla(gen(depth - 1));
    if (roll < 65) return ptc::delta(gen(depth - 1));
    PtcExpr body = gen(depth - 1);
    auto fv = free_vars(body);
    if (fv.empty()) return body;
    std::vector<TupleVar> bound;
    for (const auto& v : fv) {
      if (g_.coin(50)) bound.push_back(v);
    }
    if (bound.empty()) bound.push_back(fv[g_.below(fv.size())]);
    return g_.coin(45) ? ptc::sup(bound, body) : ptc::inf(bound, body);
  }

 private:
  PtcExpr atom() {
    auto it = symbols_.begin();
    std::advance(it, static_cast<long>(g_.below(symbols_.size())));
    const auto& [name, vars] = *it;
    const auto roll = g_.below(100);
    if (roll < 15) {
      std::vector<TupleVar> keep;
      for (const auto& v : vars) {
        if (g_.coin(50)) keep.push_back(v);
      }
      return ptc::atom(ra::project(scheme_of(keep), ra::rel(name)), keep);
    }
    if (roll < 25) {
      std::vector<TupleVar> singles;
      for (const auto& v : vars_) {
        if (v.scheme.size() == 1) singles.push_back(v);
      }
      if (!singles.empty()) {
        const TupleVar v = singles[g_.below(singles.size())];
        const Attribute a = *v.scheme.begin();
        const Value val = g_.coin(50) ? g_.value(a) : Value(lower(a) + "9");
        return ptc::atom(ra::singleton(a, val), {v});
      }
    }
    return ptc::atom(ra::rel(name), vars);
  }

  Generator& g_;
  std::vector<TupleVar> vars_;
  std::map<std::string, std::vector<TupleVar>> symbols_;
};

}  // namespace

PtcCase gen_ptc_case(const GenConfig& config, int max_depth) {
  Generator g(config, config.seed);
  // Partition the attributes into blocks; one variable per block.
  auto attrs = shuffled(g, width(g));
  std::vector<std::vector<Attribute>> blocks;
  for (const auto& a : attrs) {
    if (blocks.empty() || g.coin(50)) blocks.emplace_back();
    blocks.back().push_back(a);
  }
  std::vector<TupleVar> vars;
  for (const auto& b : blocks) {
    Scheme s(b);
    std::string name = "v_";
    for (const auto& a : s) name += a;
    vars.push_back(TupleVar{name, s});
  }
  std::sort(vars.begin(), vars.end());
  DatabaseInstance inst(g.lattice());
  std::map<std::string, std::vector<TupleVar>> symbols;
  for (int k = 1; k <= 3; ++k) {
    std::vector<TupleVar> use;
    for (const auto& v : vars) {
      if (g.coin(50)) use.push_back(v);
    }
    if (use.empty()) use.push_back(vars[g.below(vars.size())]);
    const std::string name = "P" + std::to_string(k);
    inst.add(name, g.table(scheme_of(use)));
    symbols.emplace(name, use);
  }
  PtcGen pg(g, vars, symbols);
  PtcExpr e = pg.gen(max_depth);
  return PtcCase{std::move(inst), std::move(e)};
}

// ---- finite lattices --------------------------------------------------------

namespace {

/// Bounded lattice order on 0..n-1 with 0 least and n-1 greatest.
struct Order {
  int n = 0;
  std::vector<char> leq;
  std::vector<int> meet, join;
  bool le(int a, int b) const { return leq[static_cast<std::size_t>(a * n + b)] != 0; }
};

/// Strict orders on m elements, one per isomorphism class.
std::vector<std::vector<char>> posets(int m) {
  const int pairs = m * (m - 1);
  std::vector<std::pair<int, int>> idx;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j) idx.emplace_back(i, j);
  std::set<std::vector<char>> seen;
  std::vector<std::vector<char>> out;
  std::vector<int> perm(static_cast<std::size_t>(m));
  for (long mask = 0; mask < (1L << pairs); ++mask) {
    std::vector<char> lt(static_cast<std::size_t>(m * m), 0);
    for (int k = 0; k < pairs; ++k)
      if (mask >> k & 1) lt[static_cast<std::size_t>(idx[k].first * m + idx[k].second)] = 1;
    bool ok = true;
    for (int i = 0; i < m && ok; ++i)
      for (int j = 0; j < m && ok; ++j) {
        if (lt[i * m + j] && lt[j * m + i]) ok = false;
        for (int k = 0; k < m && ok; ++k)
          if (lt[i * m + j] && lt[j * m + k] && !lt[i * m + k]) ok = false;
      }
    if (!ok) continue;
    std::vector<char> best;
    for (int i = 0; i < m; ++i) perm[static_cast<std::size_t>(i)] = i;
    do {
      std::vector<char> img(static_cast<std::size_t>(m * m), 0);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          img[static_cast<std::size_t>(perm[i] * m + perm[j])] = lt[static_cast<std::size_t>(i * m + j)];
      if (best.empty() || img < best) best = img;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (seen.insert(best).second) out.push_back(best);
  }
  return out;
}

std::optional<Order> bounded_lattice(int m, const std::vector<char>& lt) {
  Order o;
  o.n = m + 2;
  const int n = o.n;
  o.leq.assign(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) {
    o.leq[static_cast<std::size_t>(i * n + i)] = 1;
    o.leq[static_cast<std::size_t>(0 * n + i)] = 1;
    o.leq[static_cast<std::size_t>(i * n + n - 1)] = 1;
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (lt[static_cast<std::size_t>(i * m + j)]) o.leq[static_cast<std::size_t>((i + 1) * n + j + 1)] = 1;
  o.meet.assign(static_cast<std::size_t>(n * n), -1);
  o.join.assign(static_cast<std::size_t>(n * n), -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (o.le(c, a) && o.le(c, b)) {
          bool greatest = true;
          for (int d = 0; d < n && greatest; ++d)
            if (o.le(d, a) && o.le(d, b) && !o.le(d, c)) greatest = false;
          if (greatest) o.meet[static_cast<std::size_t>(a * n + b)] = c;
        }
        if (o.le(a, c) && o.le(b, c)) {
          bool least = true;
          for (int d = 0; d < n && least; ++d)
            if (o.le(a, d) && o.le(b, d) && !o.le(c, d)) least = false;
          if (least) o.join[static_cast<std::size_t>(a * n + b)] = c;
        }
      }
      if (o.meet[static_cast<std::size_t>(a * n + b)] < 0 || o.join[static_cast<std::size_t>(a * n + b)] < 0) {
        return std::nullopt;
      }
    }
  return o;
}

/// Every commutative, associative, monotone multiplication with unit top
/// that distributes over binary joins.
class MulSearch {
 public:
  explicit MulSearch(const Order& o) : o_(o), n_(o.n) {
    mul_.assign(static_cast<std::size_t>(n_ * n_), -1);
    for (int x = 0; x < n_; ++x) {
      set(0, x, 0);
      set(x, n_ - 1, x);
    }
    for (int i = 1; i < n_ - 1; ++i)
      for (int j = i; j < n_ - 1; ++j) open_.emplace_back(i, j);
  }

  std::vector<std::vector<int>> run() {
    step(0);
    return found_;
  }

 private:
  int& m(int a, int b) { return mul_[static_cast<std::size_t>(a * n_ + b)]; }
  void set(int a, int b, int v) {
    m(a, b) = v;
    m(b, a) = v;
  }

  bool consistent(int i, int j, int v) {
    for (int p = 0; p < n_; ++p)
      for (int q = 0; q < n_; ++q) {
        const int w = m(p, q);
        if (w < 0) continue;
        if (o_.le(p, i) && o_.le(q, j) && !o_.le(w, v)) return false;
        if (o_.le(i, p) && o_.le(j, q) && !o_.le(v, w)) return false;
      }
    return true;
  }

  bool complete_ok() {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c) {
          if (m(m(a, b), c) != m(a, m(b, c))) return false;
          const int lhs = m(a, o_.join[static_cast<std::size_t>(b * n_ + c)]);
          if (lhs != o_.join[static_cast<std::size_t>(m(a, b) * n_ + m(a, c))]) return false;
        }
    return true;
  }

  void step(std::size_t k) {
    if (k == open_.size()) {
      if (complete_ok()) found_.push_back(mul_);
      return;
    }
    const auto [i, j] = open_[k];
    const int bound = o_.meet[static_cast<std::size_t>(i * n_ + j)];
    for (int v = 0; v < n_; ++v) {
      if (!o_.le(v, bound) || !consistent(i, j, v)) continue;
      set(i, j, v);
      step(k + 1);
      set(i, j, -1);
    }
  }

  const Order& o_;
  int n_;
  std::vector<int> mul_;
  std::vector<std::pair<int, int>> open_;
  std::vector<std::vector<int>> found_;
};

std::string label(int k, int n) {
  if (k == 0) return "0";
  if (k == n - 1) return "1";
  return "e" + std::to_string(k);
}

}  // namespace

std::vector<FiniteLattice> enumerate_residuated_lattices(int max_size) {
  std::vector<FiniteLattice> out;
  for (int size = 2; size <= max_size; ++size) {
    for (const auto& lt : posets(size - 2)) {
      auto o = bounded_lattice(size - 2, lt);
      if (!o) continue;
      for (const auto& mul : MulSearch(*o).run()) {
        TableSpec spec;
        for (int k = 0; k < size; ++k) spec.carrier.push_back(label(k, size));
        for (int a = 0; a < size; ++a)
          for (int b = 0; b < size; ++b)
            if (a != b && o->le(a, b)) spec.order.emplace_back(label(a, size), label(b, size));
        for (int a = 0; a < size; ++a)
          for (int b = 0; b < size; ++b)
            spec.products.emplace_back(label(a, size), label(b, size),
                                       label(mul[static_cast<std::size_t>(a * size + b)], size));
        LatticeParams params;
        params.table = spec;
        out.push_back(FiniteLattice{spec, make_lattice(LatticeKind::finite_table, params)});
      }
    }
  }
  return out;
}

std::optional<DistributivityCounterexample> search_distributivity_counterexample(int max_size) {
  for (auto& fl : enumerate_residuated_lattices(max_size)) {
    const ResiduatedLattice& l = *fl.lattice;
    const auto el = l.elements();
    for (Degree a : el)
      for (Degree b : el)
        for (Degree c : el)
          if (!(l.otimes(a, l.meet(b, c)) == l.meet(l.otimes(a, b), l.otimes(a, c)))) {
            return DistributivityCounterexample{fl, a, b, c};
          }
  }
  return std::nullopt;
}

EquivalenceReport t1_witness_report(const DistributivityCounterexample& w) {
  const auto& L = w.lattice.lattice;
  const ResiduatedLattice& l = *L;
  DatabaseInstance inst(L);
  const Tuple r{{"A", Value(std::string("r"))}};
  const Tuple s1{{"B", Value(std::string("s1"))}};
  const Tuple s2{{"B", Value(std::string("s2"))}};
  RankedDataTable d1(Scheme{"A"}, L), d2(Scheme{"B"}, L), d3(Scheme{"A", "B"}, L);
  d1.set(r, w.a);
  d2.set(s1, l.top());
  d2.set(s2, l.top());
  d3.set(r.join(s1), w.b);
  d3.set(r.join(s2), w.c);
  inst.add("D1", d1);
  inst.add("D2", d2);
  inst.add("D3", d3);
  EquivalenceReport rep;
  rep.theorem = "T1";
  rep.lattice = l.name();
  rep.tolerance = l.tolerance();
  Tally tally(rep, l);
  tally.attach(&inst);
  tally.compare("div_ranged(D3, D2, D1) vs div_gsdo(D1, D2, D3)", div_ranged(d3, d2, d1), div_gsdo(d1, d2, d3));
  rep.instances = 1;
  return rep;
}

}  // namespace gradix
