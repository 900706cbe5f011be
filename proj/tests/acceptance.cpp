// One PASS/FAIL line per acceptance criterion, details indented below it.
// FUSION_CACHE_DIR defaults to a directory in the build tree so that reruns
// only pay for the classification once; FUSION_ACCEPTANCE_MAX_ORDER (default
// 31) cuts the extended tier short.

#include <cstdlib>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "fusion/classify.hpp"
#include "fusion/zlinalg.hpp"

using namespace fusion;

namespace {

using Factors = std::vector<std::int64_t>;

struct Verdict {
  bool ok = true;
  std::vector<std::string> notes;
  void fail(const std::string& s) {
    ok = false;
    notes.push_back("FAIL " + s);
  }
  void note(const std::string& s) { notes.push_back(s); }
  void expect(bool c, const std::string& s) { c ? note("ok   " + s) : fail(s); }
};

std::string factors_str(const Factors& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
  return s + "]";
}

Factors rep(std::int64_t x, int n) { return Factors(std::size_t(n), x); }
Factors cat(Factors a, const Factors& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::map<int, MoritaClassReport> reports;

const MoritaClassReport& report(int order) {
  auto it = reports.find(order);
  if (it != reports.end()) return it->second;
  ClassifyOptions o;
  o.jobs = int(std::max(1u, std::thread::hardware_concurrency()));
  if (order >= 29) o.bar_bound = 1000000;  // (|G|-1)^4 bar tuples in degree 4 exceed the default
  return reports.emplace(order, classify_order(order, o)).first->second;
}

// ---- 1 ----------------------------------------------------------------------

Verdict cohomology_goldens() {
  Verdict v;
  // reference values, in catalog order
  std::map<int, std::vector<Factors>> reference{
      {8, {{8}, {2, 2, 4}, {2, 2, 4}, {8}, rep(2, 7)}},
      {27, {{27}, {3, 3, 9}, rep(3, 4), {3, 3}, rep(3, 7)}},
      {16, {{16}, {4, 4}, {2, 2, 4, 4}, {2, 4, 4}, {2, 2, 8}, {2, 8}, {2, 2, 8}, {2, 8}, {8},
            cat(rep(2, 6), {4}), cat(rep(2, 6), {4}), {2, 2, 2, 8}, {2, 2, 2, 8}, rep(2, 14)}}};
  for (auto& [order, rows] : reference)
    for (int i = 1; i <= int(rows.size()); ++i) {
      auto got = catalog_cohomology(order, i, 3)->factors;
      const auto& want = rows[std::size_t(i - 1)];
      std::string tag = std::to_string(order) + "/" + std::to_string(i) + " " + catalog_entry(order, i).name;
      if (got == want) continue;
      v.fail(tag + ": computed " + factors_str(got) + ", expected " + factors_str(want));
    }
  if (v.ok) v.note("all 24 groups agree");
  return v;
}

// ---- 2 ----------------------------------------------------------------------

Verdict orbit_counts() {
  Verdict v;
  std::map<int, std::vector<std::size_t>> want{{8, {8, 9, 12, 8, 10}},
                                               {27, {7, 16, 15, 9, 14}},
                                               {16, {12, 12, 30, 24, 18, 16, 24, 16, 12, 34, 57, 18, 32, 23}}};
  for (auto& [order, counts] : want) {
    std::vector<std::size_t> got;
    for (int i = 1; i <= int(counts.size()); ++i) got.push_back(automorphism_orbits(*catalog_cohomology(order, i, 3)).size());
    std::ostringstream s;
    for (auto x : got) s << x << ' ';
    v.expect(got == counts, "order " + std::to_string(order) + ": " + s.str());
  }
  std::size_t total = 0;
  for (int i = 1; i <= 14; ++i) total += automorphism_orbits(*catalog_cohomology(16, i, 3)).size();
  v.expect(total == 328, "order 16 total " + std::to_string(total));
  return v;
}

// ---- 3 ----------------------------------------------------------------------

struct Row {
  std::vector<int> nu;
  std::int64_t n, k;  // θ = ζ_n^k
  int mult;
};

using Projected = std::map<std::string, int>;

std::string show(const Cyclotomic& x) {
  if (auto i = x.to_integer()) return i->str();
  if (auto r = x.root_of_unity()) return "z" + std::to_string(r->first) + "^" + std::to_string(r->second);
  return x.str();
}

std::string row_key(const std::vector<Cyclotomic>& nu, const Cyclotomic& theta) {
  std::string s;
  for (auto& x : nu) s += show(x) + " ";
  return s + "| " + show(theta);
}

Projected project(const InvariantTable& t, const std::vector<int>& ms, bool conj) {
  Projected p;
  for (auto& r : t.rows) {
    std::vector<Cyclotomic> nu;
    for (int m : ms) nu.push_back(r.nu[std::size_t(m % t.fsexp)]);
    p[row_key(nu, conj ? r.theta.conj() : r.theta)] += r.multiplicity;
  }
  return p;
}

Projected reference(const std::vector<Row>& rows) {
  Projected p;
  for (auto& r : rows) {
    std::vector<Cyclotomic> nu(r.nu.begin(), r.nu.end());
    p[row_key(nu, Cyclotomic::zeta(r.n, r.k))] += r.mult;
  }
  return p;
}

int total(const Projected& p) {
  int s = 0;
  for (auto& [k, m] : p) s += m;
  return s;
}

// entries whose table restricted to `ms` is `want` (θ possibly conjugated)
std::vector<const ClassifyEntry*> matching(int order, const Projected& want, const std::vector<int>& ms) {
  std::vector<const ClassifyEntry*> out;
  for (auto& e : report(order).entries)
    if (project(e.table, ms, false) == want || project(e.table, ms, true) == want) out.push_back(&e);
  return out;
}

std::string names(int order, const std::vector<const ClassifyEntry*>& es) {
  std::string s;
  for (auto* e : es) s += (s.empty() ? "" : ", ") + catalog_entry(order, e->index).name + "/w" + std::to_string(e->orbit);
  return s.empty() ? "none" : s;
}

std::multiset<int> groups_of(const std::vector<const ClassifyEntry*>& es) {
  std::multiset<int> g;
  for (auto* e : es) g.insert(e->index);
  return g;
}

using PointedRows = std::map<std::vector<std::string>, int>;

PointedRows pointed_reference(const std::vector<std::pair<std::vector<int>, int>>& rows) {
  PointedRows r;
  for (auto& [nu, m] : rows) {
    std::vector<std::string> s;
    for (int x : nu) s.push_back(Cyclotomic(x).str());
    r[s] += m;
  }
  return r;
}

PointedRows pointed_of(const ClassifyEntry& e, int order) {
  auto h = catalog_cohomology(order, e.index, 3);
  auto t = pointed_indicator_table(dense_cocycle(make_class(h, e.representative)), 8);
  PointedRows r;
  for (auto& [nu, m] : t.rows) {
    std::vector<std::string> s;
    for (auto& x : nu) s.push_back(x.str());
    r[s] += m;
  }
  return r;
}

Verdict table_goldens() {
  Verdict v;
  const std::vector<int> m012{0, 1, 2}, m0124{0, 1, 2, 4};

  auto couple = reference({{{1, 1, 1}, 1, 0, 1},  {{1, 0, 0}, 1, 0, 12}, {{1, 0, 1}, 1, 0, 7},  {{1, 1, 1}, 2, 1, 1},
                         {{1, 0, 0}, 4, 1, 12}, {{1, 0, 0}, 4, 3, 12}, {{1, 0, -1}, 4, 1, 12}, {{1, 0, -1}, 4, 3, 12}});
  auto hits = matching(8, couple, m012);
  if (hits.empty()) {
    v.fail("FSIcouple8: no order 8 datum has this table (it lists " + std::to_string(total(couple)) +
           " simples; every order 8 double has 64)");
    // the Z4xZ2 / Z2^3 cluster that agrees on the five consistent rows
    for (auto& e : report(8).entries) {
      auto p = project(e.table, m012, false);
      int agree = 0;
      for (auto& [k, m] : couple) agree += p.count(k) && p[k] == m;
      if (e.index == 2 && agree >= 5) {
        std::ostringstream s;
        s << "closest: " << catalog_entry(8, 2).name << "/w" << e.orbit << " agrees on " << agree << " of 8 rows; computed:";
        for (auto& [k, m] : p) s << " (" << k << ")x" << m;
        v.note(s.str());
      }
    }
  } else {
    v.expect(groups_of(hits) == std::multiset<int>{2, 5}, "FSIcouple8: " + names(8, hits));
  }

  auto triple = reference({{{1, 1, 1}, 1, 0, 1}, {{1, 0, 1}, 1, 0, 7},  {{2, 0, 1}, 1, 0, 3},  {{2, 0, 1}, 2, 1, 3},
                         {{2, 0, -1}, 1, 0, 1}, {{2, 0, -1}, 2, 1, 1}, {{2, 0, -1}, 4, 1, 3}, {{2, 0, -1}, 4, 3, 3}});
  hits = matching(8, triple, m012);
  v.expect(groups_of(hits) == std::multiset<int>{3, 4, 5}, "FSItriple8: " + names(8, hits));

  auto quad = reference({{{1, 0, 1, 1}, 1, 0, 7},  {{1, 1, 1, 1}, 1, 0, 1},  {{2, 0, -1, 1}, 2, 1, 2}, {{2, 0, -1, 1}, 1, 0, 2},
                       {{2, 0, -1, 1}, 4, 3, 2}, {{2, 0, -1, 1}, 4, 1, 2}, {{2, 0, -1, 1}, 8, 5, 2}, {{2, 0, -1, 1}, 8, 7, 2},
                       {{2, 0, -1, 1}, 8, 3, 2}, {{2, 0, -1, 1}, 8, 1, 2}, {{2, 0, 1, 1}, 2, 1, 2},  {{2, 0, 1, 1}, 1, 0, 2},
                       {{2, 0, 1, 1}, 4, 3, 2},  {{2, 0, 1, 1}, 4, 1, 2},  {{2, 0, 1, 2}, 2, 1, 2},  {{2, 0, 1, 2}, 1, 0, 4},
                       {{4, 0, -1, 2}, 4, 3, 2}, {{4, 0, -1, 2}, 4, 1, 2}, {{4, 0, 1, 2}, 2, 1, 2},  {{4, 0, 1, 2}, 1, 0, 2}});
  hits = matching(16, quad, m0124);
  v.expect(groups_of(hits) == std::multiset<int>{7, 9, 11, 11}, "FSIquadruple16: " + names(16, hits));

  auto pt1 = pointed_reference({{{1, 0, 0, 0, -1, 0, 0, 0}, 2}, {{1, 0, -1, 0, 1, 0, -1, 0}, 5}, {{1, 0, 0, 0, 1, 0, 0, 0}, 2},
                              {{1, 0, 1, 0, 1, 0, 1, 0}, 6},  {{1, 1, 1, 1, 1, 1, 1, 1}, 1}});
  auto pt2 = pointed_reference({{{1, 0, 0, 0, 0, 0, 0, 0}, 4}, {{1, 0, -1, 0, 1, 0, -1, 0}, 4}, {{1, 0, 0, 0, 1, 0, 0, 0}, 2},
                              {{1, 0, 1, 0, 1, 0, 1, 0}, 5}, {{1, 1, 1, 1, 1, 1, 1, 1}, 1}});
  auto pt3 = pointed_reference({{{1, 0, 0, 0, 0, 0, 0, 0}, 4}, {{1, 0, 0, 0, 1, 0, 0, 0}, 10},
                              {{1, 0, 1, 0, 1, 0, 1, 0}, 1}, {{1, 1, 1, 1, 1, 1, 1, 1}, 1}});
  std::map<int, std::vector<std::string>> seen;
  for (auto* e : hits) {
    auto p = pointed_of(*e, 16);
    seen[e->index].push_back(p == pt1 ? "PT1" : p == pt2 ? "PT2" : p == pt3 ? "PT3" : "?");
  }
  v.expect(seen[11] == std::vector<std::string>{"PT1", "PT1"}, "PT1 on both Z2xD8 data");
  v.expect(seen[7] == std::vector<std::string>{"PT2"}, "PT2 on D16");
  v.expect(seen[9] == std::vector<std::string>{"PT3"}, "PT3 on Q16");
  return v;
}

// ---- 4 ----------------------------------------------------------------------

Verdict classification_counts() {
  Verdict v;
  // expected values for orders 2..31
  const std::vector<std::size_t> classes{2, 3, 7, 3, 12, 3, 38, 9, 12, 3, 54, 3, 12, 9, 230,
                                         3, 54, 3, 52, 12, 12, 3, 393, 9, 12, 47, 48, 3, 72, 3};
  const std::vector<std::size_t> orbits{2, 3, 8, 3, 12, 3, 47, 10, 12, 3, 60, 3, 12, 9, 328,
                                        3, 58, 3, 58, 12, 12, 3, 474, 10, 12, 61, 54, 3, 72, 3};
  int max_order = 31;
  if (const char* s = std::getenv("FUSION_ACCEPTANCE_MAX_ORDER")) max_order = std::atoi(s);
  std::vector<int> order_list;
  for (int n = 2; n <= 16; ++n) order_list.push_back(n);
  order_list.push_back(27);
  for (int n = 17; n <= 31; ++n)
    if (n != 27) order_list.push_back(n);
  std::size_t grand = 0;
  bool complete = true;
  for (int n : order_list) {
    if (n > 16 && n != 27 && n > max_order) {
      complete = false;
      v.note("skip order " + std::to_string(n));
      continue;
    }
    const auto& r = report(n);
    const std::size_t want = classes[std::size_t(n - 2)];
    std::ostringstream s;
    s << "order " << n << ": " << r.class_count() << " classes (expected " << want << "), " << r.entries.size()
      << " orbits (expected " << orbits[std::size_t(n - 2)] << "), " << r.unresolved.size() << " unresolved";
    grand += r.class_count();
    const bool exact = r.class_count() == want && r.entries.size() == orbits[std::size_t(n - 2)] && r.unresolved.empty();
    if (n <= 16 || n == 27) v.expect(exact, s.str());
    else if (exact) v.note("ok   " + s.str());
    // extended tier: a shortfall is acceptable only when it is flagged
    else if (r.class_count() == want + r.unresolved.size() && r.table_count == int(want)) v.note("open " + s.str());
    else v.fail(s.str());
  }
  if (complete) v.expect(grand == 1126, "grand total " + std::to_string(grand) + " (expected 1126)");
  return v;
}

// ---- 5 ----------------------------------------------------------------------

Verdict universal_coefficients() {
  Verdict v;
  int checked = 0;
  for (int order = 1; order <= 8; ++order)
    for (int i = 1; i <= catalog_count(order); ++i) {
      auto g = catalog_group(order, i);
      auto K = bar_complex(g, 4);
      std::vector<std::vector<BigInt>> H(4);
      for (int n = 1; n <= 3; ++n) H[std::size_t(n)] = homology_data(K, n).factors;
      for (int n = 2; n <= 3; ++n)
        for (std::int64_t m = 2; m <= 9; ++m) {
          BigInt hom = 1, ext = 1;
          for (auto& s : H[std::size_t(n)]) hom *= boost::multiprecision::gcd(s, BigInt(m));
          for (auto& s : H[std::size_t(n - 1)]) ext *= boost::multiprecision::gcd(s, BigInt(m));
          ++checked;
          if (cohomology_size_mod(g, n, m) != hom * ext)
            v.fail(std::to_string(order) + "/" + std::to_string(i) + " n=" + std::to_string(n) + " m=" + std::to_string(m));
        }
    }
  if (v.ok) v.note(std::to_string(checked) + " (G, n, m) triples, orders 1-8, n = 2, 3, m = 2..9");
  return v;
}

// ---- 6 ----------------------------------------------------------------------

bool snf_ok(const IntMatrix& m) {
  auto s = smith_normal_form(m);
  if (!equal(matmul(matmul(s.U, m), s.V), s.D)) return false;
  if (abs(determinant(s.U)) != 1 || abs(determinant(s.V)) != 1) return false;
  const Eigen::Index k = std::min(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < s.D.rows(); ++i)
    for (Eigen::Index j = 0; j < s.D.cols(); ++j)
      if (i != j && s.D(i, j) != 0) return false;
  for (Eigen::Index i = 0; i + 1 < k; ++i) {
    const BigInt a = abs(BigInt(s.D(i, i))), b = abs(BigInt(s.D(i + 1, i + 1)));
    if (a == 0 ? b != 0 : b % a != 0) return false;
  }
  if (m.rows() == m.cols()) {
    BigInt p = 1;
    for (Eigen::Index i = 0; i < k; ++i) p *= BigInt(s.D(i, i));
    if (abs(p) != abs(determinant(m))) return false;
  }
  return true;
}

bool boundary_squares_to_zero(const FiniteGroup& g, int n) {
  const int N = g.order();
  std::vector<long> acc(static_cast<std::size_t>(tuple_count(N, n - 2)), 0);
  SparseRow outer, inner;
  int t[8], u[8];
  for (long i = 0; i < tuple_count(N, n); ++i) {
    tuple_decode(N, i, n, t);
    bar_boundary(g, t, n, outer);
    for (auto& [c, x] : outer) {
      tuple_decode(N, c, n - 1, u);
      bar_boundary(g, u, n - 1, inner);
      for (auto& [c2, y] : inner) acc[std::size_t(c2)] += x * y;
    }
    for (auto& x : acc)
      if (x != 0) return false;
  }
  return true;
}

Verdict property_suites() {
  Verdict v;
  {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> size(1, 10), entry(-9, 9), sparse(0, 3);
    int bad = 0;
    for (int trial = 0; trial < 500; ++trial) {
      const int r = size(rng), c = trial % 4 == 0 ? r : size(rng);
      IntMatrix m(r, c);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = (trial % 3 == 0 && sparse(rng)) ? 0 : entry(rng);
      bad += !snf_ok(m);
    }
    v.expect(bad == 0, "Smith normal form on 500 random matrices");
  }
  {
    bool ok = true;
    for (int order = 1; order <= 16; ++order)
      for (int i = 1; i <= catalog_count(order); ++i)
        for (int n = 2; n <= 4; ++n) ok = ok && boundary_squares_to_zero(catalog_group(order, i), n);
    v.expect(ok, "boundary squares to zero, orders 1-16, degrees 2-4");
  }
  std::int64_t generators = 0, data = 0;
  bool gen_ok = true, dims = true, unit = true, real = true, periodic = true, twists = true, orbits = true;
  for (int order = 2; order <= 8; ++order)
    for (int i = 1; i <= catalog_count(order); ++i) {
      auto h = catalog_cohomology(order, i, 3);
      for (auto& w : h->generators) {
        ++generators;
        for (auto x : coboundary(h->group, w, 3, h->modulus)) gen_ok = gen_ok && x == 0;
      }
      for (auto& o : automorphism_orbits(*h)) {
        ++data;
        DenseCocycle w = dense_cocycle(make_class(h, o.representative));
        PiTable p = pi_table(w);
        const auto e = fs_exponent(w, p);
        std::int64_t dim2 = 0, twist_lcm = 1;
        for (auto& s : double_simples(w)) {
          auto nu = fs_double_sequence(w, p, s, 2 * e);
          dims = dims && nu[0] == Cyclotomic(s.dim()) && s.dim() > 0;
          dim2 += std::int64_t(s.dim()) * s.dim();
          bool is_unit = s.g == 0 && s.character.dim == 1;
          for (auto& c : s.character.values) is_unit = is_unit && c == Cyclotomic(1);
          unit = unit && nu[1] == Cyclotomic(is_unit ? 1 : 0);
          real = real && nu[2] == nu[2].conj();
          for (std::int64_t m = 0; m < e; ++m) periodic = periodic && nu[std::size_t(m)] == nu[std::size_t(m + e)];
          auto r = twist(s).root_of_unity();
          twist_lcm = std::lcm(twist_lcm, r ? r->first : 0);
        }
        dims = dims && dim2 == std::int64_t(order) * order;
        twists = twists && twist_lcm == e;
        const auto ref = invariant_table(w);
        for (std::size_t k = 1; k < o.members.size() && k < 3; ++k)
          orbits = orbits && invariant_table(dense_cocycle(make_class(h, o.members[k]))) == ref;
      }
    }
  v.expect(gen_ok, std::to_string(generators) + " generator cocycles of H^3, orders 2-8, are cocycles");
  const std::string over = " on " + std::to_string(data) + " data of order <= 8";
  v.expect(dims, "nu_0 positive integers with sum of squares |G|^2" + over);
  v.expect(unit, "nu_1 detects the unit" + over);
  v.expect(real, "nu_2 real" + over);
  v.expect(periodic, "indicators periodic at the FS exponent" + over);
  v.expect(twists, "twist orders have lcm the FS exponent" + over);
  v.expect(orbits, "invariant tables constant on automorphism orbits" + over);

  // group-theoretical duals: sum of dims^2 is |G|
  bool gt = true;
  int gt_count = 0;
  for (int order = 2; order <= 8; ++order)
    for (int i = 1; i <= catalog_count(order); ++i) {
      auto h = catalog_cohomology(order, i, 3);
      for (auto& o : automorphism_orbits(*h)) {
        auto cls = make_class(h, o.representative);
        for (auto& sub : all_subgroups(cls.parent->group)) {
          if (!restriction_is_trivial_cochain(cls, sub)) continue;
          auto a = adapt_cocycle(dense_cocycle(cls), sub);
          std::int64_t d2 = 0;
          for (auto& s : gt_simples(a, sub)) d2 += std::int64_t(s.dim()) * s.dim();
          gt = gt && d2 == order;
          ++gt_count;
        }
      }
    }
  v.expect(gt, "sum of dims^2 is |G| for " + std::to_string(gt_count) + " group-theoretical duals, order <= 8");
  return v;
}

}  // namespace

int main() {
  if (!std::getenv("FUSION_CACHE_DIR")) setenv("FUSION_CACHE_DIR", FUSION_ACCEPTANCE_CACHE, 1);
  struct Criterion {
    int id;
    const char* title;
    Verdict (*run)();
  };
  const Criterion all[] = {{1, "H^3 invariant factors of orders 8, 16, 27", cohomology_goldens},
                           {2, "automorphism orbit counts of orders 8, 16, 27", orbit_counts},
                           {3, "invariant table goldens", table_goldens},
                           {4, "Morita class counts", classification_counts},
                           {5, "universal coefficients cross-check", universal_coefficients},
                           {6, "property suites", property_suites}};
  int failed = 0;
  for (auto& c : all) {
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    std::cout << (v.ok ? "PASS " : "FAIL ") << c.id << ": " << c.title << '\n';
    for (auto& n : v.notes) std::cout << "    " << n << '\n';
    std::cout.flush();
    failed += !v.ok;
  }
  std::cout << (6 - failed) << "/6 criteria pass\n";
  return failed ? 1 : 0;
}
