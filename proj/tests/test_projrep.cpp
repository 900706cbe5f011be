#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "fusion/errors.hpp"
#include "fusion/projrep.hpp"

using namespace fusion;

namespace {

Cyclotomic inner(const CharacterTable& t, std::size_t a, std::size_t b) {
  Cyclotomic s;
  for (std::size_t j = 0; j < t.classes.size(); ++j)
    s += Cyclotomic(std::int64_t(t.classes[j].members.size())) * t.values[a][j] * t.values[b][j].conj();
  return s;
}

Cyclotomic inner(const FiniteGroup& g, const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) {
  Cyclotomic s;
  for (int x = 0; x < g.order(); ++x) s += a[std::size_t(x)] * b[std::size_t(x)].conj();
  return s;
}

// g is α-regular when α(g,h) = α(h,g) for every h commuting with g; the
// number of α-regular conjugacy classes counts the irreducibles.
int regular_classes(const TwoCocycle& a) {
  int count = 0;
  for (auto& c : conjugacy_classes(a.group)) {
    const int g = c.representative;
    bool ok = true;
    for (int h = 0; h < a.group.order() && ok; ++h)
      if (a.group.commute(g, h)) ok = mod_norm(a(g, h) - a(h, g), a.modulus) == 0;
    count += ok;
  }
  return count;
}

std::multiset<std::string> keys(const std::vector<ProjectiveCharacter>& cs) {
  std::multiset<std::string> out;
  for (auto& c : cs) {
    std::string k;
    for (auto& v : c.values) k += v.str() + ';';
    out.insert(k);
  }
  return out;
}

// α(g,h) = Σ over a bilinear form on an elementary abelian 2-group given as
// bit vectors (catalog Z2^k elements are not bit vectors, so build our own).
FiniteGroup elementary2(int k) {
  const int n = 1 << k;
  std::vector<int> t(std::size_t(n) * std::size_t(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[std::size_t(a) * std::size_t(n) + std::size_t(b)] = a ^ b;
  return FiniteGroup(n, t);
}

TwoCocycle random_coboundary_shift(TwoCocycle a, std::mt19937& rng) {
  const int n = a.group.order();
  std::vector<std::int64_t> b(std::size_t(n), 0);
  for (int g = 1; g < n; ++g) b[std::size_t(g)] = std::int64_t(rng() % std::uint64_t(a.modulus));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      auto& v = a.values[std::size_t(g) * std::size_t(n) + std::size_t(h)];
      v = mod_norm(v + b[std::size_t(g)] + b[std::size_t(h)] - b[std::size_t(a.group.mul(g, h))], a.modulus);
    }
  return a;
}

}  // namespace

TEST_CASE("character tables of small groups") {
  SUBCASE("S3") {
    auto t = character_table(catalog_group(6, 1));
    CHECK(t->dims == std::vector<int>{1, 1, 2});
  }
  SUBCASE("Q8 and D8") {
    for (int idx : {3, 4}) {
      auto t = character_table(catalog_group(8, idx));
      CHECK(t->dims == std::vector<int>{1, 1, 1, 1, 2});
      // the degree-2 character is 2, -2, 0, 0, 0 on the classes
      int zeros = 0, minus2 = 0;
      for (auto& v : t->values[4]) zeros += v.is_zero(), minus2 += v == Cyclotomic(-2);
      CHECK(zeros == 3);
      CHECK(minus2 == 1);
    }
  }
  SUBCASE("cyclic") {
    auto t = character_table(cyclic_group(5));
    CHECK(t->values.size() == 5);
    std::set<std::string> at1;
    for (std::size_t c = 0; c < 5; ++c) at1.insert(t->at(c, 1).str());
    CHECK(at1.size() == 5);
  }
}

TEST_CASE("orthogonality for every catalog group up to order 24") {
  for (int order = 1; order <= 24; ++order)
    for (int idx = 1; idx <= catalog_count(order); ++idx) {
      CAPTURE(order);
      CAPTURE(idx);
      FiniteGroup g = order == 1 ? FiniteGroup() : catalog_group(order, idx);
      auto t = character_table(g);
      REQUIRE(t->values.size() == t->classes.size());
      int sq = 0;
      for (int d : t->dims) sq += d * d;
      CHECK(sq == order);
      for (std::size_t a = 0; a < t->values.size(); ++a) {
        CHECK(t->values[a][0] == Cyclotomic(t->dims[a]));
        for (std::size_t b = a; b < t->values.size(); ++b)
          CHECK(inner(*t, a, b) == Cyclotomic(a == b ? order : 0));
        for (auto& v : t->values[a]) CHECK(v.is_algebraic_integer());
      }
    }
}

TEST_CASE("character tables of order 27 and some of order 16") {
  for (int idx = 1; idx <= catalog_count(27); ++idx) {
    auto t = character_table(catalog_group(27, idx));
    int sq = 0;
    for (int d : t->dims) sq += d * d;
    CHECK(sq == 27);
    for (std::size_t a = 0; a < t->values.size(); ++a) CHECK(inner(*t, a, a) == Cyclotomic(27));
  }
  for (int idx = 1; idx <= catalog_count(16); ++idx) {
    auto t = character_table(catalog_group(16, idx));
    for (std::size_t a = 0; a + 1 < t->values.size(); ++a) CHECK(inner(*t, a, a + 1).is_zero());
  }
}

TEST_CASE("central extension") {
  FiniteGroup z2 = cyclic_group(2);
  TwoCocycle a = zero_cocycle(z2, 2);
  a.values[3] = 1;  // α(1,1) = 1
  CHECK(a.is_cocycle());
  auto e = central_extension(a);
  CHECK(e.ext.order() == 4);
  CHECK(e.ext.is_abelian());
  CHECK(e.ext.exponent() == 4);
  CHECK(e.project.is_homomorphism());
  for (int z = 0; z < 2; ++z) CHECK(e.project(e.embed[std::size_t(z)]) == 0);
  CHECK_THROWS_AS(central_extension(zero_cocycle(catalog_group(16, 1), 64)), ClosureBound);
}

TEST_CASE("projective characters of Z2 twisted by a coboundary") {
  TwoCocycle a = zero_cocycle(cyclic_group(2), 2);
  a.values[3] = 1;
  for (auto route : {0, 1}) {
    auto cs = route ? tautological_characters(a) : alpha_projective_characters(a);
    REQUIRE(cs.size() == 2);
    std::set<std::string> at1;
    for (auto& c : cs) {
      CHECK(c.dim == 1);
      CHECK(c.values[0] == Cyclotomic(1));
      // ρ(1)^2 = -1
      CHECK(c.values[1] * c.values[1] == Cyclotomic(-1));
      at1.insert(c.values[1].str());
    }
    CHECK(at1 == std::set<std::string>{Cyclotomic::zeta(4, 1).str(), Cyclotomic::zeta(4, 3).str()});
  }
  // gauge reduction lands on the trivial cocycle
  CHECK(alpha_projective_characters(a)[0].extension.modulus == 1);
}

TEST_CASE("nondegenerate cocycle on Z2^2 has a single character of degree 2") {
  FiniteGroup v = elementary2(2);
  TwoCocycle a = zero_cocycle(v, 2);
  for (int g = 0; g < 4; ++g)
    for (int h = 0; h < 4; ++h) a.values[std::size_t(g * 4 + h)] = ((g & 1) * ((h >> 1) & 1)) % 2;
  REQUIRE(a.is_cocycle());
  auto cs = alpha_projective_characters(a);
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].dim == 2);
  CHECK(cs[0].values[0] == Cyclotomic(2));
  for (int g = 1; g < 4; ++g) CHECK(cs[0].values[std::size_t(g)].is_zero());
  CHECK(cs[0].extension.ext.order() == 8);
  CHECK(!cs[0].extension.ext.is_abelian());
}

TEST_CASE("gauge route agrees with the extension route") {
  std::mt19937 rng(11);
  struct Case { int order, index; };
  for (auto cs : {Case{4, 1}, Case{8, 2}, Case{8, 3}, Case{8, 5}, Case{9, 1}, Case{6, 1}, Case{12, 2}}) {
    CAPTURE(cs.order);
    CAPTURE(cs.index);
    auto h2 = catalog_cohomology(cs.order, cs.index, 2);
    // every class, shifted by a random coboundary
    std::vector<std::int64_t> e(h2->factors.size(), 0);
    bool more = true;
    while (more) {
      Cochain w = h2->realize(e);
      TwoCocycle a = zero_cocycle(h2->group, h2->modulus);
      const int n = h2->group.order();
      for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
          int t[2] = {g, h};
          a.values[std::size_t(g * n + h)] = mod_norm(cochain_at(w, n, t, 2), a.modulus);
        }
      a = random_coboundary_shift(a, rng);
      REQUIRE(a.is_cocycle());
      auto fast = alpha_projective_characters(a);
      if (std::int64_t(n) * a.modulus <= kExtensionBound) CHECK(keys(fast) == keys(tautological_characters(a)));
      CHECK(int(fast.size()) == regular_classes(a));
      int sq = 0;
      for (auto& c : fast) sq += c.dim * c.dim;
      CHECK(sq == n);
      for (std::size_t i = 0; i < fast.size(); ++i)
        for (std::size_t j = i; j < fast.size(); ++j)
          CHECK(inner(h2->group, fast[i].values, fast[j].values) == Cyclotomic(i == j ? n : 0));
      more = false;
      for (std::size_t i = 0; i < e.size() && !more; ++i) {
        if (++e[i] < h2->factors[i]) more = true;
        else e[i] = 0;
      }
    }
  }
}

TEST_CASE("alpha_g restricted to the centralizer is a 2-cocycle") {
  for (int idx = 1; idx <= catalog_count(8); ++idx) {
    auto h3 = catalog_cohomology(8, idx, 3);
    std::vector<std::int64_t> e(h3->factors.size(), 1);
    CocycleClass c = make_class(h3, e);
    DenseCocycle w = dense_cocycle(c);
    for (int g = 0; g < 8; ++g) {
      auto [cg, incl] = subgroup_as_group(centralizer(w.group, g));
      CHECK(restrict_cocycle(two_cocycle_alpha_g(w, g), incl).is_cocycle());
      if (w.group.is_abelian()) {
        CHECK(two_cocycle_alpha_g(w, g).is_normalized());
      }
    }
  }
}
