#include <random>

#include "doctest.h"
#include "fusion/cyclotomic.hpp"

using namespace fusion;

namespace {

using C = Cyclotomic;

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9; }

C random_element(std::mt19937_64& rng, std::int64_t n) {
  std::vector<std::int64_t> e(static_cast<std::size_t>(n));
  for (auto& x : e) x = std::int64_t(rng() % 7) - 3;
  return C::from_exponents(n, e, std::int64_t(rng() % 3) + 1);
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  // Φ_105 is the first with a coefficient -2
  auto& p = cyclotomic_polynomial(105);
  CHECK(p.size() == 49);
  CHECK(std::find(p.begin(), p.end(), -2) != p.end());
  for (std::int64_t n : {1, 2, 7, 8, 9, 12, 27, 30, 105}) CHECK(std::int64_t(cyclotomic_polynomial(n).size()) - 1 == euler_phi(n));
}

TEST_CASE("roots of unity and minimal conductor") {
  CHECK(C::zeta(1) == C(1));
  CHECK(C::zeta(2) == C(-1));
  CHECK(C::zeta(4).pow(2) == C(-1));
  CHECK(C::zeta(6).conductor() == 3);  // Q(ζ_6) = Q(ζ_3)
  CHECK(C::zeta(6) == -C::zeta(3, 2));
  CHECK(C::zeta(8, 2) == C::zeta(4));
  CHECK(C::zeta(12, 4) == C::zeta(3));
  CHECK((C::zeta(3) + C::zeta(3, 2)) == C(-1));
  // sqrt(2) = ζ_8 + ζ_8^7 lives in Q(ζ_8), sqrt(-3) in Q(ζ_3), i*sqrt(3)... ζ_12 + ζ_12^11 = sqrt(3)
  C s2 = C::zeta(8) + C::zeta(8, 7);
  CHECK(s2 * s2 == C(2));
  CHECK(s2.conductor() == 8);
  C s3 = C::zeta(12) + C::zeta(12, 11);
  CHECK(s3 * s3 == C(3));
  CHECK(s3.conductor() == 12);
  C r = C::zeta(3) - C::zeta(3, 2);  // sqrt(-3)
  CHECK(r * r == C(-3));
  CHECK(r.conductor() == 3);
  // Gauss period of Q(ζ_15) that lies in Q(sqrt 5)
  C g = C::zeta(15, 3) + C::zeta(15, 12);
  CHECK(g.conductor() == 5);
  // a sum over all primitive 15th roots is μ(15) = 1
  C sum;
  for (int k = 1; k < 15; ++k)
    if (std::gcd(k, 15) == 1) sum += C::zeta(15, k);
  CHECK(sum == C(1));
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(3);
  for (std::int64_t n : {1, 3, 4, 5, 8, 9, 12, 15, 16, 24, 27}) {
    for (int t = 0; t < 6; ++t) {
      C a = random_element(rng, n), b = random_element(rng, n), c = random_element(rng, 2 * n);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) * c == a * c + b * c);
      CHECK(a - a == C(0));
      CHECK(close((a * b).approx(), a.approx() * b.approx()));
      CHECK(close((a + c).approx(), a.approx() + c.approx()));
      CHECK(a.conj().conj() == a);
      CHECK(close(a.conj().approx(), std::conj(a.approx())));
      if (!a.is_zero()) CHECK(a * a.inverse() == C(1));
      CHECK(C::parse(a.str()) == a);
    }
  }
}

TEST_CASE("serialization") {
  CHECK(C(0).str() == "1:");
  CHECK(C(1).str() == "1:0=1/1");
  CHECK(C::rational(-6, 4).str() == "1:0=-3/2");
  CHECK(C::zeta(4).str() == "4:1=1/1");
  CHECK(C::zeta(3, 2).str() == "3:0=-1/1,1=-1/1");
  CHECK((C::zeta(8) / C(2)).str() == "8:1=1/2");
  CHECK(C::parse("6:1=1/1") == C::zeta(6));  // non-canonical input is canonicalized
  CHECK(C::parse("1:") == C(0));
  CHECK_THROWS_AS(C::parse("x"), InvalidArgument);
  CHECK_THROWS_AS(C::parse("4:1=1/0"), InvalidArgument);
  CHECK_THROWS_AS(C::parse("4:7=1/1"), InvalidArgument);
}

TEST_CASE("root of unity detection") {
  auto r = C::zeta(12, 5).root_of_unity();
  REQUIRE(r);
  CHECK(*r == std::make_pair<std::int64_t, std::int64_t>(12, 5));
  CHECK(C(-1).root_of_unity() == std::make_pair<std::int64_t, std::int64_t>(2, 1));
  CHECK(C(1).root_of_unity() == std::make_pair<std::int64_t, std::int64_t>(1, 0));
  CHECK_FALSE(C(2).root_of_unity());
  CHECK_FALSE((C::zeta(8) + C(1)).root_of_unity());
  CHECK_FALSE(C::rational(1, 2).root_of_unity());
}

TEST_CASE("accumulated sums") {
  CycloSum s(12);
  for (int k = 0; k < 12; ++k) s.add_root(k);
  CHECK(s.value() == C(0));
  CycloSum t(8);
  t.add_shifted(integer_exponents(C::zeta(4), 8), 1);  // ζ_8 ζ_4 = ζ_8^3
  t.add_root(-1, 2);
  CHECK(t.value(2) == C::zeta(8, 3) / C(2) + C::zeta(8, 7));
  CHECK_THROWS_AS(integer_exponents(C::rational(1, 2), 4), IntegralityViolation);
}
