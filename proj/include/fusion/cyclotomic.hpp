#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fusion/zlinalg.hpp"

namespace fusion {

// Exact element of Q(ζ_N). Stored at the smallest conductor N (never 2 mod 4)
// as coefficients over the power basis 1, ζ_N, ..., ζ_N^{φ(N)-1} with a common
// positive denominator, so equal values have equal representations.
class Cyclotomic {
public:
  Cyclotomic() : num_{}, den_(1) {}
  Cyclotomic(std::int64_t n);  // NOLINT: integers convert implicitly
  static Cyclotomic rational(const BigInt& p, const BigInt& q);
  static Cyclotomic zeta(std::int64_t n, std::int64_t k = 1);  // ζ_n^k, ζ_n = exp(2πi/n)
  // Σ_k coeffs[k] ζ_n^k / den, coeffs of length n (any exponents, unreduced)
  static Cyclotomic from_exponents(std::int64_t n, const std::vector<BigInt>& coeffs, const BigInt& den = 1);
  static Cyclotomic from_exponents(std::int64_t n, const std::vector<std::int64_t>& coeffs, std::int64_t den = 1);

  std::int64_t conductor() const { return n_; }
  const std::vector<BigInt>& numerators() const { return num_; }  // power basis, length φ(N)
  const BigInt& denominator() const { return den_; }
  bool is_zero() const;
  bool is_rational() const { return n_ == 1; }
  bool is_integer() const { return n_ == 1 && den_ == 1; }
  bool is_algebraic_integer() const { return den_ == 1; }  // the power basis is an integral basis
  std::optional<BigInt> to_integer() const;
  // Some (n, k) with value ζ_n^k, n minimal; nullopt when not a root of unity.
  std::optional<std::pair<std::int64_t, std::int64_t>> root_of_unity() const;

  Cyclotomic operator-() const;
  Cyclotomic conj() const;
  Cyclotomic galois(std::int64_t a) const;  // ζ -> ζ^a, gcd(a, N) = 1
  Cyclotomic pow(long e) const;             // e >= 0, or any e for a root of unity
  Cyclotomic inverse() const;

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.n_ == b.n_ && a.den_ == b.den_ && a.num_ == b.num_;
  }

  // "N:k1=p1/q1,k2=p2/q2,..." over the power basis; zero is "1:".
  std::string str() const;
  static Cyclotomic parse(const std::string& s);
  std::complex<double> approx() const;

  // Exponent vector of length `level` (a multiple of the conductor) with the
  // same value divided by the denominator; used by accumulators.
  std::vector<BigInt> exponents_at(std::int64_t level) const;

private:
  std::int64_t n_ = 1;
  std::vector<BigInt> num_;  // empty means zero
  BigInt den_;
  static Cyclotomic canonical(std::int64_t n, std::vector<BigInt> power_coeffs, BigInt den);
  friend class CycloSum;
};

// (exponent, coefficient) pairs of an algebraic integer at some level
using SparseExps = std::vector<std::pair<std::int64_t, std::int64_t>>;

// Integer combinations Σ c_k ζ_L^k built term by term, converted once.
class CycloSum {
public:
  explicit CycloSum(std::int64_t level) : level_(level), acc_(std::size_t(level), 0) {}
  std::int64_t level() const { return level_; }
  void add_root(std::int64_t k, std::int64_t c = 1);  // c ζ_L^k
  // ζ_L^shift times a precomputed exponent vector at this level
  void add_shifted(const SparseExps& exps, std::int64_t shift);
  Cyclotomic value(std::int64_t den = 1) const;

private:
  std::int64_t level_;
  std::vector<std::int64_t> acc_;
};

// Exponents of an algebraic integer at `level` (a multiple of its conductor);
// throws IntegralityViolation when a denominator remains.
SparseExps integer_exponents(const Cyclotomic& x, std::int64_t level);

std::int64_t euler_phi(std::int64_t n);
// Coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t n);

bool operator<(const Cyclotomic& a, const Cyclotomic& b);  // by serialization

}  // namespace fusion
