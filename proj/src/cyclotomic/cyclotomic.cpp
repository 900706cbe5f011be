#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "fusion/cyclotomic.hpp"

namespace fusion {
namespace {

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> ps;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t m) {
  std::int64_t x, y;
  detail::ext_gcd(((a % m) + m) % m, m, x, y);
  return ((x % m) + m) % m;
}

// Per-level data: Φ_N and the power-basis image of every ζ_N^k.
struct Level {
  std::int64_t n, phi;
  std::vector<std::int64_t> poly;
  std::vector<std::vector<std::int64_t>> red;  // red[k], length phi
};

std::mutex level_mu;
std::map<std::int64_t, std::vector<std::int64_t>> poly_cache;
std::map<std::int64_t, std::unique_ptr<Level>> level_cache;

// exact quotient of a by the monic b, coefficients constant term first
std::vector<std::int64_t> divide_monic(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b) {
  const std::size_t db = b.size() - 1;
  std::vector<std::int64_t> q(a.size() - db, 0);
  for (std::size_t i = a.size() - 1;; --i) {
    const std::int64_t c = a[i];
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    if (i == db) break;
  }
  return q;
}

// caller holds level_mu
const std::vector<std::int64_t>& poly_locked(std::int64_t n) {
  auto it = poly_cache.find(n);
  if (it != poly_cache.end()) return it->second;
  std::vector<std::int64_t> p(std::size_t(n) + 1, 0);
  p[0] = -1;
  p[std::size_t(n)] = 1;
  for (std::int64_t d = 1; d < n; ++d)
    if (n % d == 0) p = divide_monic(p, poly_locked(d));
  return poly_cache.emplace(n, std::move(p)).first->second;
}

const Level& level(std::int64_t n) {
  std::lock_guard<std::mutex> lock(level_mu);
  auto it = level_cache.find(n);
  if (it != level_cache.end()) return *it->second;
  auto L = std::make_unique<Level>();
  L->n = n;
  L->poly = poly_locked(n);
  L->phi = std::int64_t(L->poly.size()) - 1;
  const auto phi = std::size_t(L->phi);
  std::vector<std::int64_t> cur(phi, 0);
  cur[0] = 1;
  for (std::int64_t k = 0; k < n; ++k) {
    L->red.push_back(cur);
    // multiply by x, then replace x^phi using the monic Φ_n
    const std::int64_t top = cur[phi - 1];
    for (std::size_t i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (std::size_t i = 0; i < phi; ++i) cur[i] -= top * L->poly[i];
  }
  auto& ref = *L;
  level_cache.emplace(n, std::move(L));
  return ref;
}

std::vector<BigInt> reduce(std::int64_t n, const std::vector<BigInt>& exps) {
  const auto& L = level(n);
  std::vector<BigInt> out(std::size_t(L.phi), 0);
  for (std::size_t k = 0; k < exps.size(); ++k) {
    if (exps[k] == 0) continue;
    const auto& r = L.red[k % std::size_t(n)];
    for (std::size_t i = 0; i < r.size(); ++i)
      if (r[i]) out[i] += exps[k] * r[i];
  }
  return out;
}

bool all_zero(const std::vector<BigInt>& v) {
  for (auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t r = n;
  for (auto p : prime_factors(n)) r = r / p * (p - 1);
  return r;
}

const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t n) {
  if (n < 1) throw InvalidArgument("cyclotomic polynomial of a non-positive index");
  return level(n).poly;
}

Cyclotomic Cyclotomic::canonical(std::int64_t n, std::vector<BigInt> c, BigInt den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  if (all_zero(c)) return Cyclotomic();
  bool moved = true;
  while (moved && n > 1) {
    moved = false;
    for (auto p : prime_factors(n)) {
      if (n % (p * p) == 0) {
        bool ok = true;
        for (std::size_t j = 0; j < c.size() && ok; ++j) ok = c[j] == 0 || std::int64_t(j) % p == 0;
        if (!ok) continue;
        std::vector<BigInt> d(c.size() / std::size_t(p));
        for (std::size_t j = 0; j < d.size(); ++j) d[j] = c[j * std::size_t(p)];
        c = std::move(d);
        n /= p;
      } else {
        // ζ_n^j = ζ_d^s ζ_p^t with j ≡ p s + d t; x lies in Q(ζ_d) iff the
        // ζ_p-components A_t - A_0 agree for t = 1..p-1, and then x = A_0 - A_1
        const std::int64_t d = n / p;
        const std::int64_t ip = d > 1 ? inv_mod(p, d) : 0, id = inv_mod(d, p);
        std::vector<std::vector<BigInt>> A(std::size_t(p), std::vector<BigInt>(std::size_t(d), 0));
        for (std::size_t j = 0; j < c.size(); ++j) {
          if (c[j] == 0) continue;
          std::int64_t s = d > 1 ? std::int64_t(j) % d * ip % d : 0, t = std::int64_t(j) % p * id % p;
          A[std::size_t(t)][std::size_t(s)] += c[j];
        }
        std::vector<std::vector<BigInt>> R;
        for (auto& a : A) R.push_back(reduce(d, a));
        bool ok = true;
        std::vector<BigInt> diff(R[0].size());
        for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = R[1][i] - R[0][i];
        for (std::size_t t = 2; t < R.size() && ok; ++t)
          for (std::size_t i = 0; i < diff.size() && ok; ++i) ok = R[t][i] - R[0][i] == diff[i];
        if (!ok) continue;
        for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = -diff[i];
        c = std::move(diff);
        n = d;
      }
      moved = true;
      break;
    }
  }
  if (den < 0) {
    den = -den;
    for (auto& x : c) x = -x;
  }
  BigInt g = den;
  for (auto& x : c)
    if (x != 0) g = boost::multiprecision::gcd(g, x);
  if (g != 1) {
    den /= g;
    for (auto& x : c) x /= g;
  }
  Cyclotomic r;
  r.n_ = n;
  r.num_ = std::move(c);
  r.den_ = std::move(den);
  if (all_zero(r.num_)) return Cyclotomic();
  return r;
}

Cyclotomic::Cyclotomic(std::int64_t n) : num_{}, den_(1) {
  if (n != 0) num_ = {BigInt(n)};
}

Cyclotomic Cyclotomic::rational(const BigInt& p, const BigInt& q) { return canonical(1, {p}, q); }

Cyclotomic Cyclotomic::zeta(std::int64_t n, std::int64_t k) {
  if (n < 1) throw InvalidArgument("root of unity of non-positive order");
  std::vector<BigInt> e(std::size_t(n), 0);
  e[std::size_t(((k % n) + n) % n)] = 1;
  return from_exponents(n, e);
}

Cyclotomic Cyclotomic::from_exponents(std::int64_t n, const std::vector<BigInt>& coeffs, const BigInt& den) {
  return canonical(n, reduce(n, coeffs), den);
}

Cyclotomic Cyclotomic::from_exponents(std::int64_t n, const std::vector<std::int64_t>& coeffs, std::int64_t den) {
  std::vector<BigInt> c(coeffs.begin(), coeffs.end());
  return from_exponents(n, c, BigInt(den));
}

bool Cyclotomic::is_zero() const { return num_.empty(); }

std::optional<BigInt> Cyclotomic::to_integer() const {
  if (is_zero()) return BigInt(0);
  if (!is_integer()) return std::nullopt;
  return num_[0];
}

std::vector<BigInt> Cyclotomic::exponents_at(std::int64_t lvl) const {
  if (lvl % n_) throw InvalidArgument("level is not a multiple of the conductor");
  std::vector<BigInt> e(std::size_t(lvl), 0);
  const std::int64_t step = lvl / n_;
  for (std::size_t j = 0; j < num_.size(); ++j) e[std::size_t(std::int64_t(j) * step)] = num_[j];
  return e;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& x : r.num_) x = -x;
  return r;
}

Cyclotomic Cyclotomic::galois(std::int64_t a) const {
  if (is_zero() || n_ == 1) return *this;
  a = ((a % n_) + n_) % n_;
  if (std::gcd(a, n_) != 1) throw InvalidArgument("galois: exponent not a unit");
  std::vector<BigInt> e(std::size_t(n_), 0);
  for (std::size_t j = 0; j < num_.size(); ++j) e[std::size_t(std::int64_t(j) * a % n_)] += num_[j];
  return from_exponents(n_, e, den_);
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const std::int64_t L = std::lcm(a.n_, b.n_);
  auto ea = a.exponents_at(L), eb = b.exponents_at(L);
  for (std::size_t i = 0; i < ea.size(); ++i) ea[i] = ea[i] * b.den_ + eb[i] * a.den_;
  return Cyclotomic::from_exponents(L, ea, a.den_ * b.den_);
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.is_zero() || b.is_zero()) return Cyclotomic();
  const std::int64_t L = std::lcm(a.n_, b.n_);
  const std::int64_t sa = L / a.n_, sb = L / b.n_;
  std::vector<BigInt> e(std::size_t(L), 0);
  for (std::size_t i = 0; i < a.num_.size(); ++i) {
    if (a.num_[i] == 0) continue;
    for (std::size_t j = 0; j < b.num_.size(); ++j)
      if (b.num_[j] != 0) e[std::size_t((std::int64_t(i) * sa + std::int64_t(j) * sb) % L)] += a.num_[i] * b.num_[j];
  }
  return Cyclotomic::from_exponents(L, e, a.den_ * b.den_);
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw InvalidArgument("division by zero");
  if (n_ == 1) return rational(den_, num_[0]);
  // x^{-1} = Π_{σ ≠ 1} σ(x) / N(x)
  Cyclotomic others = 1;
  for (std::int64_t a = 2; a < n_; ++a)
    if (std::gcd(a, n_) == 1) others *= galois(a);
  Cyclotomic norm = others * *this;
  if (norm.n_ != 1) throw IntegralityViolation("norm is not rational");
  return others * rational(norm.den_, norm.num_[0]);
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic r = 1, base = *this;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

std::optional<std::pair<std::int64_t, std::int64_t>> Cyclotomic::root_of_unity() const {
  if (is_zero() || den_ != 1) return std::nullopt;
  const std::int64_t K = std::lcm<std::int64_t>(2, n_);
  const auto z = approx();
  if (std::abs(std::abs(z) - 1.0) > 1e-6) return std::nullopt;
  const double turn = std::arg(z) / (2 * M_PI);
  std::int64_t k = std::llround(turn * double(K));
  k = ((k % K) + K) % K;
  if (!(zeta(K, k) == *this)) return std::nullopt;
  const std::int64_t g = std::gcd(k, K);
  return std::make_pair(K / g, k / g);
}

std::complex<double> Cyclotomic::approx() const {
  std::complex<double> s = 0;
  const double d = den_.convert_to<double>();
  for (std::size_t j = 0; j < num_.size(); ++j)
    if (num_[j] != 0) s += num_[j].convert_to<double>() / d * std::polar(1.0, 2 * M_PI * double(j) / double(n_));
  return s;
}

std::string Cyclotomic::str() const {
  std::ostringstream os;
  os << n_ << ':';
  bool first = true;
  for (std::size_t j = 0; j < num_.size(); ++j) {
    if (num_[j] == 0) continue;
    BigInt g = boost::multiprecision::gcd(num_[j], den_);
    if (!first) os << ',';
    first = false;
    os << j << '=' << num_[j] / g << '/' << den_ / g;
  }
  return os.str();
}

Cyclotomic Cyclotomic::parse(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw InvalidArgument("cyclotomic '" + s + "' lacks a conductor");
  std::int64_t n;
  try {
    n = std::stoll(s.substr(0, colon));
  } catch (const std::exception&) {
    throw InvalidArgument("bad conductor in '" + s + "'");
  }
  if (n < 1) throw InvalidArgument("bad conductor in '" + s + "'");
  std::vector<BigInt> nums(std::size_t(n), 0), dens(std::size_t(n), 1);
  std::stringstream ss(s.substr(colon + 1));
  std::string term;
  while (std::getline(ss, term, ',')) {
    auto eq = term.find('='), sl = term.find('/');
    if (eq == std::string::npos || sl == std::string::npos || sl < eq)
      throw InvalidArgument("bad term '" + term + "'");
    auto k = std::stoll(term.substr(0, eq));
    if (k < 0 || k >= n) throw InvalidArgument("exponent out of range in '" + term + "'");
    BigInt p(term.substr(eq + 1, sl - eq - 1)), q(term.substr(sl + 1));
    if (q == 0) throw InvalidArgument("zero denominator in '" + term + "'");
    nums[std::size_t(k)] = p;
    dens[std::size_t(k)] = q;
  }
  BigInt den = 1;
  for (auto& q : dens) den = boost::multiprecision::lcm(den, q);
  for (std::size_t k = 0; k < nums.size(); ++k) nums[k] = nums[k] * (den / dens[k]);
  return from_exponents(n, nums, den);
}

bool operator<(const Cyclotomic& a, const Cyclotomic& b) { return a.str() < b.str(); }

SparseExps integer_exponents(const Cyclotomic& x, std::int64_t lvl) {
  if (x.denominator() != 1) throw IntegralityViolation("not an algebraic integer: " + x.str());
  if (lvl % x.conductor()) throw InvalidArgument("level is not a multiple of the conductor");
  SparseExps out;
  const std::int64_t step = lvl / x.conductor();
  const auto& num = x.numerators();
  for (std::size_t j = 0; j < num.size(); ++j)
    if (num[j] != 0) out.emplace_back(std::int64_t(j) * step, num[j].convert_to<std::int64_t>());
  return out;
}

void CycloSum::add_root(std::int64_t k, std::int64_t c) {
  auto& slot = acc_[std::size_t(((k % level_) + level_) % level_)];
  slot = detail::add(slot, c);
}

void CycloSum::add_shifted(const SparseExps& exps, std::int64_t shift) {
  shift = ((shift % level_) + level_) % level_;
  for (auto& [e, c] : exps) {
    auto& slot = acc_[std::size_t((e + shift) % level_)];
    slot = detail::add(slot, c);
  }
}

Cyclotomic CycloSum::value(std::int64_t den) const { return Cyclotomic::from_exponents(level_, acc_, den); }

}  // namespace fusion
