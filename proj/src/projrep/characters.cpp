#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <random>

#include "fusion/modular.hpp"
#include "fusion/projrep.hpp"

namespace fusion {
namespace {

using Vec64 = std::vector<std::int64_t>;

// Dense r x c matrices over F_p, row-major.
struct FpMat {
  int rows = 0, cols = 0;
  Vec64 a;
  FpMat() = default;
  FpMat(int r, int c) : rows(r), cols(c), a(std::size_t(r) * std::size_t(c), 0) {}
  std::int64_t& operator()(int i, int j) { return a[std::size_t(i) * std::size_t(cols) + std::size_t(j)]; }
  std::int64_t operator()(int i, int j) const { return a[std::size_t(i) * std::size_t(cols) + std::size_t(j)]; }
};

FpMat multiply(const FpMat& x, const FpMat& y, std::int64_t p) {
  FpMat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const std::int64_t v = x(i, k);
      if (!v) continue;
      for (int j = 0; j < y.cols; ++j) r(i, j) = (r(i, j) + v * y(k, j)) % p;
    }
  return r;
}

// Null space basis (columns) of a square or rectangular matrix.
FpMat kernel(FpMat m, std::int64_t p) {
  std::vector<int> pivcol;
  int row = 0;
  for (int c = 0; c < m.cols && row < m.rows; ++c) {
    int piv = -1;
    for (int i = row; i < m.rows; ++i)
      if (m(i, c)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < m.cols; ++j) std::swap(m(row, j), m(piv, j));
    const std::int64_t inv = invmod(m(row, c), p);
    for (int j = 0; j < m.cols; ++j) m(row, j) = m(row, j) * inv % p;
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || !m(i, c)) continue;
      const std::int64_t f = m(i, c);
      for (int j = 0; j < m.cols; ++j) m(i, j) = mod_norm(m(i, j) - f * m(row, j), p);
    }
    pivcol.push_back(c);
    ++row;
  }
  std::vector<char> is_piv(std::size_t(m.cols), 0);
  for (int c : pivcol) is_piv[std::size_t(c)] = 1;
  std::vector<int> free;
  for (int c = 0; c < m.cols; ++c)
    if (!is_piv[std::size_t(c)]) free.push_back(c);
  FpMat k(m.cols, int(free.size()));
  for (std::size_t f = 0; f < free.size(); ++f) {
    k(free[f], int(f)) = 1;
    for (std::size_t i = 0; i < pivcol.size(); ++i) k(pivcol[i], int(f)) = mod_norm(-m(int(i), free[f]), p);
  }
  return k;
}

// Characteristic polynomial via reduction to Hessenberg form (any field).
Vec64 charpoly(FpMat h, std::int64_t p) {
  const int n = h.rows;
  for (int m = 1; m < n - 1; ++m) {
    int piv = -1;
    for (int i = m; i < n; ++i)
      if (h(i, m - 1)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != m) {
      for (int j = 0; j < n; ++j) std::swap(h(piv, j), h(m, j));
      for (int i = 0; i < n; ++i) std::swap(h(i, piv), h(i, m));
    }
    const std::int64_t inv = invmod(h(m, m - 1), p);
    for (int i = m + 1; i < n; ++i) {
      const std::int64_t f = h(i, m - 1) * inv % p;
      if (!f) continue;
      for (int j = 0; j < n; ++j) h(i, j) = mod_norm(h(i, j) - f * h(m, j), p);
      for (int j = 0; j < n; ++j) h(j, m) = (h(j, m) + f * h(j, i)) % p;
    }
  }
  // c_k = char poly of the leading k x k block, constant term first
  std::vector<Vec64> c(std::size_t(n) + 1);
  c[0] = {1};
  for (int k = 1; k <= n; ++k) {
    Vec64 next(static_cast<std::size_t>(k) + 1, 0);
    // (x - h_kk) c_{k-1}
    for (std::size_t i = 0; i < c[std::size_t(k - 1)].size(); ++i) {
      next[i + 1] = (next[i + 1] + c[std::size_t(k - 1)][i]) % p;
      next[i] = mod_norm(next[i] - h(k - 1, k - 1) * c[std::size_t(k - 1)][i], p);
    }
    std::int64_t prod = 1;
    for (int i = k - 1; i >= 1; --i) {
      prod = prod * h(i, i - 1) % p;
      if (!prod) break;
      const std::int64_t f = prod * h(i - 1, k - 1) % p;
      for (std::size_t j = 0; j < c[std::size_t(i - 1)].size(); ++j)
        next[j] = mod_norm(next[j] - f * c[std::size_t(i - 1)][j], p);
    }
    c[std::size_t(k)] = std::move(next);
  }
  return c[std::size_t(n)];
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

std::int64_t primitive_root(std::int64_t p) {
  std::vector<std::int64_t> qs;
  std::int64_t t = p - 1;
  for (std::int64_t q = 2; q * q <= t; ++q)
    if (t % q == 0) {
      qs.push_back(q);
      while (t % q == 0) t /= q;
    }
  if (t > 1) qs.push_back(t);
  for (std::int64_t g = 2;; ++g) {
    bool ok = true;
    for (auto q : qs) ok = ok && powmod(g, (p - 1) / q, p) != 1;
    if (ok) return g;
  }
}

CharacterTable abelian_table(const FiniteGroup& g, CharacterTable t) {
  const int n = g.order();
  const std::int64_t e = g.exponent();
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  in[0] = 1;
  std::vector<int> elems{0};
  std::vector<Vec64> chars{Vec64(std::size_t(n), 0)};
  for (int x = 1; x < n; ++x) {
    if (in[std::size_t(x)]) continue;
    int t_ord = 1, xt = x;
    while (!in[std::size_t(xt)]) xt = g.mul(xt, x), ++t_ord;
    std::vector<Vec64> next;
    for (auto& chi : chars) {
      const std::int64_t a = chi[std::size_t(xt)];
      for (std::int64_t j = 0; j < t_ord; ++j) {
        const std::int64_t num = a + e * j;
        if (num % t_ord) throw IntegralityViolation("abelian character extension");
        const std::int64_t w = num / t_ord % e;
        Vec64 c = chi;
        for (int h : elems) {
          int y = h;
          for (int i = 1; i < t_ord; ++i) {
            y = g.mul(y, x);
            c[std::size_t(y)] = (chi[std::size_t(h)] + i * w) % e;
          }
        }
        next.push_back(std::move(c));
      }
    }
    std::vector<int> grown;
    for (int h : elems) {
      int y = h;
      for (int i = 0; i < t_ord; ++i) {
        grown.push_back(y);
        in[std::size_t(y)] = 1;
        y = g.mul(y, x);
      }
    }
    elems = std::move(grown);
    chars = std::move(next);
  }
  for (auto& chi : chars) {
    std::vector<Cyclotomic> row;
    for (auto& c : t.classes) row.push_back(Cyclotomic::zeta(e, chi[std::size_t(c.representative)]));
    t.values.push_back(std::move(row));
    t.dims.push_back(1);
  }
  return t;
}

CharacterTable dixon_table(const FiniteGroup& g, CharacterTable t) {
  const int n = g.order(), r = int(t.classes.size());
  const std::int64_t e = g.exponent();
  std::int64_t p = e + 1;
  const double need = std::max(2.0 * std::sqrt(double(n)), 8.0 * n);
  while (double(p) <= need || !is_prime(p)) p += e;
  const std::int64_t z = powmod(primitive_root(p), (p - 1) / e, p);

  std::vector<std::int64_t> hsize(static_cast<std::size_t>(r)), invclass(static_cast<std::size_t>(r));
  for (int j = 0; j < r; ++j) {
    hsize[std::size_t(j)] = std::int64_t(t.classes[std::size_t(j)].members.size());
    invclass[std::size_t(j)] = t.class_of[std::size_t(g.inv(t.classes[std::size_t(j)].representative))];
  }

  std::mt19937_64 rng(0x5eed + std::uint64_t(n));
  // Σ_j c_j A_j with (A_j)_{k,l} = #{x ∈ C_j : x^{-1} g_l ∈ C_k}
  auto random_class_matrix = [&]() {
    Vec64 c(static_cast<std::size_t>(r));
    for (auto& v : c) v = std::int64_t(rng() % std::uint64_t(p));
    FpMat m(r, r);
    for (int l = 0; l < r; ++l) {
      const int gl = t.classes[std::size_t(l)].representative;
      for (int x = 0; x < n; ++x) {
        const int k = t.class_of[std::size_t(g.mul(g.inv(x), gl))];
        m(k, l) = (m(k, l) + c[std::size_t(t.class_of[std::size_t(x)])]) % p;
      }
    }
    return m;
  };

  std::vector<FpMat> todo, done;
  {
    FpMat id(r, r);
    for (int i = 0; i < r; ++i) id(i, i) = 1;
    todo.push_back(id);
  }
  while (!todo.empty()) {
    FpMat B = std::move(todo.back());
    todo.pop_back();
    const int k = B.cols;
    if (k == 1) {
      done.push_back(std::move(B));
      continue;
    }
    // rows of B where it is invertible
    std::vector<int> rows_sel;
    {
      FpMat bt(k, r);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < k; ++j) bt(j, i) = B(i, j);
      // greedy independent rows of B = independent columns of bt
      FpMat work = bt;
      int rank = 0;
      for (int c = 0; c < r && rank < k; ++c) {
        int piv = -1;
        for (int i = rank; i < k; ++i)
          if (work(i, c)) {
            piv = i;
            break;
          }
        if (piv < 0) continue;
        for (int j = 0; j < r; ++j) std::swap(work(rank, j), work(piv, j));
        const std::int64_t inv = invmod(work(rank, c), p);
        for (int i = rank + 1; i < k; ++i) {
          const std::int64_t f = work(i, c) * inv % p;
          if (f)
            for (int j = 0; j < r; ++j) work(i, j) = mod_norm(work(i, j) - f * work(rank, j), p);
        }
        rows_sel.push_back(c);
        ++rank;
      }
    }
    FpMat Bi(k, 2 * k);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) Bi(i, j) = B(rows_sel[std::size_t(i)], j);
      Bi(i, k + i) = 1;
    }
    // invert B_I by Gauss-Jordan
    for (int c = 0; c < k; ++c) {
      int piv = c;
      while (!Bi(piv, c)) ++piv;
      for (int j = 0; j < 2 * k; ++j) std::swap(Bi(c, j), Bi(piv, j));
      const std::int64_t inv = invmod(Bi(c, c), p);
      for (int j = 0; j < 2 * k; ++j) Bi(c, j) = Bi(c, j) * inv % p;
      for (int i = 0; i < k; ++i) {
        if (i == c || !Bi(i, c)) continue;
        const std::int64_t f = Bi(i, c);
        for (int j = 0; j < 2 * k; ++j) Bi(i, j) = mod_norm(Bi(i, j) - f * Bi(c, j), p);
      }
    }
    FpMat BIinv(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) BIinv(i, j) = Bi(i, k + j);

    bool split = false;
    for (int attempt = 0; attempt < 40 && !split; ++attempt) {
      FpMat MB = multiply(random_class_matrix(), B, p);
      FpMat MBI(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) MBI(i, j) = MB(rows_sel[std::size_t(i)], j);
      FpMat R = multiply(BIinv, MBI, p);
      Vec64 cp = charpoly(R, p);
      std::vector<std::int64_t> roots;
      for (std::int64_t lam = 0; lam < p; ++lam) {
        std::int64_t v = 0;
        for (std::size_t i = cp.size(); i-- > 0;) v = (v * lam + cp[i]) % p;
        if (!v) roots.push_back(lam);
      }
      if (roots.size() < 2) continue;
      int total = 0;
      std::vector<FpMat> parts;
      for (auto lam : roots) {
        FpMat S = R;
        for (int i = 0; i < k; ++i) S(i, i) = mod_norm(S(i, i) - lam, p);
        FpMat K = kernel(S, p);
        total += K.cols;
        parts.push_back(multiply(B, K, p));
      }
      if (total != k) throw IntegralityViolation("class algebra is not split over F_p");
      for (auto& P : parts) todo.push_back(std::move(P));
      split = true;
    }
    if (!split) throw IntegralityViolation("could not split the class algebra");
  }

  for (auto& v : done) {
    const std::int64_t v0 = v(0, 0);
    if (!v0) throw IntegralityViolation("central character vanishes at the identity");
    const std::int64_t iv0 = invmod(v0, p);
    Vec64 omega(static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j) omega[std::size_t(j)] = v(j, 0) * iv0 % p;
    std::int64_t s = 0;
    for (int j = 0; j < r; ++j)
      s = (s + omega[std::size_t(j)] * omega[std::size_t(invclass[std::size_t(j)])] % p * invmod(hsize[std::size_t(j)] % p, p)) % p;
    const std::int64_t d2 = std::int64_t(n) % p * invmod(s, p) % p;
    int dim = 0;
    for (int d = 1; d * d <= n; ++d)
      if (std::int64_t(d) * d % p == d2) dim = d;
    if (!dim) throw IntegralityViolation("no degree matches the Frobenius-Schur count");
    Vec64 modval(static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j)
      modval[std::size_t(j)] = omega[std::size_t(j)] * dim % p * invmod(hsize[std::size_t(j)] % p, p) % p;
    std::vector<Cyclotomic> row;
    for (int j = 0; j < r; ++j) {
      const int x = t.classes[std::size_t(j)].representative;
      const std::int64_t o = g.element_order(x);
      const std::int64_t zo = powmod(z, e / o, p), oinv = invmod(o % p, p);
      std::vector<std::int64_t> mult(static_cast<std::size_t>(o), 0);
      for (std::int64_t kk = 0; kk < o; ++kk) {
        std::int64_t acc = 0;
        int y = 0;
        for (std::int64_t l = 0; l < o; ++l) {
          const std::int64_t val = modval[std::size_t(t.class_of[std::size_t(y)])];
          acc = (acc + val * powmod(zo, ((o - kk) * l) % o, p)) % p;
          y = g.mul(y, x);
        }
        const std::int64_t mu = acc * oinv % p;
        if (mu > dim) throw IntegralityViolation("eigenvalue multiplicity does not lift");
        mult[std::size_t(kk)] = mu;
      }
      row.push_back(Cyclotomic::from_exponents(o, mult));
    }
    t.values.push_back(std::move(row));
    t.dims.push_back(dim);
  }
  return t;
}

}  // namespace

std::shared_ptr<const CharacterTable> character_table(const FiniteGroup& g) {
  static std::mutex mu;
  static std::map<std::vector<int>, std::shared_ptr<const CharacterTable>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(g.table());
    if (it != cache.end()) return it->second;
  }
  CharacterTable t;
  t.group = g;
  t.classes = conjugacy_classes(g);
  t.class_of = class_index(g, t.classes);
  t = g.is_abelian() ? abelian_table(g, std::move(t)) : dixon_table(g, std::move(t));
  // trivial character first, then by degree and values
  std::vector<std::size_t> order(t.values.size());
  std::vector<std::string> keys;
  for (std::size_t i = 0; i < t.values.size(); ++i) {
    std::string k;
    for (auto& v : t.values[i]) k += v.str() + ';';
    keys.push_back(std::move(k));
    order[i] = i;
  }
  auto trivial = [&](std::size_t i) {
    for (auto& v : t.values[i])
      if (!(v == Cyclotomic(1))) return false;
    return true;
  };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (trivial(a) != trivial(b)) return trivial(a);
    if (t.dims[a] != t.dims[b]) return t.dims[a] < t.dims[b];
    return keys[a] < keys[b];
  });
  CharacterTable sorted = t;
  for (std::size_t i = 0; i < order.size(); ++i) {
    sorted.values[i] = t.values[order[i]];
    sorted.dims[i] = t.dims[order[i]];
  }
  int sq = 0;
  for (int d : sorted.dims) sq += d * d;
  if (sq != g.order()) throw IntegralityViolation("degrees do not add up to the group order");
  auto ptr = std::make_shared<const CharacterTable>(std::move(sorted));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(g.table(), ptr).first->second;
}

}  // namespace fusion
