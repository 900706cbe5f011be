#include <algorithm>
#include <numeric>
#include <queue>

#include "fusion/modular.hpp"

namespace fusion {

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t invmod(std::int64_t a, std::int64_t m) {
  std::int64_t x, y;
  std::int64_t g = detail::ext_gcd<std::int64_t>(mod_norm(a, m), m, x, y);
  if (g != 1) throw InvalidArgument("invmod of a non-unit");
  return mod_norm(x, m);
}

namespace {

// rows (a, b) <- (x a + y b, u a + v b), all mod m
void mix_rows(ModMat& A, Eigen::Index a, Eigen::Index b, std::int64_t x, std::int64_t y, std::int64_t u,
              std::int64_t v, std::int64_t m, Eigen::Index from = 0) {
  for (Eigen::Index j = from; j < A.cols(); ++j) {
    std::int64_t p = A(a, j), q = A(b, j);
    if (p == 0 && q == 0) continue;
    A(a, j) = std::int64_t((static_cast<__int128>(x) * p + static_cast<__int128>(y) * q) % m);
    A(b, j) = std::int64_t((static_cast<__int128>(u) * p + static_cast<__int128>(v) * q) % m);
  }
}

void mix_cols(ModMat& A, Eigen::Index a, Eigen::Index b, std::int64_t x, std::int64_t y, std::int64_t u,
              std::int64_t v, std::int64_t m, Eigen::Index from = 0) {
  for (Eigen::Index i = from; i < A.rows(); ++i) {
    std::int64_t p = A(i, a), q = A(i, b);
    if (p == 0 && q == 0) continue;
    A(i, a) = std::int64_t((static_cast<__int128>(x) * p + static_cast<__int128>(y) * q) % m);
    A(i, b) = std::int64_t((static_cast<__int128>(u) * p + static_cast<__int128>(v) * q) % m);
  }
}

// Coefficients of a unimodular integer 2x2 map sending (a, b) to (gcd, 0),
// reduced to nonnegative residues. When a | b this is plain elimination, so
// every other step strictly lowers the pivot and the sweeps terminate.
struct Mix {
  std::int64_t x, y, u, v;
};
Mix mixer(std::int64_t a, std::int64_t b, std::int64_t m) {
  if (b % a == 0) return {1, 0, mod_norm(-(b / a), m), 1};
  std::int64_t x, y;
  std::int64_t g = detail::ext_gcd<std::int64_t>(a, b, x, y);
  return {mod_norm(x, m), mod_norm(y, m), mod_norm(-(b / g), m), mod_norm(a / g, m)};
}

}  // namespace

ModDiagonal mod_diagonalize(ModMat A, std::int64_t m, ModMat rhs, bool track_v, bool track_vinv) {
  const Eigen::Index r = A.rows(), c = A.cols();
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) A(i, j) = mod_norm(A(i, j), m);
  for (Eigen::Index i = 0; i < rhs.rows(); ++i)
    for (Eigen::Index j = 0; j < rhs.cols(); ++j) rhs(i, j) = mod_norm(rhs(i, j), m);
  // rhs is transformed like the rows of A; keep it as extra columns of A^T-side ops
  ModDiagonal out;
  out.modulus = m;
  if (track_v) out.V = ModMat::Identity(c, c);
  if (track_vinv) out.Vinv = ModMat::Identity(c, c);
  ModMat rhsT = rhs.transpose();  // rows of A <-> columns of rhsT
  const Eigen::Index n = std::min(r, c);
  Eigen::Index t = 0;
  for (; t < n; ++t) {
    Eigen::Index pi = -1, pj = -1;
    std::int64_t best = 0;
    for (Eigen::Index i = t; i < r; ++i)
      for (Eigen::Index j = t; j < c; ++j)
        if (A(i, j) != 0) {
          std::int64_t g = std::gcd(A(i, j), m);
          if (pi < 0 || g < best) best = g, pi = i, pj = j;
          if (best == 1) break;
        }
    if (pi < 0) break;
    if (pi != t) {
      A.row(t).swap(A.row(pi));
      if (rhsT.size()) rhsT.col(t).swap(rhsT.col(pi));
    }
    if (pj != t) {
      A.col(t).swap(A.col(pj));
      if (track_v) out.V.col(t).swap(out.V.col(pj));
      if (track_vinv) out.Vinv.row(t).swap(out.Vinv.row(pj));
    }
    for (bool dirty = true; dirty;) {
      dirty = false;
      for (Eigen::Index i = t + 1; i < r; ++i) {
        if (A(i, t) == 0) continue;
        auto k = mixer(A(t, t), A(i, t), m);
        mix_rows(A, t, i, k.x, k.y, k.u, k.v, m, t);
        if (rhsT.size()) mix_cols(rhsT, t, i, k.x, k.y, k.u, k.v, m);
      }
      for (Eigen::Index j = t + 1; j < c; ++j) {
        if (A(t, j) == 0) continue;
        auto k = mixer(A(t, t), A(t, j), m);
        mix_cols(A, t, j, k.x, k.y, k.u, k.v, m, t);
        if (track_v) mix_cols(out.V, t, j, k.x, k.y, k.u, k.v, m);
        if (track_vinv) {
          // the column step is V <- V [[x,u],[y,v]]; Vinv takes the inverse from the left
          std::int64_t det = mod_norm(std::int64_t((static_cast<__int128>(k.x) * k.v -
                                                    static_cast<__int128>(k.u) * k.y) % m), m);
          std::int64_t di = invmod(det, m);
          mix_rows(out.Vinv, t, j, mulmod(k.v, di, m), mod_norm(-mulmod(k.u, di, m), m),
                   mod_norm(-mulmod(k.y, di, m), m), mulmod(k.x, di, m), m);
        }
        dirty = dirty || [&] {
          for (Eigen::Index i = t + 1; i < r; ++i)
            if (A(i, t) != 0) return true;
          return false;
        }();
      }
    }
    // scale the pivot to gcd(pivot, m)
    const std::int64_t a = A(t, t), g = std::gcd(a, m);
    if (a != g) {
      std::int64_t u = a / g, mg = m / g;
      while (std::gcd(u, m) != 1) u += mg;
      std::int64_t ui = invmod(u, m);
      for (Eigen::Index j = t; j < c; ++j) A(t, j) = mulmod(A(t, j), ui, m);
      if (rhsT.size())
        for (Eigen::Index j = 0; j < rhsT.rows(); ++j) rhsT(j, t) = mulmod(rhsT(j, t), ui, m);
    }
  }
  out.rank = int(t);
  out.d.assign(n, 0);
  for (Eigen::Index i = 0; i < t; ++i) out.d[i] = A(i, i);
  out.rhs = rhsT.transpose();
  return out;
}

std::optional<ModVec> solve_mod(const ModMat& A, const ModVec& b, std::int64_t m) {
  if (m < 2) throw InvalidArgument("solve_mod needs m >= 2");
  ModMat rhs(b.size(), 1);
  rhs.col(0) = b;
  auto d = mod_diagonalize(A, m, rhs, true, false);
  ModVec y = ModVec::Zero(A.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    std::int64_t bi = d.rhs(i, 0);
    if (i < d.rank) {
      std::int64_t g = d.d[i];  // divides m
      if (bi % g != 0) return std::nullopt;
      y(i) = bi / g;
    } else if (bi != 0) {
      return std::nullopt;
    }
  }
  ModVec x = ModVec::Zero(A.cols());
  for (Eigen::Index i = 0; i < A.cols(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      if (d.V(i, j) && y(j)) x(i) = (x(i) + mulmod(d.V(i, j), y(j), m)) % m;
  return x;
}

BigInt kernel_size_mod(const ModMat& A, std::int64_t m) {
  auto d = mod_diagonalize(A, m, {}, false, false);
  BigInt k = 1;
  for (Eigen::Index i = 0; i < A.cols(); ++i) k *= i < d.rank ? d.d[i] : m;
  return k;
}

std::optional<IntVector> solve_mod(const IntMatrix& A, const IntVector& b, const BigInt& m) {
  if (m < 2 || m > (BigInt(1) << 62)) throw InvalidArgument("solve_mod modulus out of range");
  const auto mm = static_cast<std::int64_t>(m);
  ModMat a(A.rows(), A.cols());
  ModVec bb(b.size());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j) {
      BigInt v = A(i, j) % m;
      a(i, j) = mod_norm(static_cast<std::int64_t>(v), mm);
    }
  for (Eigen::Index i = 0; i < b.size(); ++i) {
    BigInt v = b(i) % m;
    bb(i) = mod_norm(static_cast<std::int64_t>(v), mm);
  }
  auto x = solve_mod(a, bb, mm);
  if (!x) return std::nullopt;
  IntVector out(x->size());
  for (Eigen::Index i = 0; i < x->size(); ++i) out(i) = (*x)(i);
  return out;
}

// ---- local echelon ---------------------------------------------------------

LocalEchelon::LocalEchelon(int cols, std::int64_t p, int k, std::vector<int> priority)
    : cols_(cols), p_(p), q_(1), k_(k), rank_(std::move(priority)) {
  for (int i = 0; i < k; ++i) q_ *= p;
  if (int(rank_.size()) != cols) throw InvalidArgument("priority has the wrong length");
  col_at_.assign(cols, -1);
  for (int c = 0; c < cols; ++c) {
    if (rank_[c] < 0 || rank_[c] >= cols || col_at_[rank_[c]] >= 0)
      throw InvalidArgument("priority is not a permutation");
    col_at_[rank_[c]] = c;
  }
  pivot_of_.assign(cols, -1);
  acc_.assign(cols, 0);
  touched_.assign(cols, 0);
}

int LocalEchelon::valuation(std::int64_t a) const {
  int e = 0;
  while (e < k_ && a % p_ == 0) a /= p_, ++e;
  return e;
}

void LocalEchelon::add_row(const SparseRow& row) {
  std::priority_queue<int, std::vector<int>, std::greater<int>> heap;
  auto touch = [&](int r) {
    if (!touched_[r]) touched_[r] = 1, heap.push(r);
  };
  for (auto& [c, v] : row) {
    int r = rank_[c];
    acc_[r] = mod_norm(acc_[r] + mod_norm(v, q_), q_);
    touch(r);
  }
  auto extract = [&] {
    Row out;
    while (!heap.empty()) {
      int r = heap.top();
      heap.pop();
      touched_[r] = 0;
      if (acc_[r]) out.ranks.push_back(r), out.vals.push_back(acc_[r]), acc_[r] = 0;
    }
    return out;
  };
  while (!heap.empty()) {
    const int r = heap.top();
    if (acc_[r] == 0) {
      heap.pop();
      touched_[r] = 0;
      continue;
    }
    const int p = pivot_of_[r];
    if (p < 0) {
      pivot_of_[r] = int(rows_.size());
      val_.push_back(valuation(acc_[r]));
      rows_.push_back(extract());
      return;
    }
    const int vb = val_[p], va = valuation(acc_[r]);
    if (va >= vb) {
      const Row& pr = rows_[p];
      std::int64_t pw = 1;
      for (int i = 0; i < vb; ++i) pw *= p_;
      const std::int64_t q = mulmod(acc_[r] / pw, invmod(pr.vals[0] / pw, q_), q_);
      ++steps_;
      for (std::size_t i = 0; i < pr.ranks.size(); ++i) {
        const int c = pr.ranks[i];
        acc_[c] = mod_norm(acc_[c] - mulmod(q, pr.vals[i], q_), q_);
        touch(c);
      }
    } else {
      Row fresh = extract();
      Row old = std::move(rows_[p]);
      rows_[p] = std::move(fresh);
      val_[p] = va;
      for (std::size_t i = 0; i < old.ranks.size(); ++i) {
        acc_[old.ranks[i]] = old.vals[i];
        touch(old.ranks[i]);
      }
    }
  }
}

}  // namespace fusion
