#include <algorithm>

#include "fusion/zlinalg.hpp"

namespace fusion {

using detail::abs_of;
using detail::add;
using detail::mul;
using detail::neg;
using detail::sub;

namespace {

template <typename T>
Mat<T> identity(Eigen::Index n) {
  Mat<T> m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = T(i == j ? 1 : 0);
  return m;
}

// row i -= q row t (left side), mirrored on the inverse
template <typename T>
void row_axpy(SnfOf<T>& s, Eigen::Index i, Eigen::Index t, const T& q) {
  if (q == 0) return;
  for (Eigen::Index j = 0; j < s.D.cols(); ++j)
    if (s.D(t, j) != 0) s.D(i, j) = sub(s.D(i, j), mul(q, s.D(t, j)));
  for (Eigen::Index j = 0; j < s.U.cols(); ++j)
    if (s.U(t, j) != 0) s.U(i, j) = sub(s.U(i, j), mul(q, s.U(t, j)));
  for (Eigen::Index j = 0; j < s.Uinv.rows(); ++j)
    if (s.Uinv(j, i) != 0) s.Uinv(j, t) = add(s.Uinv(j, t), mul(q, s.Uinv(j, i)));
}

// col j -= q col t
template <typename T>
void col_axpy(SnfOf<T>& s, Eigen::Index j, Eigen::Index t, const T& q) {
  if (q == 0) return;
  for (Eigen::Index i = 0; i < s.D.rows(); ++i)
    if (s.D(i, t) != 0) s.D(i, j) = sub(s.D(i, j), mul(q, s.D(i, t)));
  for (Eigen::Index i = 0; i < s.V.rows(); ++i)
    if (s.V(i, t) != 0) s.V(i, j) = sub(s.V(i, j), mul(q, s.V(i, t)));
  for (Eigen::Index i = 0; i < s.Vinv.cols(); ++i)
    if (s.Vinv(j, i) != 0) s.Vinv(t, i) = add(s.Vinv(t, i), mul(q, s.Vinv(j, i)));
}

template <typename T>
void swap_rows(SnfOf<T>& s, Eigen::Index a, Eigen::Index b) {
  if (a == b) return;
  s.D.row(a).swap(s.D.row(b));
  s.U.row(a).swap(s.U.row(b));
  s.Uinv.col(a).swap(s.Uinv.col(b));
}

template <typename T>
void swap_cols(SnfOf<T>& s, Eigen::Index a, Eigen::Index b) {
  if (a == b) return;
  s.D.col(a).swap(s.D.col(b));
  s.V.col(a).swap(s.V.col(b));
  s.Vinv.row(a).swap(s.Vinv.row(b));
}

template <typename T>
void negate_row(SnfOf<T>& s, Eigen::Index t) {
  for (Eigen::Index j = 0; j < s.D.cols(); ++j) s.D(t, j) = neg(s.D(t, j));
  for (Eigen::Index j = 0; j < s.U.cols(); ++j) s.U(t, j) = neg(s.U(t, j));
  for (Eigen::Index j = 0; j < s.Uinv.rows(); ++j) s.Uinv(j, t) = neg(s.Uinv(j, t));
}

}  // namespace

template <typename T>
SnfOf<T> smith_form(const Mat<T>& m) {
  const Eigen::Index r = m.rows(), c = m.cols();
  SnfOf<T> s{identity<T>(r), m, identity<T>(c), identity<T>(r), identity<T>(c)};
  auto& D = s.D;
  for (Eigen::Index t = 0; t < std::min(r, c); ++t) {
    for (;;) {
      Eigen::Index pi = -1, pj = -1;
      T best = 0;
      for (Eigen::Index i = t; i < r; ++i)
        for (Eigen::Index j = t; j < c; ++j)
          if (D(i, j) != 0) {
            T a = abs_of(D(i, j));
            if (pi < 0 || a < best) best = a, pi = i, pj = j;
          }
      if (pi < 0) return s;
      swap_rows(s, t, pi);
      swap_cols(s, t, pj);
      bool clean = true;
      for (Eigen::Index i = t + 1; i < r; ++i)
        if (D(i, t) != 0) {
          row_axpy(s, i, t, T(D(i, t) / D(t, t)));
          clean = clean && D(i, t) == 0;
        }
      for (Eigen::Index j = t + 1; j < c; ++j)
        if (D(t, j) != 0) {
          col_axpy(s, j, t, T(D(t, j) / D(t, t)));
          clean = clean && D(t, j) == 0;
        }
      if (!clean) continue;
      // divisibility: fold an offending row into the pivot row and repeat
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < r && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < c; ++j)
          if (D(i, j) % D(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      row_axpy(s, t, bad, T(-1));
    }
    if (D(t, t) < 0) negate_row(s, t);
  }
  return s;
}

template SnfOf<std::int64_t> smith_form(const Mat<std::int64_t>&);
template SnfOf<BigInt> smith_form(const Mat<BigInt>&);

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("matmul: shape mismatch");
  IntMatrix r(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      BigInt s = 0;
      for (Eigen::Index k = 0; k < a.cols(); ++k)
        if (a(i, k) != 0 && b(k, j) != 0) s += a(i, k) * b(k, j);
      r(i, j) = s;
    }
  return r;
}

IntVector matvec(const IntMatrix& a, const IntVector& x) {
  if (a.cols() != x.size()) throw InvalidArgument("matvec: shape mismatch");
  IntVector r(a.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    BigInt s = 0;
    for (Eigen::Index k = 0; k < a.cols(); ++k)
      if (a(i, k) != 0 && x(k) != 0) s += a(i, k) * x(k);
    r(i) = s;
  }
  return r;
}

bool equal(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

IntMatrix to_int_matrix(const Mat<std::int64_t>& m) {
  IntMatrix r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

Mat<std::int64_t> to_machine(const IntMatrix& m) {
  static const BigInt lim = BigInt(1) << 62;
  Mat<std::int64_t> r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (m(i, j) >= lim || m(i, j) <= -lim) throw Overflow{};
      r(i, j) = static_cast<std::int64_t>(m(i, j));
    }
  return r;
}

std::vector<BigInt> SnfResult::diagonal() const {
  std::vector<BigInt> d;
  for (Eigen::Index i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

int SnfResult::rank() const {
  int r = 0;
  for (auto& x : diagonal()) r += x != 0;
  return r;
}

SnfResult smith_normal_form(const IntMatrix& m) {
  try {
    auto s = smith_form<std::int64_t>(to_machine(m));
    return {to_int_matrix(s.U), to_int_matrix(s.D), to_int_matrix(s.V), to_int_matrix(s.Uinv),
            to_int_matrix(s.Vinv)};
  } catch (const Overflow&) {
    auto s = smith_form<BigInt>(m);
    return {s.U, s.D, s.V, s.Uinv, s.Vinv};
  }
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("determinant of a non-square matrix");
  const Eigen::Index n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.row(k).swap(a.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix lattice_coordinates(const IntMatrix& F, const IntMatrix& S) {
  const Eigen::Index k = F.rows(), n = F.cols(), l = S.rows();
  if (l > 0 && S.cols() != n) throw InvalidArgument("lattice_coordinates: column mismatch");
  auto sf = smith_normal_form(F);
  for (Eigen::Index j = 0; j < k; ++j)
    if (j >= n || sf.D(j, j) == 0) throw InvalidArgument("lattice_coordinates: F rows are dependent");
  // X F = S  <=>  (X U^{-1}) D = S V
  IntMatrix X(l, k);
  if (l == 0) return X;
  IntMatrix SV = matmul(S, sf.V);
  IntMatrix Y(l, k);
  for (Eigen::Index i = 0; i < l; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j < k) {
        if (SV(i, j) % sf.D(j, j) != 0) throw NotSubmodule("generator outside the lattice");
        Y(i, j) = SV(i, j) / sf.D(j, j);
      } else if (SV(i, j) != 0) {
        throw NotSubmodule("generator outside the span");
      }
    }
  }
  return matmul(Y, sf.U);
}

AdaptedBasis adapted_basis(const IntMatrix& F, const IntMatrix& S) {
  IntMatrix X = lattice_coordinates(F, S);
  auto sx = smith_normal_form(X);
  AdaptedBasis out;
  for (auto& d : sx.diagonal())
    if (d != 0) out.factors.push_back(d);
  out.change = sx.Vinv;
  out.changeInverse = sx.V;
  out.newBasis = matmul(sx.Vinv, F);
  return out;
}

}  // namespace fusion
