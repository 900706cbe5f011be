#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include "fusion/errors.hpp"

namespace fusion {

using BigInt = boost::multiprecision::cpp_int;

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Mat<BigInt>;
using IntVector = Vec<BigInt>;

// Thrown by the machine-integer kernels; callers retry with BigInt.
struct Overflow {};

namespace detail {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t neg(std::int64_t a) { return sub(0, a); }
inline BigInt add(const BigInt& a, const BigInt& b) { return a + b; }
inline BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
inline BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt neg(const BigInt& a) { return -a; }

template <typename T>
T abs_of(const T& a) {
  return a < 0 ? neg(a) : a;
}

// Floor division with the remainder in [0, |b|).
template <typename T>
T floor_div(const T& a, const T& b) {
  T q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q = sub(q, T(1));
  return q;
}

// g = x a + y b with g = gcd(a, b) >= 0.
template <typename T>
T ext_gcd(T a, T b, T& x, T& y) {
  T x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    T q = a / b;
    T r = sub(a, mul(q, b));
    a = b;
    b = r;
    T t = sub(x0, mul(q, x1));
    x0 = x1;
    x1 = t;
    t = sub(y0, mul(q, y1));
    y0 = y1;
    y1 = t;
  }
  if (a < 0) a = neg(a), x0 = neg(x0), y0 = neg(y0);
  x = x0;
  y = y0;
  return a;
}

}  // namespace detail

template <typename Scalar>
struct SnfOf {
  Mat<Scalar> U, D, V, Uinv, Vinv;
};

struct SnfResult {
  IntMatrix U, D, V;
  IntMatrix Uinv, Vinv;  // inverses of the unimodular transforms
  std::vector<BigInt> diagonal() const;
  int rank() const;
};

// Kannan–Bachem style: the pivot is the nonzero entry of least absolute value.
// Machine-integer instantiations throw Overflow.
template <typename Scalar>
SnfOf<Scalar> smith_form(const Mat<Scalar>& m);

SnfResult smith_normal_form(const IntMatrix& m);

struct AdaptedBasis {
  IntMatrix newBasis;  // rows, ambient coordinates
  std::vector<BigInt> factors;
  IntMatrix change;  // newBasis = change * oldBasis
  IntMatrix changeInverse;
};

// F_basis: rows form a basis of a lattice F; S_generators: rows lying in F.
AdaptedBasis adapted_basis(const IntMatrix& F_basis, const IntMatrix& S_generators);
// X with X F = S, F of full row rank; NotSubmodule when S leaves the lattice.
IntMatrix lattice_coordinates(const IntMatrix& F_basis, const IntMatrix& S);

using SparseRow = std::vector<std::pair<int, std::int64_t>>;  // (column, value), any order
using RowSource = std::function<void(const std::function<void(const SparseRow&)>&)>;

// Hermite basis of the row lattice spanned by the streamed rows. The source
// may be replayed once, when machine integers overflow.
IntMatrix incremental_row_reduce(const RowSource& rows, int cols);
IntMatrix incremental_row_reduce(const std::vector<SparseRow>& rows, int cols);

std::optional<IntVector> solve_mod(const IntMatrix& A, const IntVector& b, const BigInt& m);

// Eigen's operator* does not instantiate for cpp_int under C++20.
IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);
IntVector matvec(const IntMatrix& a, const IntVector& x);
// Same for operator== (it goes through a scalar conversion).
bool equal(const IntMatrix& a, const IntMatrix& b);

IntMatrix to_int_matrix(const Mat<std::int64_t>& m);
Mat<std::int64_t> to_machine(const IntMatrix& m);  // throws Overflow
BigInt determinant(const IntMatrix& m);           // Bareiss, exact

}  // namespace fusion
