#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fusion/zlinalg.hpp"

namespace fusion {

// Residue matrices over Z/m, entries kept in [0, m). m < 2^62.
using ModMat = Mat<std::int64_t>;
using ModVec = Vec<std::int64_t>;

inline std::int64_t mod_norm(std::int64_t a, std::int64_t m) {
  a %= m;
  return a < 0 ? a + m : a;
}
inline std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return std::int64_t(static_cast<__int128>(a) * b % m);
}
std::int64_t invmod(std::int64_t a, std::int64_t m);  // a must be a unit
std::int64_t gcd64(std::int64_t a, std::int64_t b);

// E·A·V = diag(d) over Z/m with E, V invertible. E is never formed; instead it
// is applied to the columns of `rhs`. Each d_i is a divisor of m or 0.
struct ModDiagonal {
  std::int64_t modulus = 1;
  std::vector<std::int64_t> d;  // length min(rows, cols)
  ModMat V, Vinv, rhs;
  int rank = 0;  // number of nonzero d_i (they come first)
};

ModDiagonal mod_diagonalize(ModMat a, std::int64_t m, ModMat rhs = {}, bool track_v = true,
                            bool track_vinv = false);

std::optional<ModVec> solve_mod(const ModMat& A, const ModVec& b, std::int64_t m);
// |{x : A x = 0 mod m}|
BigInt kernel_size_mod(const ModMat& A, std::int64_t m);

// Row echelon form over the local ring Z/p^k, fed one sparse row at a time.
// Columns are compared through `priority` (smaller = leading). A new row
// whose leading entry has lower valuation than the stored pivot replaces it,
// and the old pivot is reduced further instead.
class LocalEchelon {
public:
  LocalEchelon(int cols, std::int64_t p, int k, std::vector<int> priority);

  void add_row(const SparseRow& row);

  struct Row {
    std::vector<int> ranks;  // priority ranks, increasing
    std::vector<std::int64_t> vals;
  };

  std::int64_t p() const { return p_; }
  int k() const { return k_; }
  std::int64_t modulus() const { return q_; }
  int valuation(std::int64_t a) const;
  int cols() const { return cols_; }
  const std::vector<Row>& rows() const { return rows_; }
  const std::vector<int>& pivot_valuation() const { return val_; }
  // pivot row index for a priority rank, -1 when none
  int pivot_at(int rank) const { return pivot_of_[rank]; }
  const std::vector<int>& rank_of() const { return rank_; }
  const std::vector<int>& col_at_rank() const { return col_at_; }
  long steps() const { return steps_; }

private:
  int cols_;
  std::int64_t p_, q_;
  int k_;
  std::vector<int> rank_, col_at_;
  std::vector<int> pivot_of_, val_;
  std::vector<Row> rows_;
  std::vector<std::int64_t> acc_;
  std::vector<char> touched_;
  long steps_ = 0;
};

}  // namespace fusion
