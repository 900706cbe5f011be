#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/SparseCore>

#include "fusion/groups.hpp"
#include "fusion/zlinalg.hpp"

namespace fusion {

using SparseIntMatrix = Eigen::SparseMatrix<int, Eigen::RowMajor>;

inline constexpr long kDefaultBarBound = 600000;

// Normalized n-tuples (g_1,...,g_n), g_i != 0, indexed lexicographically:
// index = sum (g_i - 1) (|G|-1)^{n-i}.
long tuple_count(int order, int n);
long tuple_index(int order, const int* g, int n);
void tuple_decode(int order, long index, int n, int* out);

// ∂(g_1..g_n) = (g_2..g_n) + sum_i (-1)^i (..,g_i g_{i+1},..) + (-1)^n (g_1..g_{n-1}),
// terms containing the identity dropped. Entries are merged; zeros removed.
void bar_boundary(const FiniteGroup& g, const int* tuple, int n, SparseRow& out);

// Raises SizeBound when (|G|-1)^n exceeds the bound.
void check_bar_size(const FiniteGroup& g, int n, long bound = kDefaultBarBound);

class ChainComplex {
public:
  ChainComplex(FiniteGroup g, int max_degree, std::vector<SparseIntMatrix> boundaries)
      : group_(std::move(g)), max_degree_(max_degree), boundary_(std::move(boundaries)) {}

  const FiniteGroup& group() const { return group_; }
  int max_degree() const { return max_degree_; }
  long rank(int n) const { return tuple_count(group_.order(), n); }
  // ∂_n : K_n -> K_{n-1}, rows indexed by K_n (row-vector convention)
  const SparseIntMatrix& boundary(int n) const;
  std::vector<int> basis_tuple(int n, long index) const;

private:
  FiniteGroup group_;
  int max_degree_;
  std::vector<SparseIntMatrix> boundary_;  // boundary_[n], n = 1..max_degree
};

ChainComplex bar_complex(const FiniteGroup& g, int max_degree, long bound = kDefaultBarBound);

// Row for (g_1..g_n) is the indicator of (φg_1..φg_n), zero if some φg_i = 1.
SparseIntMatrix chain_map(const GroupHom& phi, int n);
SparseIntMatrix chain_map(const ChainComplex& source, const ChainComplex& target, const GroupHom& phi, int n);

// Cochains: one residue per normalized tuple.
using Cochain = std::vector<std::int64_t>;

// (δf)(g_1..g_{n+1}) = f(∂(g_1..g_{n+1})) mod m, f of degree n.
Cochain coboundary(const FiniteGroup& g, const Cochain& f, int n, std::int64_t m);
// f∘φ^n, i.e. (g_1..g_n) -> f(φg_1..φg_n), 0 on tuples hitting the identity.
Cochain pullback(const GroupHom& phi, const Cochain& f, int n);
// Value of a normalized cochain at an arbitrary tuple (0 when some entry is 0).
inline std::int64_t cochain_at(const Cochain& f, int order, const int* tuple, int n) {
  for (int i = 0; i < n; ++i)
    if (tuple[i] == 0) return 0;
  return f[std::size_t(tuple_index(order, tuple, n))];
}

}  // namespace fusion
