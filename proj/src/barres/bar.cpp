#include <algorithm>

#include "fusion/barres.hpp"

namespace fusion {

long tuple_count(int order, int n) {
  long r = 1;
  for (int i = 0; i < n; ++i) r *= order - 1;
  return r;
}

long tuple_index(int order, const int* g, int n) {
  long r = 0;
  for (int i = 0; i < n; ++i) r = r * (order - 1) + (g[i] - 1);
  return r;
}

void tuple_decode(int order, long index, int n, int* out) {
  for (int i = n - 1; i >= 0; --i) {
    out[i] = int(index % (order - 1)) + 1;
    index /= order - 1;
  }
}

void bar_boundary(const FiniteGroup& g, const int* t, int n, SparseRow& out) {
  out.clear();
  const int N = g.order();
  int buf[16];
  auto emit = [&](int sign) {
    for (int i = 0; i < n - 1; ++i)
      if (buf[i] == 0) return;
    out.emplace_back(int(tuple_index(N, buf, n - 1)), sign);
  };
  if (n == 0) return;
  std::copy(t + 1, t + n, buf);
  emit(1);
  for (int i = 0; i + 1 < n; ++i) {
    for (int j = 0, k = 0; j < n; ++j) {
      if (j == i) {
        buf[k++] = g.mul(t[i], t[i + 1]);
        ++j;
      } else {
        buf[k++] = t[j];
      }
    }
    emit((i + 1) % 2 ? -1 : 1);
  }
  std::copy(t, t + n - 1, buf);
  emit(n % 2 ? -1 : 1);
  std::sort(out.begin(), out.end());
  std::size_t w = 0;
  for (std::size_t r = 0; r < out.size(); ++r) {
    if (w > 0 && out[w - 1].first == out[r].first)
      out[w - 1].second += out[r].second;
    else
      out[w++] = out[r];
  }
  out.resize(w);
  out.erase(std::remove_if(out.begin(), out.end(), [](const auto& e) { return e.second == 0; }), out.end());
}

void check_bar_size(const FiniteGroup& g, int n, long bound) {
  long r = 1;
  for (int i = 0; i < n; ++i) {
    r *= g.order() - 1;
    if (r > bound)
      throw SizeBound("bar complex of a group of order " + std::to_string(g.order()) + " in degree " +
                      std::to_string(n) + " exceeds " + std::to_string(bound) + " tuples");
  }
}

const SparseIntMatrix& ChainComplex::boundary(int n) const {
  if (n < 1 || n > max_degree_) throw DegreeMissing("boundary of degree " + std::to_string(n) + " not built");
  return boundary_[std::size_t(n)];
}

std::vector<int> ChainComplex::basis_tuple(int n, long index) const {
  std::vector<int> t(static_cast<std::size_t>(n));
  tuple_decode(group_.order(), index, n, t.data());
  return t;
}

ChainComplex bar_complex(const FiniteGroup& g, int max_degree, long bound) {
  if (max_degree < 1) throw InvalidArgument("bar complex needs degree >= 1");
  if (max_degree > 15) throw InvalidArgument("bar complex degree too large");
  check_bar_size(g, max_degree, bound);
  std::vector<SparseIntMatrix> bd(std::size_t(max_degree) + 1);
  const int N = g.order();
  SparseRow row;
  int t[16];
  for (int n = 1; n <= max_degree; ++n) {
    const long rows = tuple_count(N, n), cols = tuple_count(N, n - 1);
    std::vector<Eigen::Triplet<int>> trip;
    trip.reserve(std::size_t(rows) * (n + 1));
    for (long i = 0; i < rows; ++i) {
      tuple_decode(N, i, n, t);
      bar_boundary(g, t, n, row);
      for (auto& [c, v] : row) trip.emplace_back(int(i), c, int(v));
    }
    SparseIntMatrix m(rows, cols);
    m.setFromTriplets(trip.begin(), trip.end());
    bd[std::size_t(n)] = std::move(m);
  }
  return ChainComplex(g, max_degree, std::move(bd));
}

SparseIntMatrix chain_map(const GroupHom& phi, int n) {
  const int N = phi.source.order(), M = phi.target.order();
  const long rows = tuple_count(N, n), cols = tuple_count(M, n);
  std::vector<Eigen::Triplet<int>> trip;
  int t[16], u[16];
  for (long i = 0; i < rows; ++i) {
    tuple_decode(N, i, n, t);
    bool zero = false;
    for (int k = 0; k < n; ++k) {
      u[k] = phi(t[k]);
      zero = zero || u[k] == 0;
    }
    if (!zero) trip.emplace_back(int(i), int(tuple_index(M, u, n)), 1);
  }
  SparseIntMatrix m(rows, cols);
  m.setFromTriplets(trip.begin(), trip.end());
  return m;
}

SparseIntMatrix chain_map(const ChainComplex& source, const ChainComplex& target, const GroupHom& phi, int n) {
  if (n > source.max_degree() || n > target.max_degree())
    throw DegreeMissing("chain map in degree " + std::to_string(n) + " needs both complexes built that far");
  if (!source.group().same_as(phi.source) || !target.group().same_as(phi.target))
    throw MismatchedData("homomorphism does not match the complexes");
  return chain_map(phi, n);
}

Cochain coboundary(const FiniteGroup& g, const Cochain& f, int n, std::int64_t m) {
  const int N = g.order();
  const long rows = tuple_count(N, n + 1);
  Cochain out(std::size_t(rows), 0);
  SparseRow row;
  int t[16];
  for (long i = 0; i < rows; ++i) {
    tuple_decode(N, i, n + 1, t);
    bar_boundary(g, t, n + 1, row);
    __int128 s = 0;
    for (auto& [c, v] : row) s += static_cast<__int128>(v) * f[std::size_t(c)];
    std::int64_t r = std::int64_t(s % m);
    out[std::size_t(i)] = r < 0 ? r + m : r;
  }
  return out;
}

Cochain pullback(const GroupHom& phi, const Cochain& f, int n) {
  const int N = phi.source.order(), M = phi.target.order();
  Cochain out(std::size_t(tuple_count(N, n)), 0);
  int t[16], u[16];
  for (long i = 0; i < long(out.size()); ++i) {
    tuple_decode(N, i, n, t);
    for (int k = 0; k < n; ++k) u[k] = phi(t[k]);
    out[std::size_t(i)] = cochain_at(f, M, u, n);
  }
  return out;
}

}  // namespace fusion
