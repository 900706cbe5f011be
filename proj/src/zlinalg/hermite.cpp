#include <algorithm>

#include "fusion/zlinalg.hpp"

namespace fusion {
namespace {

using detail::add;
using detail::floor_div;
using detail::mul;
using detail::neg;
using detail::sub;

template <typename T>
using Row = std::vector<std::pair<int, T>>;  // sorted by column, no zeros

template <typename T>
Row<T> lincomb(const T& a, const Row<T>& x, const T& b, const Row<T>& y) {
  Row<T> r;
  r.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    int c;
    T v = 0;
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      c = x[i].first;
      v = mul(a, x[i++].second);
    } else if (i == x.size() || y[j].first < x[i].first) {
      c = y[j].first;
      v = mul(b, y[j++].second);
    } else {
      c = x[i].first;
      v = add(mul(a, x[i++].second), mul(b, y[j++].second));
    }
    if (v != 0) r.emplace_back(c, v);
  }
  return r;
}

template <typename T>
struct Hermite {
  std::vector<int> pivot_of;
  std::vector<Row<T>> rows;

  explicit Hermite(int cols) : pivot_of(cols, -1) {}

  void insert(Row<T> r) {
    while (!r.empty()) {
      const int c = r[0].first;
      const int p = pivot_of[c];
      if (p < 0) {
        if (r[0].second < 0)
          for (auto& e : r) e.second = neg(e.second);
        pivot_of[c] = int(rows.size());
        rows.push_back(std::move(r));
        tidy(pivot_of[c]);
        return;
      }
      const T a = r[0].second, b = rows[p][0].second;
      if (a % b == 0) {
        r = lincomb(T(1), r, T(neg(a / b)), rows[p]);
        continue;
      }
      T x, y;
      T g = detail::ext_gcd(b, a, x, y);  // g = x b + y a
      Row<T> piv = lincomb(x, rows[p], y, r);
      r = lincomb(T(a / g), rows[p], T(neg(b / g)), r);
      rows[p] = std::move(piv);
      tidy(p);
    }
  }

  static T entry_at(const Row<T>& r, int c) {
    auto it = std::lower_bound(r.begin(), r.end(), std::make_pair(c, T(0)),
                               [](const auto& u, const auto& v) { return u.first < v.first; });
    return it == r.end() || it->first != c ? T(0) : it->second;
  }

  // Keeps entries small while rows stream in: the changed pivot row is reduced
  // by the pivots to its right, and the rows above are reduced by it. Without
  // this the ext-gcd mixing blows up coefficients on bar complexes.
  void tidy(int p) {
    auto& row = rows[p];
    for (std::size_t i = 1; i < row.size(); ++i) {
      const int c = row[i].first;
      const int q = pivot_of[c];
      if (q < 0 || q == p) continue;
      T f = floor_div(row[i].second, rows[q][0].second);
      if (f == 0) continue;
      row = lincomb(T(1), row, T(neg(f)), rows[q]);
      // the entry at c may have vanished; resume right after column c
      i = std::size_t(std::upper_bound(row.begin(), row.end(), c,
                                       [](int v, const auto& e) { return v < e.first; }) -
                      row.begin()) -
          1;
    }
    const int c = row[0].first;
    const T pv = row[0].second;
    for (std::size_t q = 0; q < rows.size(); ++q) {
      if (int(q) == p || rows[q].empty() || rows[q][0].first >= c) continue;
      T v = entry_at(rows[q], c);
      if (v == 0) continue;
      T f = floor_div(v, pv);
      if (f != 0) rows[q] = lincomb(T(1), rows[q], T(neg(f)), rows[p]);
    }
  }

  // reduce entries above each pivot into [0, pivot)
  void normalize() {
    std::vector<int> pcols;
    for (int c = 0; c < int(pivot_of.size()); ++c)
      if (pivot_of[c] >= 0) pcols.push_back(c);
    for (int c : pcols) {
      const auto& pr = rows[pivot_of[c]];
      const T pv = pr[0].second;
      for (int c2 : pcols) {
        if (c2 >= c) break;
        auto& r = rows[pivot_of[c2]];
        auto it = std::lower_bound(r.begin(), r.end(), std::make_pair(c, T(0)),
                                   [](const auto& u, const auto& v) { return u.first < v.first; });
        if (it == r.end() || it->first != c) continue;
        T q = floor_div(it->second, pv);
        if (q != 0) r = lincomb(T(1), r, T(neg(q)), pr);
      }
    }
  }
};

template <typename T>
IntMatrix reduce(const RowSource& src, int cols) {
  Hermite<T> h(cols);
  src([&](const SparseRow& in) {
    Row<T> r;
    for (auto& [c, v] : in) {
      if (c < 0 || c >= cols) throw InvalidArgument("row entry outside the column range");
      if (v != 0) r.emplace_back(c, T(v));
    }
    std::sort(r.begin(), r.end(), [](const auto& u, const auto& v) { return u.first < v.first; });
    Row<T> merged;
    for (auto& e : r) {
      if (!merged.empty() && merged.back().first == e.first)
        merged.back().second = add(merged.back().second, e.second);
      else
        merged.push_back(e);
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(), [](const auto& e) { return e.second == 0; }),
                 merged.end());
    h.insert(std::move(merged));
  });
  h.normalize();
  std::vector<int> order;
  for (int c = 0; c < cols; ++c)
    if (h.pivot_of[c] >= 0) order.push_back(h.pivot_of[c]);
  IntMatrix out = IntMatrix::Zero(Eigen::Index(order.size()), cols);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (auto& [c, v] : h.rows[order[i]]) out(Eigen::Index(i), c) = BigInt(v);
  return out;
}

}  // namespace

IntMatrix incremental_row_reduce(const RowSource& rows, int cols) {
  try {
    return reduce<std::int64_t>(rows, cols);
  } catch (const Overflow&) {
    return reduce<BigInt>(rows, cols);
  }
}

IntMatrix incremental_row_reduce(const std::vector<SparseRow>& rows, int cols) {
  return incremental_row_reduce(
      [&](const std::function<void(const SparseRow&)>& f) {
        for (auto& r : rows) f(r);
      },
      cols);
}

}  // namespace fusion
