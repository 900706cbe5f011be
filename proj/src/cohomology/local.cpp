#include <algorithm>
#include <numeric>
#include <queue>

#include "fusion/cohomology.hpp"

namespace fusion {
namespace {

std::vector<std::int64_t> prime_divisors(int n) {
  std::vector<std::int64_t> ps;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

std::int64_t ipow(std::int64_t p, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= p;
  return r;
}

// Column order for the echelon: g_n descending first, then g_1, g_2, ...
// descending. Reductions then mostly stay inside short rows.
std::vector<int> column_priority(int order, int n) {
  const long cols = tuple_count(order, n);
  const int M = order - 1;
  std::vector<int> rank(static_cast<std::size_t>(cols));
  int t[16];
  for (long c = 0; c < cols; ++c) {
    tuple_decode(order, c, n, t);
    long r = M - t[n - 1];
    for (int i = 0; i + 1 < n; ++i) r = r * M + (M - t[i]);
    rank[std::size_t(c)] = int(r);
  }
  return rank;
}

LocalPart local_part(const FiniteGroup& g, int n, std::int64_t p) {
  const int N = g.order();
  int k = 0;
  for (std::int64_t q = 1; q <= (std::int64_t(1) << 31) / p; q *= p) ++k;
  const long cols = tuple_count(N, n);
  LocalEchelon ech(int(cols), p, k, column_priority(N, n));
  {
    const long rows = tuple_count(N, n + 1);
    SparseRow row;
    int t[16];
    for (long i = 0; i < rows; ++i) {
      tuple_decode(N, i, n + 1, t);
      bar_boundary(g, t, n + 1, row);
      if (!row.empty()) ech.add_row(row);
    }
  }
  const std::int64_t q = ech.modulus();
  const auto& rows = ech.rows();
  const auto& val = ech.pivot_valuation();

  // unit pivots eliminate their columns; everything else survives into S
  std::vector<int> unit_at(std::size_t(cols), -1);
  std::vector<std::int64_t> unit_inv(rows.size(), 0);
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (val[r] == 0) {
      unit_at[std::size_t(rows[r].ranks[0])] = int(r);
      unit_inv[r] = invmod(rows[r].vals[0], q);
    }
  std::vector<int> S, s_pos(std::size_t(cols), -1);
  for (int r = 0; r < cols; ++r)
    if (unit_at[std::size_t(r)] < 0) s_pos[std::size_t(r)] = int(S.size()), S.push_back(r);

  // presentation on S: non-unit rows with unit columns substituted away
  std::vector<std::vector<std::pair<int, std::int64_t>>> pres;
  {
    std::vector<std::int64_t> acc(std::size_t(cols), 0);
    std::vector<char> queued(std::size_t(cols), 0);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (val[r] == 0) continue;
      std::priority_queue<int, std::vector<int>, std::greater<int>> heap;
      auto touch = [&](int c) {
        if (!queued[std::size_t(c)]) queued[std::size_t(c)] = 1, heap.push(c);
      };
      for (std::size_t i = 0; i < rows[r].ranks.size(); ++i) {
        acc[std::size_t(rows[r].ranks[i])] = rows[r].vals[i];
        touch(rows[r].ranks[i]);
      }
      std::vector<std::pair<int, std::int64_t>> out;
      while (!heap.empty()) {
        const int c = heap.top();
        heap.pop();
        queued[std::size_t(c)] = 0;
        const std::int64_t a = acc[std::size_t(c)];
        acc[std::size_t(c)] = 0;
        if (a == 0) continue;
        const int u = unit_at[std::size_t(c)];
        if (u < 0) {
          out.emplace_back(s_pos[std::size_t(c)], a);
          continue;
        }
        const std::int64_t f = mulmod(a, unit_inv[std::size_t(u)], q);
        const auto& ur = rows[std::size_t(u)];
        for (std::size_t i = 1; i < ur.ranks.size(); ++i) {
          auto& x = acc[std::size_t(ur.ranks[i])];
          x = mod_norm(x - mulmod(f, ur.vals[i], q), q);
          touch(ur.ranks[i]);
        }
      }
      if (!out.empty()) pres.push_back(std::move(out));
    }
  }

  LocalPart lp;
  lp.p = p;
  lp.k = k;
  if (pres.empty() || S.empty()) return lp;
  ModMat P = ModMat::Zero(Eigen::Index(pres.size()), Eigen::Index(S.size()));
  for (std::size_t i = 0; i < pres.size(); ++i)
    for (auto& [c, v] : pres[i]) P(Eigen::Index(i), c) = v;
  auto dg = mod_diagonalize(P, q, {}, true, true);

  std::vector<std::pair<int, int>> tors;  // (e, position)
  for (int i = 0; i < dg.rank; ++i) {
    int e = ech.valuation(dg.d[std::size_t(i)]);
    if (e > 0 && e < k) tors.emplace_back(e, i);
  }
  std::stable_sort(tors.begin(), tors.end(), [](auto& a, auto& b) { return a.first > b.first; });

  const auto& col_at = ech.col_at_rank();
  // unit rows in decreasing pivot rank, for back-substitution
  std::vector<int> unit_order;
  for (long r = cols - 1; r >= 0; --r)
    if (unit_at[std::size_t(r)] >= 0) unit_order.push_back(unit_at[std::size_t(r)]);

  for (auto [e, i] : tors) {
    lp.exps.push_back(e);
    std::vector<std::pair<long, std::int64_t>> cyc;
    for (std::size_t j = 0; j < S.size(); ++j) {
      std::int64_t v = dg.Vinv(i, Eigen::Index(j));
      if (v) cyc.emplace_back(long(col_at[std::size_t(S[j])]), v);
    }
    std::sort(cyc.begin(), cyc.end());
    lp.cycles.push_back(std::move(cyc));

    std::vector<std::int64_t> f(std::size_t(cols), 0);  // by rank
    for (std::size_t j = 0; j < S.size(); ++j) f[std::size_t(S[j])] = dg.V(Eigen::Index(j), i);
    for (int u : unit_order) {
      const auto& ur = rows[std::size_t(u)];
      __int128 s = 0;
      for (std::size_t t = 1; t < ur.ranks.size(); ++t)
        s += static_cast<__int128>(ur.vals[t]) * f[std::size_t(ur.ranks[t])];
      const std::int64_t sv = std::int64_t(s % q);
      f[std::size_t(ur.ranks[0])] = mod_norm(-mulmod(mod_norm(sv, q), unit_inv[std::size_t(u)], q), q);
    }
    const std::int64_t pe = ipow(p, e);
    Cochain c(std::size_t(cols), 0);
    for (long r = 0; r < cols; ++r) c[std::size_t(col_at[std::size_t(r)])] = f[std::size_t(r)] % pe;
    lp.cocycles.push_back(std::move(c));
  }
  return lp;
}

}  // namespace

CohomologyGroup cohomology(const FiniteGroup& g, int n, long bound) {
  if (n < 1) throw InvalidArgument("cohomology degree must be >= 1");
  if (n + 1 > 15) throw InvalidArgument("cohomology degree too large");
  check_bar_size(g, n + 1, bound);
  CohomologyGroup h;
  h.group = g;
  h.degree = n;
  if (g.order() == 1) return h;
  for (std::int64_t p : prime_divisors(g.order())) {
    auto lp = local_part(g, n, p);
    if (!lp.exps.empty()) h.local.push_back(std::move(lp));
  }
  std::size_t l = 0;
  for (auto& lp : h.local) l = std::max(l, lp.exps.size());
  // the j-th largest global factor collects the j-th largest local ones
  std::vector<std::int64_t> s(l, 1);
  for (auto& lp : h.local)
    for (std::size_t j = 0; j < lp.exps.size(); ++j) s[j] *= ipow(lp.p, lp.exps[j]);
  h.modulus = l ? s[0] : 1;
  const std::int64_t m = h.modulus;
  const long cols = tuple_count(g.order(), n);
  for (std::size_t jj = 0; jj < l; ++jj) {
    const std::size_t j = l - 1 - jj;  // ascending order
    h.factors.push_back(s[j]);
    Cochain w(std::size_t(cols), 0);
    for (auto& lp : h.local) {
      if (j >= lp.exps.size()) continue;
      const std::int64_t scale = m / ipow(lp.p, lp.exps[j]);
      const auto& c = lp.cocycles[j];
      for (long t = 0; t < cols; ++t) w[std::size_t(t)] = (w[std::size_t(t)] + scale * c[std::size_t(t)]) % m;
    }
    h.generators.push_back(std::move(w));
  }
  return h;
}

BigInt CohomologyGroup::size() const {
  BigInt r = 1;
  for (auto s : factors) r *= s;
  return r;
}

std::vector<std::int64_t> CohomologyGroup::normalize(std::vector<std::int64_t> e) const {
  if (e.size() != factors.size())
    throw InvalidArgument("exponent vector has " + std::to_string(e.size()) + " entries, expected " +
                          std::to_string(factors.size()));
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = mod_norm(e[i], factors[i]);
  return e;
}

Cochain CohomologyGroup::realize(const std::vector<std::int64_t>& exponents) const {
  auto e = normalize(exponents);
  Cochain w(std::size_t(tuple_count(group.order(), degree)), 0);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!e[i]) continue;
    const auto& c = generators[i];
    for (std::size_t t = 0; t < w.size(); ++t) w[t] = std::int64_t((w[t] + static_cast<__int128>(e[i]) * c[t]) % modulus);
  }
  return w;
}

std::vector<std::int64_t> CohomologyGroup::class_of(const Cochain& w, std::int64_t M) const {
  const std::size_t l = factors.size();
  if (w.size() != std::size_t(tuple_count(group.order(), degree)))
    throw MismatchedData("cochain has the wrong number of values");
  // local exponents, indexed like s (descending)
  std::vector<std::int64_t> out(l, 0), mod(l, 1);
  for (auto& lp : local) {
    int v = 0;
    std::int64_t Mp = M;
    while (Mp % lp.p == 0) Mp /= lp.p, ++v;
    const std::int64_t pv = ipow(lp.p, v);
    const std::int64_t a = v ? invmod(Mp % pv, pv) : 0;
    for (std::size_t j = 0; j < lp.exps.size(); ++j) {
      const int e = lp.exps[j];
      const std::int64_t pe = ipow(lp.p, e);
      std::int64_t t = 0;
      if (v) {
        __int128 x = 0;
        for (auto& [idx, coef] : lp.cycles[j]) x = (x + static_cast<__int128>(coef) * w[std::size_t(idx)]) % pv;
        t = mulmod(std::int64_t(x), a, pv);
        if (v >= e) {
          const std::int64_t d = ipow(lp.p, v - e);
          if (t % d != 0) throw IntegralityViolation("cochain is not a cocycle, or its modulus is too coarse");
          t /= d;
        } else {
          t *= ipow(lp.p, e - v);
        }
      }
      // CRT into the running residue for global factor j
      std::int64_t r = out[j], m0 = mod[j];
      while (r % pe != t % pe) r += m0;
      out[j] = r;
      mod[j] = m0 * pe;
    }
  }
  std::vector<std::int64_t> asc(l);
  for (std::size_t j = 0; j < l; ++j) asc[l - 1 - j] = out[j];
  return asc;
}

}  // namespace fusion
