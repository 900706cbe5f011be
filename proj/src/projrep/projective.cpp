#include <algorithm>
#include <numeric>

#include "fusion/errors.hpp"
#include "fusion/modular.hpp"
#include "fusion/projrep.hpp"

namespace fusion {

bool TwoCocycle::is_cocycle() const {
  const int n = group.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        // α(b,c) - α(ab,c) + α(a,bc) - α(a,b)
        const std::int64_t v = (*this)(b, c) - (*this)(group.mul(a, b), c) + (*this)(a, group.mul(b, c)) - (*this)(a, b);
        if (mod_norm(v, modulus)) return false;
      }
  return true;
}

bool TwoCocycle::is_normalized() const {
  for (int g = 0; g < group.order(); ++g)
    if (mod_norm((*this)(0, g), modulus) || mod_norm((*this)(g, 0), modulus)) return false;
  return true;
}

bool TwoCocycle::is_zero() const {
  return std::all_of(values.begin(), values.end(), [&](std::int64_t v) { return mod_norm(v, modulus) == 0; });
}

TwoCocycle zero_cocycle(const FiniteGroup& g, std::int64_t n) {
  return {g, n, std::vector<std::int64_t>(std::size_t(g.order()) * std::size_t(g.order()), 0)};
}

TwoCocycle restrict_cocycle(const TwoCocycle& a, const GroupHom& incl) {
  TwoCocycle r = zero_cocycle(incl.source, a.modulus);
  const int n = incl.source.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) r.values[std::size_t(x) * std::size_t(n) + std::size_t(y)] = a(incl(x), incl(y));
  return r;
}

DenseCocycle dense_cocycle(const FiniteGroup& g, const Cochain& w, std::int64_t m) {
  const int n = g.order();
  DenseCocycle d{g, m, std::vector<std::int64_t>(std::size_t(n) * std::size_t(n) * std::size_t(n), 0)};
  int t[3];
  for (t[0] = 0; t[0] < n; ++t[0])
    for (t[1] = 0; t[1] < n; ++t[1])
      for (t[2] = 0; t[2] < n; ++t[2])
        d.values[(std::size_t(t[0]) * std::size_t(n) + std::size_t(t[1])) * std::size_t(n) + std::size_t(t[2])] =
            mod_norm(cochain_at(w, n, t, 3), m);
  return d;
}

DenseCocycle dense_cocycle(const CocycleClass& c) {
  if (c.parent->degree != 3) throw InvalidArgument("dense_cocycle expects a degree-3 class");
  return dense_cocycle(c.parent->group, c.realized, c.parent->modulus);
}

TwoCocycle two_cocycle_omega_g(const DenseCocycle& w, int g) {
  TwoCocycle r = zero_cocycle(w.group, w.modulus);
  const int n = w.group.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) r.values[std::size_t(x) * std::size_t(n) + std::size_t(y)] = w(x, y, g);
  return r;
}

TwoCocycle two_cocycle_alpha_g(const DenseCocycle& w, int g) {
  const FiniteGroup& G = w.group;
  TwoCocycle r = zero_cocycle(G, w.modulus);
  const int n = G.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const std::int64_t v = w(x, y, g) - w(x, G.conj(y, g), y) + w(G.conj(G.mul(x, y), g), x, y);
      r.values[std::size_t(x) * std::size_t(n) + std::size_t(y)] = mod_norm(v, w.modulus);
    }
  return r;
}

CentralExtension central_extension(const TwoCocycle& a, int bound) {
  const int c = a.group.order();
  const std::int64_t n = a.modulus;
  if (n * c > bound) throw ClosureBound("central extension of order " + std::to_string(n * c));
  const int N = int(n) * c;
  std::vector<int> table(std::size_t(N) * std::size_t(N));
  for (int g = 0; g < c; ++g)
    for (int z = 0; z < n; ++z)
      for (int h = 0; h < c; ++h)
        for (int y = 0; y < n; ++y) {
          const int gh = a.group.mul(g, h);
          const int s = int(mod_norm(z + y + a(g, h), n));
          table[std::size_t(g * n + z) * std::size_t(N) + std::size_t(h * n + y)] = gh * int(n) + s;
        }
  CentralExtension e;
  e.base = a.group;
  e.modulus = n;
  e.ext = FiniteGroup(N, std::move(table));
  for (int z = 0; z < n; ++z) e.embed.push_back(z);
  e.project.source = e.ext;
  e.project.target = a.group;
  for (int x = 0; x < N; ++x) e.project.image.push_back(x / int(n));
  for (int g = 0; g < c; ++g) e.section.push_back(g * int(n));
  return e;
}

std::vector<ProjectiveCharacter> tautological_characters(const TwoCocycle& a, int bound) {
  if (!a.is_normalized()) throw InvalidArgument("2-cocycle is not normalized");
  CentralExtension e = central_extension(a, bound);
  auto t = character_table(e.ext);
  std::vector<ProjectiveCharacter> out;
  const int z1 = e.modulus > 1 ? e.embed[1] : 0;
  for (std::size_t chi = 0; chi < t->values.size(); ++chi) {
    const int dim = t->dims[chi];
    if (!(t->at(chi, z1) == Cyclotomic(dim) * Cyclotomic::zeta(e.modulus))) continue;
    ProjectiveCharacter p{e, {}, dim};
    for (int s : e.section) p.values.push_back(t->at(chi, s));
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<ProjectiveCharacter> alpha_projective_characters(const TwoCocycle& a) {
  if (!a.is_normalized()) throw InvalidArgument("2-cocycle is not normalized");
  const FiniteGroup& G = a.group;
  const int c = G.order();
  if (a.is_zero() || c == 1) return tautological_characters(zero_cocycle(G, 1));
  // c·α is a coboundary, so on the scale L = n·c: c·α ≡ δb mod L with α
  // rescaled by c. Look for the smallest d | c with d·(cα) ≡ δb̂ (mod L) solvable.
  const std::int64_t n = a.modulus, L = n * c;
  const Eigen::Index rows = Eigen::Index(c - 1) * (c - 1);
  ModMat A = ModMat::Zero(rows, c - 1);
  for (int g = 1; g < c; ++g)
    for (int h = 1; h < c; ++h) {
      const Eigen::Index r = Eigen::Index(g - 1) * (c - 1) + (h - 1);
      A(r, g - 1) += 1;
      A(r, h - 1) += 1;
      const int gh = G.mul(g, h);
      if (gh) A(r, gh - 1) -= 1;
    }
  A = A.unaryExpr([&](std::int64_t v) { return mod_norm(v, L); });
  for (std::int64_t d = 1; d <= c; ++d) {
    if (c % d) continue;
    ModVec rhs(rows);
    for (int g = 1; g < c; ++g)
      for (int h = 1; h < c; ++h) rhs(Eigen::Index(g - 1) * (c - 1) + (h - 1)) = mod_norm(d * c % L * a(g, h), L);
    auto sol = solve_mod(A, rhs, L);
    if (!sol) continue;
    std::vector<std::int64_t> b(std::size_t(c), 0);
    for (int g = 1; g < c; ++g) b[std::size_t(g)] = (*sol)(g - 1);
    // δb̂ - d·c·α = L·t over Z; α' = -t mod d satisfies ζ_d^{α'} = ζ_{dL}^{δb̂}·ζ_n^{-α}·...
    TwoCocycle reduced = zero_cocycle(G, d);
    for (int g = 0; g < c; ++g)
      for (int h = 0; h < c; ++h) {
        const std::int64_t num = b[std::size_t(g)] + b[std::size_t(h)] - b[std::size_t(G.mul(g, h))] - d * c * a(g, h);
        if (mod_norm(num, L)) throw IntegralityViolation("gauge solution does not satisfy the cocycle equation");
        reduced.values[std::size_t(g) * std::size_t(c) + std::size_t(h)] = mod_norm(-(num / L), d);
      }
    auto base = tautological_characters(reduced);
    for (auto& p : base)
      for (int g = 0; g < c; ++g) p.values[std::size_t(g)] *= Cyclotomic::zeta(d * L, b[std::size_t(g)]);
    return base;
  }
  return tautological_characters(a);
}

}  // namespace fusion
