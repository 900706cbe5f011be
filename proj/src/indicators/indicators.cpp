#include <numeric>

#include "fusion/errors.hpp"
#include "fusion/indicators.hpp"
#include "fusion/modular.hpp"

namespace fusion {
namespace {

std::vector<int> local_index(const FiniteGroup& g, const GroupHom& incl) {
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (int i = 0; i < incl.source.order(); ++i) local[std::size_t(incl(i))] = i;
  return local;
}

std::int64_t alpha_at(const DenseCocycle& w, int h, int a, int b) {
  const FiniteGroup& G = w.group;
  return w(a, b, h) - w(a, G.conj(b, h), b) + w(G.conj(G.mul(a, b), h), a, b);
}

// exponent vectors of the character values at a common level with the cocycle modulus
struct CharExps {
  std::int64_t level = 1;
  std::vector<SparseExps> exps;  // per element of the subgroup
};

CharExps char_exps(const ProjectiveCharacter& c, std::int64_t modulus) {
  CharExps e;
  e.level = modulus;
  for (auto& v : c.values) e.level = std::lcm(e.level, v.conductor());
  for (auto& v : c.values) e.exps.push_back(integer_exponents(v, e.level));
  return e;
}

Cyclotomic finish(const CycloSum& s, std::int64_t den, std::int64_t m) {
  Cyclotomic v = s.value(den);
  if (m != 0 && !v.is_algebraic_integer()) throw IntegralityViolation("indicator is not an algebraic integer");
  if (m == 0 && !(v.is_integer() && v.to_integer() && *v.to_integer() > 0))
    throw IntegralityViolation("ν_0 is not a positive integer");
  return v;
}

}  // namespace

PiTable pi_table(const DenseCocycle& w) {
  const FiniteGroup& G = w.group;
  PiTable p{G, w.modulus, {}};
  for (int x = 0; x < G.order(); ++x) {
    const int o = G.element_order(x);
    std::vector<std::int64_t> v(std::size_t(o) + 1, 0);
    int xj = 0;
    for (int j = 0; j < o; ++j) {
      v[std::size_t(j) + 1] = mod_norm(v[std::size_t(j)] + w(x, xj, x), w.modulus);
      xj = G.mul(xj, x);
    }
    p.values.push_back(std::move(v));
  }
  return p;
}

std::int64_t pi_at(const PiTable& p, int x, std::int64_t m) {
  const auto& v = p.values[std::size_t(x)];
  const std::int64_t o = std::int64_t(v.size()) - 1;
  std::int64_t q = m / o, r = m % o;
  if (r < 0) r += o, --q;
  return mod_norm(mod_norm(q, p.modulus) * v[std::size_t(o)] + v[std::size_t(r)], p.modulus);
}

Cyclotomic fs_pointed(const DenseCocycle& w, const PiTable& p, int g, std::int64_t m) {
  const FiniteGroup& G = w.group;
  const std::int64_t o = G.element_order(g);
  if (m % o) return Cyclotomic(0);
  return Cyclotomic::zeta(w.modulus, pi_at(p, g, -m));
}

std::int64_t fs_exponent(const DenseCocycle& w, const PiTable& p) {
  std::int64_t e = 1;
  for (int x = 0; x < w.group.order(); ++x) {
    const std::int64_t o = w.group.element_order(x);
    const std::int64_t per = p.values[std::size_t(x)][std::size_t(o)];
    e = std::lcm(e, o * (w.modulus / std::gcd(w.modulus, per)));
  }
  return e;
}

std::int64_t fs_exponent(const DenseCocycle& w) { return fs_exponent(w, pi_table(w)); }

std::vector<SimpleDoubleObject> double_simples(const DenseCocycle& w) {
  const FiniteGroup& G = w.group;
  std::vector<SimpleDoubleObject> out;
  for (auto& cls : conjugacy_classes(G)) {
    const int g = cls.representative;
    Subgroup c = centralizer(G, g);
    auto [cg, incl] = subgroup_as_group(c);
    TwoCocycle a = restrict_cocycle(two_cocycle_alpha_g(w, g), incl);
    auto local = local_index(G, incl);
    for (auto& chi : alpha_projective_characters(a)) {
      SimpleDoubleObject s;
      s.g = g;
      s.class_size = int(cls.members.size());
      s.centralizer = c;
      s.cocycle = a;
      s.local = local;
      s.character = std::move(chi);
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<Cyclotomic> fs_double_sequence(const DenseCocycle& w, const PiTable& p, const SimpleDoubleObject& s,
                                           std::int64_t count) {
  const FiniteGroup& G = w.group;
  const int n = G.order();
  const CharExps ce = char_exps(s.character, w.modulus);
  const std::int64_t scale = ce.level / w.modulus;
  const std::int64_t csize = s.centralizer.order();
  const std::size_t un = static_cast<std::size_t>(n);
  std::vector<int> xm(un, 0), gxm(un, 0), gx(un);
  for (int x = 0; x < n; ++x) gx[std::size_t(x)] = G.mul(s.g, x);
  std::vector<Cyclotomic> out;
  for (std::int64_t m = 0; m < count; ++m) {
    CycloSum sum(ce.level);
    for (int x = 0; x < n; ++x) {
      const int h = xm[std::size_t(x)];
      if (gxm[std::size_t(x)] != h) continue;
      const int loc = s.local[std::size_t(h)];
      if (loc < 0) throw IntegralityViolation("x^m outside the centralizer");
      const std::int64_t e = alpha_at(w, h, s.g, x) + pi_at(p, gx[std::size_t(x)], m) - pi_at(p, x, m);
      sum.add_shifted(ce.exps[std::size_t(loc)], mod_norm(e, w.modulus) * scale);
    }
    out.push_back(finish(sum, csize, m));
    for (int x = 0; x < n; ++x) {
      xm[std::size_t(x)] = G.mul(xm[std::size_t(x)], x);
      gxm[std::size_t(x)] = G.mul(gxm[std::size_t(x)], gx[std::size_t(x)]);
    }
  }
  return out;
}

Cyclotomic fs_double(const DenseCocycle& w, const PiTable& p, const SimpleDoubleObject& s, std::int64_t m) {
  const FiniteGroup& G = w.group;
  if (!s.cocycle.group.same_as(subgroup_as_group(s.centralizer).first) || s.cocycle.modulus != w.modulus)
    throw MismatchedData("simple object does not come from this cocycle");
  {
    auto [cg, incl] = subgroup_as_group(s.centralizer);
    if (restrict_cocycle(two_cocycle_alpha_g(w, s.g), incl).values != s.cocycle.values)
      throw MismatchedData("simple object does not carry α_g of this cocycle");
  }
  if (m < 0) {
    // ν_m for negative m through periodicity
    const std::int64_t e = fs_exponent(w, p);
    m = mod_norm(m, e);
  }
  const CharExps ce = char_exps(s.character, w.modulus);
  const std::int64_t scale = ce.level / w.modulus;
  CycloSum sum(ce.level);
  for (int x = 0; x < G.order(); ++x) {
    const int h = G.pow(x, m), gx = G.mul(s.g, x);
    if (G.pow(gx, m) != h) continue;
    const std::int64_t e = alpha_at(w, h, s.g, x) + pi_at(p, gx, m) - pi_at(p, x, m);
    sum.add_shifted(ce.exps[std::size_t(s.local[std::size_t(h)])], mod_norm(e, w.modulus) * scale);
  }
  return finish(sum, s.centralizer.order(), m);
}

Cyclotomic twist(const SimpleDoubleObject& s) {
  Cyclotomic t = s.chi(s.g) / Cyclotomic(s.character.dim);
  if (!t.root_of_unity()) throw IntegralityViolation("twist is not a root of unity");
  return t;
}

bool is_adapted(const DenseCocycle& w, const Subgroup& h) {
  const int n = w.group.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int k : h.elements)
        if (w(x, y, k)) return false;
  return true;
}

DenseCocycle adapt_cocycle(const DenseCocycle& w, const Subgroup& h) {
  const FiniteGroup& G = w.group;
  const int n = G.order();
  for (int a : h.elements)
    for (int b : h.elements)
      for (int c : h.elements)
        if (w(a, b, c)) throw InvalidArgument("cocycle does not vanish on the subgroup");
  if (is_adapted(w, h)) return w;
  const std::int64_t M = w.modulus;
  // unknowns κ(a, b), a, b != 1
  const Eigen::Index cols = Eigen::Index(n - 1) * (n - 1);
  auto var = [&](int a, int b) { return Eigen::Index(a - 1) * (n - 1) + (b - 1); };
  std::vector<int> hs;
  for (int k : h.elements)
    if (k) hs.push_back(k);
  const Eigen::Index rows = cols * Eigen::Index(hs.size());
  ModMat A = ModMat::Zero(rows, cols);
  ModVec rhs(rows);
  Eigen::Index r = 0;
  for (int x = 1; x < n; ++x)
    for (int y = 1; y < n; ++y)
      for (int k : hs) {
        // κ(y,k) - κ(xy,k) + κ(x,yk) - κ(x,y) = -ω(x,y,k)
        auto add = [&](int a, int b, std::int64_t s) {
          if (a && b) A(r, var(a, b)) = mod_norm(A(r, var(a, b)) + s, M);
        };
        add(y, k, 1);
        add(G.mul(x, y), k, -1);
        add(x, G.mul(y, k), 1);
        add(x, y, -1);
        rhs(r) = mod_norm(-w(x, y, k), M);
        ++r;
      }
  auto sol = solve_mod(A, rhs, M);
  if (!sol) throw NoSolution("no 2-cochain adapts the cocycle to the subgroup");
  auto kappa = [&](int a, int b) -> std::int64_t { return a && b ? (*sol)(var(a, b)) : 0; };
  DenseCocycle out = w;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const std::int64_t d = kappa(y, z) - kappa(G.mul(x, y), z) + kappa(x, G.mul(y, z)) - kappa(x, y);
        auto& v = out.values[(std::size_t(x) * std::size_t(n) + std::size_t(y)) * std::size_t(n) + std::size_t(z)];
        v = mod_norm(v + d, M);
      }
  if (!is_adapted(out, h)) throw NoSolution("adapted cocycle check failed");
  return out;
}

std::vector<SimpleGtObject> gt_simples(const DenseCocycle& w, const Subgroup& h) {
  if (!is_adapted(w, h)) throw NotAdapted("cocycle is not adapted to the subgroup");
  const FiniteGroup& G = w.group;
  const int n = G.order();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<SimpleGtObject> out;
  for (int g = 0; g < n; ++g) {
    if (seen[std::size_t(g)]) continue;
    for (int a : h.elements)
      for (int b : h.elements) seen[std::size_t(G.mul(G.mul(a, g), b))] = 1;
    std::vector<int> s;
    for (int k : h.elements)
      if (h.contains(G.mul(G.mul(G.inv(g), k), g))) s.push_back(k);
    Subgroup stab = make_subgroup(G, s);
    auto [sg, incl] = subgroup_as_group(stab);
    TwoCocycle a = restrict_cocycle(two_cocycle_omega_g(w, g), incl);
    auto local = local_index(G, incl);
    std::vector<char> coset(static_cast<std::size_t>(n), 0);
    for (int k : h.elements) coset[std::size_t(G.mul(g, k))] = 1;
    for (auto& chi : alpha_projective_characters(a)) {
      SimpleGtObject o;
      o.g = g;
      o.orbit_size = h.order() / stab.order();
      o.stabilizer = stab;
      o.cocycle = a;
      o.local = local;
      o.coset = coset;
      o.character = std::move(chi);
      out.push_back(std::move(o));
    }
  }
  return out;
}

Cyclotomic fs_gt(const DenseCocycle& w, const PiTable& p, const SimpleGtObject& s, std::int64_t m) {
  const FiniteGroup& G = w.group;
  const CharExps ce = char_exps(s.character, w.modulus);
  const std::int64_t scale = ce.level / w.modulus;
  CycloSum sum(ce.level);
  for (int x = 0; x < G.order(); ++x) {
    if (!s.coset[std::size_t(x)]) continue;
    const int y = G.pow(x, -m);
    const int loc = s.local[std::size_t(y)];
    if (loc < 0) continue;
    sum.add_shifted(ce.exps[std::size_t(loc)], pi_at(p, x, -m) * scale);
  }
  return finish(sum, s.stabilizer.order(), m);
}

}  // namespace fusion
