#include <algorithm>
#include <numeric>
#include <set>

#include "fusion/cohomology.hpp"

namespace fusion {

CocycleClass make_class(std::shared_ptr<const CohomologyGroup> parent, std::vector<std::int64_t> exponents) {
  CocycleClass c;
  c.exponents = parent->normalize(std::move(exponents));
  c.realized = parent->realize(c.exponents);
  c.parent = std::move(parent);
  return c;
}

std::int64_t class_order(const CocycleClass& c) {
  std::int64_t r = 1;
  for (std::size_t i = 0; i < c.exponents.size(); ++i) {
    const std::int64_t s = c.parent->factors[i];
    r = std::lcm(r, s / std::gcd(s, c.exponents[i]));
  }
  return r;
}

std::vector<std::int64_t> pullback_class(const GroupHom& phi, const CohomologyGroup& source, const Cochain& w,
                                         std::int64_t M) {
  if (!phi.source.same_as(source.group)) throw MismatchedData("homomorphism source differs from the group");
  return source.class_of(pullback(phi, w, source.degree), M);
}

std::function<CocycleClass(const CocycleClass&)> induced_map(const GroupHom& phi,
                                                             std::shared_ptr<const CohomologyGroup> source) {
  return [phi, source](const CocycleClass& c) {
    if (!c.parent->group.same_as(phi.target)) throw MismatchedData("class does not live on the target group");
    if (c.parent->degree != source->degree) throw MismatchedData("degrees differ");
    return make_class(source, pullback_class(phi, *source, c.realized, c.parent->modulus));
  };
}

namespace {

// A few automorphisms generating the same group as the full list.
std::vector<GroupHom> generators_of(const std::vector<GroupHom>& auts) {
  std::vector<GroupHom> gens;
  if (auts.empty()) return gens;
  std::set<std::vector<int>> closure{auts[0].image};  // auts[0] may not be the identity
  closure.insert(identity_hom(auts[0].source).image);
  for (auto& a : auts) {
    if (closure.count(a.image)) continue;
    gens.push_back(a);
    std::vector<std::vector<int>> frontier(closure.begin(), closure.end());
    while (!frontier.empty()) {
      std::vector<std::vector<int>> next;
      for (auto& x : frontier)
        for (auto& gnr : gens) {
          std::vector<int> y(x.size());
          for (std::size_t i = 0; i < x.size(); ++i) y[i] = gnr.image[std::size_t(x[i])];
          if (closure.insert(y).second) next.push_back(std::move(y));
        }
      frontier = std::move(next);
    }
  }
  return gens;
}

}  // namespace

std::vector<Orbit> automorphism_orbits(const CohomologyGroup& h, long class_bound) {
  return automorphism_orbits(h, automorphisms(h.group), class_bound);
}

std::vector<Orbit> automorphism_orbits(const CohomologyGroup& h, const std::vector<GroupHom>& auts,
                                       long class_bound) {
  const std::size_t l = h.factors.size();
  BigInt total_big = h.size();
  if (total_big > class_bound)
    throw SizeBound("cohomology group has " + total_big.str() + " classes, above the bound " +
                    std::to_string(class_bound));
  const long total = static_cast<long>(total_big);
  // action matrices: column j = class of (generator j) ∘ a
  std::vector<std::vector<std::vector<std::int64_t>>> act;
  for (auto& a : generators_of(auts)) {
    std::vector<std::vector<std::int64_t>> cols;
    for (std::size_t j = 0; j < l; ++j) cols.push_back(pullback_class(a, h, h.generators[j], h.modulus));
    act.push_back(std::move(cols));
  }
  auto decode = [&](long x) {
    std::vector<std::int64_t> e(l);
    for (std::size_t i = l; i-- > 0;) e[i] = x % h.factors[i], x /= h.factors[i];
    return e;
  };
  auto encode = [&](const std::vector<std::int64_t>& e) {
    long x = 0;
    for (std::size_t i = 0; i < l; ++i) x = x * h.factors[i] + e[i];
    return x;
  };
  std::vector<char> seen(std::size_t(total), 0);
  std::vector<Orbit> out;
  for (long start = 0; start < total; ++start) {
    if (seen[std::size_t(start)]) continue;
    seen[std::size_t(start)] = 1;
    std::vector<long> orbit{start};
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      auto e = decode(orbit[head]);
      for (auto& cols : act) {
        std::vector<std::int64_t> y(l, 0);
        for (std::size_t j = 0; j < l; ++j)
          if (e[j])
            for (std::size_t i = 0; i < l; ++i) y[i] = (y[i] + e[j] * cols[j][i]) % h.factors[i];
        long code = encode(y);
        if (!seen[std::size_t(code)]) seen[std::size_t(code)] = 1, orbit.push_back(code);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    Orbit o;
    o.representative = decode(orbit[0]);
    for (long x : orbit) o.members.push_back(decode(x));
    out.push_back(std::move(o));
  }
  return out;
}

std::optional<CocycleClass> is_inflation(const CocycleClass& c, const Subgroup& n) {
  const auto& G = c.parent->group;
  if (!n.parent.same_as(G)) throw MismatchedData("subgroup of a different group");
  auto [Q, proj] = quotient(G, n);  // NotNormal propagates
  auto HQ = std::make_shared<const CohomologyGroup>(cohomology(Q, c.parent->degree));
  const std::size_t l = HQ->factors.size();
  std::vector<std::vector<std::int64_t>> img;
  for (std::size_t j = 0; j < l; ++j) img.push_back(pullback_class(proj, *c.parent, HQ->generators[j], HQ->modulus));
  const std::size_t lg = c.parent->factors.size();
  std::vector<std::int64_t> e(l, 0);
  for (;;) {
    std::vector<std::int64_t> y(lg, 0);
    for (std::size_t j = 0; j < l; ++j)
      for (std::size_t i = 0; i < lg; ++i) y[i] = (y[i] + e[j] * img[j][i]) % c.parent->factors[i];
    if (y == c.exponents) return make_class(HQ, e);
    std::size_t i = 0;
    while (i < l && ++e[i] == HQ->factors[i]) e[i++] = 0;
    if (i == l) return std::nullopt;
  }
}

bool restriction_is_trivial_cochain(const Cochain& w, const FiniteGroup& g, int n, const Subgroup& h) {
  std::vector<int> el;
  for (int x : h.elements)
    if (x != 0) el.push_back(x);
  if (el.empty()) return true;
  std::vector<std::size_t> idx(std::size_t(n), 0);
  std::vector<int> t(static_cast<std::size_t>(n));
  for (;;) {
    for (int i = 0; i < n; ++i) t[std::size_t(i)] = el[idx[std::size_t(i)]];
    if (w[std::size_t(tuple_index(g.order(), t.data(), n))] != 0) return false;
    int i = n - 1;
    while (i >= 0 && ++idx[std::size_t(i)] == el.size()) idx[std::size_t(i--)] = 0;
    if (i < 0) return true;
  }
}

bool restriction_is_trivial_cochain(const CocycleClass& c, const Subgroup& h) {
  return restriction_is_trivial_cochain(c.realized, c.parent->group, c.parent->degree, h);
}

namespace {

ModMat dense_boundary(const FiniteGroup& g, int n, std::int64_t m) {
  const long rows = tuple_count(g.order(), n), cols = tuple_count(g.order(), n - 1);
  ModMat d = ModMat::Zero(rows, cols);
  SparseRow row;
  int t[16];
  for (long i = 0; i < rows; ++i) {
    tuple_decode(g.order(), i, n, t);
    bar_boundary(g, t, n, row);
    for (auto& [c, v] : row) d(i, c) = mod_norm(v, m);
  }
  return d;
}

}  // namespace

BigInt cohomology_size_mod(const FiniteGroup& g, int n, std::int64_t m) {
  if (n < 1) throw InvalidArgument("degree must be >= 1");
  check_bar_size(g, n + 1, 20000);
  // cocycles: f with ∂_{n+1} f = 0; coboundaries: image of ∂_n on (n-1)-cochains
  const BigInt z = tuple_count(g.order(), n) ? kernel_size_mod(dense_boundary(g, n + 1, m), m) : BigInt(1);
  const long prev = tuple_count(g.order(), n - 1);
  BigInt all = 1;
  for (long i = 0; i < prev; ++i) all *= m;
  const BigInt b = tuple_count(g.order(), n) ? all / kernel_size_mod(dense_boundary(g, n, m), m) : BigInt(1);
  return z / b;
}

}  // namespace fusion
