#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "fusion/groups.hpp"

namespace fusion {

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<char> done(n, 0);
  std::vector<ConjugacyClass> out;
  for (int x = 0; x < n; ++x) {
    if (done[x]) continue;
    ConjugacyClass c{x, {}};
    for (int y = 0; y < n; ++y) {
      int z = g.conj(y, x);
      if (!done[z]) done[z] = 1, c.members.push_back(z);
    }
    std::sort(c.members.begin(), c.members.end());
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> class_index(const FiniteGroup& g, const std::vector<ConjugacyClass>& classes) {
  std::vector<int> idx(g.order(), -1);
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (int x : classes[i].members) idx[x] = int(i);
  return idx;
}

bool Subgroup::contains(int g) const { return std::binary_search(elements.begin(), elements.end(), g); }

Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  Subgroup h{g, std::move(elements)};
  if (h.elements.empty() || h.elements[0] != 0) throw InvalidArgument("subgroup lacks the identity");
  for (int a : h.elements)
    for (int b : h.elements)
      if (!h.contains(g.mul(a, b))) throw InvalidArgument("subset is not closed");
  return h;
}

Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> el{0};
  in[0] = 1;
  for (std::size_t head = 0; head < el.size(); ++head)
    for (int s : gens) {
      int y = g.mul(el[head], s);
      if (!in[y]) in[y] = 1, el.push_back(y);
    }
  std::sort(el.begin(), el.end());
  return Subgroup{g, std::move(el)};
}

Subgroup whole_group(const FiniteGroup& g) {
  std::vector<int> el(g.order());
  std::iota(el.begin(), el.end(), 0);
  return Subgroup{g, std::move(el)};
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return Subgroup{g, {0}}; }

Subgroup centralizer(const FiniteGroup& g, int x) {
  std::vector<int> el;
  for (int y = 0; y < g.order(); ++y)
    if (g.commute(x, y)) el.push_back(y);
  return Subgroup{g, std::move(el)};
}

Subgroup center(const FiniteGroup& g) {
  std::vector<int> el;
  for (int y = 0; y < g.order(); ++y) {
    bool c = true;
    for (int x = 0; x < g.order() && c; ++x) c = g.commute(x, y);
    if (c) el.push_back(y);
  }
  return Subgroup{g, std::move(el)};
}

bool is_normal(const Subgroup& h) {
  const auto& g = h.parent;
  for (int y = 0; y < g.order(); ++y)
    for (int x : h.elements)
      if (!h.contains(g.conj(y, x))) return false;
  return true;
}

bool is_abelian(const Subgroup& h) {
  for (int a : h.elements)
    for (int b : h.elements)
      if (!h.parent.commute(a, b)) return false;
  return true;
}

Subgroup conjugate_subgroup(const Subgroup& h, int y) {
  std::vector<int> el;
  for (int x : h.elements) el.push_back(h.parent.conj(y, x));
  std::sort(el.begin(), el.end());
  return Subgroup{h.parent, std::move(el)};
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  std::vector<int> el;
  std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(), b.elements.end(),
                        std::back_inserter(el));
  return Subgroup{a.parent, std::move(el)};
}

Subgroup image_subgroup(const GroupHom& phi, const Subgroup& h) {
  std::vector<int> el;
  for (int x : h.elements) el.push_back(phi(x));
  std::sort(el.begin(), el.end());
  el.erase(std::unique(el.begin(), el.end()), el.end());
  return Subgroup{phi.target, std::move(el)};
}

std::vector<Subgroup> cyclic_subgroups(const FiniteGroup& g) {
  std::set<std::vector<int>> seen;
  std::vector<Subgroup> out;
  for (int x = 0; x < g.order(); ++x) {
    auto h = generated_subgroup(g, {x});
    if (seen.insert(h.elements).second) out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.order() != b.order() ? a.order() < b.order() : a.elements < b.elements;
  });
  return out;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
  // Every subgroup is a join of cyclic ones; close the cyclic list under joins.
  auto cyc = cyclic_subgroups(g);
  std::map<std::vector<int>, std::vector<int>> gens;  // elements -> generators
  std::vector<std::vector<int>> queue;
  for (auto& c : cyc) {
    std::vector<int> gen{c.elements.size() > 1 ? c.elements[1] : 0};
    // pick an actual generator of the cyclic group
    for (int x : c.elements)
      if (g.element_order(x) == c.order()) {
        gen = {x};
        break;
      }
    if (gens.emplace(c.elements, gen).second) queue.push_back(c.elements);
  }
  std::vector<int> cyc_gen;
  for (auto& c : cyc) cyc_gen.push_back(gens.at(c.elements)[0]);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto el = queue[head];
    const auto base = gens.at(el);
    for (int c : cyc_gen) {
      if (std::binary_search(el.begin(), el.end(), c)) continue;
      auto gg = base;
      gg.push_back(c);
      auto h = generated_subgroup(g, gg);
      if (gens.emplace(h.elements, gg).second) queue.push_back(h.elements);
    }
  }
  std::vector<Subgroup> out;
  for (auto& [el, _] : gens) out.push_back(Subgroup{g, el});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.order() != b.order() ? a.order() < b.order() : a.elements < b.elements;
  });
  return out;
}

std::vector<Subgroup> abelian_normal_subgroups(const FiniteGroup& g) {
  std::vector<Subgroup> out;
  for (auto& h : all_subgroups(g))
    if (is_abelian(h) && is_normal(h)) out.push_back(h);
  return out;
}

std::vector<Subgroup> central_subgroups(const FiniteGroup& g) {
  auto z = center(g);
  std::vector<Subgroup> out;
  for (auto& h : all_subgroups(g))
    if (std::includes(z.elements.begin(), z.elements.end(), h.elements.begin(), h.elements.end()))
      out.push_back(h);
  return out;
}

std::pair<FiniteGroup, GroupHom> subgroup_as_group(const Subgroup& h) {
  const int k = h.order();
  std::vector<int> pos(h.parent.order(), -1);
  for (int i = 0; i < k; ++i) pos[h.elements[i]] = i;
  std::vector<int> t(std::size_t(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) t[std::size_t(i) * k + j] = pos[h.parent.mul(h.elements[i], h.elements[j])];
  FiniteGroup sub(k, std::move(t));
  return {sub, GroupHom{sub, h.parent, h.elements}};
}

std::pair<FiniteGroup, GroupHom> quotient(const FiniteGroup& g, const Subgroup& n) {
  if (!is_normal(n)) throw NotNormal("quotient by a non-normal subgroup");
  std::vector<int> coset(g.order(), -1), rep;
  for (int x = 0; x < g.order(); ++x) {
    if (coset[x] >= 0) continue;
    for (int y : n.elements) coset[g.mul(x, y)] = int(rep.size());
    rep.push_back(x);
  }
  const int q = int(rep.size());
  std::vector<int> t(std::size_t(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) t[std::size_t(i) * q + j] = coset[g.mul(rep[i], rep[j])];
  FiniteGroup fac(q, std::move(t));
  return {fac, GroupHom{g, fac, coset}};
}

namespace {

std::vector<int> prime_factors(int n) {
  std::vector<int> ps;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

// Invariant factors of an abelian group from the counts of p^j-torsion.
std::vector<int> abelian_type(const FiniteGroup& a) {
  std::vector<std::vector<int>> parts;
  for (int p : prime_factors(a.order())) {
    std::vector<int> logs{0};  // log_p #{x : x^{p^j} = 1}
    for (long pj = p;; pj *= p) {
      int cnt = 0;
      for (int x = 0; x < a.order(); ++x)
        if (pj % a.element_order(x) == 0) ++cnt;
      int l = 0;
      for (int c = cnt; c > 1; c /= p) ++l;
      if (l == logs.back()) break;
      logs.push_back(l);
    }
    // number of cyclic factors of order >= p^j is logs[j] - logs[j-1]
    std::vector<int> mine;
    for (std::size_t j = 1; j < logs.size(); ++j) {
      int ge = logs[j] - logs[j - 1];
      int ge_next = j + 1 < logs.size() ? logs[j + 1] - logs[j] : 0;
      int pw = 1;
      for (std::size_t k = 0; k < j; ++k) pw *= p;
      for (int k = 0; k < ge - ge_next; ++k) mine.push_back(pw);
    }
    std::sort(mine.rbegin(), mine.rend());
    parts.push_back(mine);
  }
  std::size_t len = 0;
  for (auto& v : parts) len = std::max(len, v.size());
  std::vector<int> out;
  for (std::size_t i = 0; i < len; ++i) {
    int f = 1;
    for (auto& v : parts)
      if (i < v.size()) f *= v[i];
    out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<int> abelian_invariants(const FiniteGroup& g) {
  std::vector<int> comms;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) comms.push_back(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  auto derived = generated_subgroup(g, comms);
  return abelian_type(quotient(g, derived).first);
}

std::vector<std::pair<int, int>> order_histogram(const FiniteGroup& g) {
  std::map<int, int> h;
  for (int x = 0; x < g.order(); ++x) ++h[g.element_order(x)];
  return {h.begin(), h.end()};
}

std::vector<int> generating_set(const FiniteGroup& g) {
  std::vector<int> elems(g.order());
  std::iota(elems.begin(), elems.end(), 0);
  std::stable_sort(elems.begin(), elems.end(),
                   [&](int a, int b) { return g.element_order(a) > g.element_order(b); });
  std::vector<int> gens;
  auto h = trivial_subgroup(g);
  for (int x : elems) {
    if (h.order() == g.order()) break;
    if (h.contains(x)) continue;
    gens.push_back(x);
    h = generated_subgroup(g, gens);
  }
  return gens;
}

}  // namespace fusion
