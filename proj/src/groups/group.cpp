#include <cctype>
#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "fusion/groups.hpp"

namespace fusion {

FiniteGroup::FiniteGroup() {
  auto d = std::make_shared<Data>();
  d->mul = {0};
  d->inv = {0};
  d->ord = {1};
  d_ = std::move(d);
}

FiniteGroup::FiniteGroup(int order, std::vector<int> table, bool check_assoc) {
  if (order < 1 || table.size() != std::size_t(order) * order)
    throw InvalidArgument("Cayley table has the wrong size");
  auto d = std::make_shared<Data>();
  d->n = order;
  d->mul = std::move(table);
  const int n = order;
  auto m = [&](int a, int b) { return d->mul[std::size_t(a) * n + b]; };
  for (int a = 0; a < n; ++a) {
    if (m(0, a) != a || m(a, 0) != a) throw InvalidArgument("identity is not at index 0");
    std::vector<char> seen(n, 0);
    for (int b = 0; b < n; ++b) {
      int c = m(a, b);
      if (c < 0 || c >= n || seen[c]) throw InvalidArgument("table row is not a permutation");
      seen[c] = 1;
    }
  }
  d->inv.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (m(a, b) == 0) {
        if (m(b, a) != 0) throw InvalidArgument("one-sided inverse");
        d->inv[a] = b;
      }
  if (check_assoc)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (m(m(a, b), c) != m(a, m(b, c))) throw InvalidArgument("table is not associative");
  d->ord.assign(n, 1);
  int e = 1;
  for (int a = 0; a < n; ++a) {
    int k = 1;
    for (int x = a; x != 0; x = m(x, a)) ++k;
    d->ord[a] = k;
    e = std::lcm(e, d->ord[a]);
  }
  d->exponent = e;
  d_ = std::move(d);
}

int FiniteGroup::pow(int a, long k) const {
  const long o = element_order(a);
  k %= o;
  if (k < 0) k += o;
  int r = 0;
  for (long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = a + 1; b < order(); ++b)
      if (!commute(a, b)) return false;
  return true;
}

bool GroupHom::is_homomorphism() const {
  if (int(image.size()) != source.order() || image[0] != 0) return false;
  for (int a = 0; a < source.order(); ++a)
    for (int b = 0; b < source.order(); ++b)
      if (image[source.mul(a, b)] != target.mul(image[a], image[b])) return false;
  return true;
}

bool GroupHom::is_bijective() const {
  if (source.order() != target.order()) return false;
  std::vector<char> hit(target.order(), 0);
  for (int x : image) {
    if (hit[x]) return false;
    hit[x] = 1;
  }
  return true;
}

GroupHom identity_hom(const FiniteGroup& g) {
  std::vector<int> img(g.order());
  std::iota(img.begin(), img.end(), 0);
  return {g, g, std::move(img)};
}

GroupHom compose(const GroupHom& after, const GroupHom& before) {
  std::vector<int> img(before.source.order());
  for (int x = 0; x < before.source.order(); ++x) img[x] = after.image[before.image[x]];
  return {before.source, after.target, std::move(img)};
}

GroupHom inverse_hom(const GroupHom& iso) {
  std::vector<int> img(iso.target.order());
  for (int x = 0; x < iso.source.order(); ++x) img[iso.image[x]] = x;
  return {iso.target, iso.source, std::move(img)};
}

// ---- permutations ---------------------------------------------------------

Perm parse_permutation(const std::string& s) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  int degree = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    if (s[i] != '(') throw InvalidArgument("bad permutation '" + s + "'");
    ++i;
    std::vector<int> cyc;
    std::string num;
    for (; i < s.size() && s[i] != ')'; ++i) {
      char c = s[i];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        num += c;
      } else if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
        if (!num.empty()) cyc.push_back(std::stoi(num)), num.clear();
      } else {
        throw InvalidArgument("bad permutation '" + s + "'");
      }
    }
    if (i == s.size()) throw InvalidArgument("unclosed cycle in '" + s + "'");
    ++i;
    if (!num.empty()) cyc.push_back(std::stoi(num));
    for (int x : cyc) {
      if (x < 1) throw InvalidArgument("points are numbered from 1");
      degree = std::max(degree, x);
    }
    cycles.push_back(std::move(cyc));
  }
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  std::vector<char> used(degree, 0);
  for (auto& c : cycles)
    for (std::size_t k = 0; k < c.size(); ++k) {
      int from = c[k] - 1;
      if (used[from]) throw InvalidArgument("repeated point in '" + s + "'");
      used[from] = 1;
      p[from] = c[(k + 1) % c.size()] - 1;
    }
  return p;
}

std::string format_permutation(const Perm& p) {
  std::ostringstream os;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == int(i)) continue;
    os << '(';
    for (int j = int(i); !seen[j]; j = p[j]) {
      if (j != int(i)) os << ',';
      os << j + 1;
      seen[j] = 1;
    }
    os << ')';
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

FiniteGroup group_from_generators(const std::vector<Perm>& generators, int bound) {
  std::size_t deg = 0;
  for (auto& g : generators) deg = std::max(deg, g.size());
  auto pad = [&](Perm p) {
    for (std::size_t i = p.size(); i < deg; ++i) p.push_back(int(i));
    return p;
  };
  std::vector<Perm> gens;
  for (auto& g : generators) gens.push_back(pad(g));
  // a·b applies a first, then b
  auto compose_perm = [&](const Perm& a, const Perm& b) {
    Perm r(deg);
    for (std::size_t i = 0; i < deg; ++i) r[i] = b[a[i]];
    return r;
  };
  Perm id(deg);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> elems{id};
  std::map<Perm, int> index{{id, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (auto& s : gens) {
      Perm y = compose_perm(elems[head], s);
      if (index.emplace(y, int(elems.size())).second) {
        elems.push_back(std::move(y));
        if (int(elems.size()) > bound)
          throw ClosureBound("generated group exceeds " + std::to_string(bound) + " elements");
      }
    }
  const int n = int(elems.size());
  std::vector<int> table(std::size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[std::size_t(a) * n + b] = index.at(compose_perm(elems[a], elems[b]));
  return FiniteGroup(n, std::move(table));
}

FiniteGroup cyclic_group(int n) {
  std::vector<int> t(std::size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[std::size_t(a) * n + b] = (a + b) % n;
  return FiniteGroup(n, std::move(t));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, int bound) {
  const int na = a.order(), nb = b.order(), n = na * nb;
  if (n > bound) throw ClosureBound("direct product exceeds " + std::to_string(bound) + " elements");
  std::vector<int> t(std::size_t(n) * n);
  // (x, y) sits at x*nb + y
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      t[std::size_t(x) * n + y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  return FiniteGroup(n, std::move(t));
}

std::pair<GroupHom, GroupHom> product_injections(const FiniteGroup& a, const FiniteGroup& b,
                                                 const FiniteGroup& prod) {
  std::vector<int> ia(a.order()), ib(b.order());
  for (int x = 0; x < a.order(); ++x) ia[x] = x * b.order();
  for (int y = 0; y < b.order(); ++y) ib[y] = y;
  return {GroupHom{a, prod, ia}, GroupHom{b, prod, ib}};
}

}  // namespace fusion
