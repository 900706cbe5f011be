#include <algorithm>
#include <functional>

#include "fusion/groups.hpp"

namespace fusion {
namespace {

// Spanning tree of the Cayley graph: x = parent[x] * gens[via[x]].
struct Words {
  std::vector<int> bfs, parent, via;
};

Words words(const FiniteGroup& g, const std::vector<int>& gens) {
  Words w;
  w.parent.assign(g.order(), -1);
  w.via.assign(g.order(), -1);
  w.bfs.push_back(0);
  w.parent[0] = 0;
  for (std::size_t h = 0; h < w.bfs.size(); ++h)
    for (std::size_t s = 0; s < gens.size(); ++s) {
      int y = g.mul(w.bfs[h], gens[s]);
      if (w.parent[y] < 0) {
        w.parent[y] = w.bfs[h];
        w.via[y] = int(s);
        w.bfs.push_back(y);
      }
    }
  return w;
}

// Extends generator images to a map and checks that it respects every edge
// of the Cayley graph, which makes it a homomorphism.
bool extend(const FiniteGroup& a, const FiniteGroup& b, const Words& w, const std::vector<int>& gens,
            const std::vector<int>& img, std::vector<int>& out) {
  out.assign(a.order(), 0);
  for (std::size_t i = 1; i < w.bfs.size(); ++i) {
    int x = w.bfs[i];
    out[x] = b.mul(out[w.parent[x]], img[w.via[x]]);
  }
  for (int x = 0; x < a.order(); ++x)
    for (std::size_t s = 0; s < gens.size(); ++s)
      if (out[a.mul(x, gens[s])] != b.mul(out[x], img[s])) return false;
  return true;
}

// Calls f for every homomorphism a -> b (bijections only when `iso`); stops
// when f returns false.
void search(const FiniteGroup& a, const FiniteGroup& b, bool iso,
            const std::function<bool(const std::vector<int>&)>& f) {
  auto gens = generating_set(a);
  auto w = words(a, gens);
  std::vector<std::vector<int>> cand(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const int o = a.element_order(gens[i]);
    for (int y = 0; y < b.order(); ++y)
      if (iso ? b.element_order(y) == o : o % b.element_order(y) == 0) cand[i].push_back(y);
  }
  std::vector<int> img(gens.size()), out;
  std::vector<char> hit;
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == gens.size()) {
      if (!extend(a, b, w, gens, img, out)) return true;
      if (iso) {
        hit.assign(b.order(), 0);
        for (int x : out) {
          if (hit[x]) return true;
          hit[x] = 1;
        }
      }
      return f(out);
    }
    for (int y : cand[i]) {
      img[i] = y;
      if (!rec(i + 1)) return false;
    }
    return true;
  };
  rec(0);
}

}  // namespace

std::vector<GroupHom> automorphisms(const FiniteGroup& g) {
  std::vector<std::vector<int>> imgs;
  search(g, g, true, [&](const std::vector<int>& m) {
    imgs.push_back(m);
    return true;
  });
  std::sort(imgs.begin(), imgs.end());
  std::vector<GroupHom> out;
  for (auto& m : imgs) out.push_back(GroupHom{g, g, std::move(m)});
  return out;
}

std::vector<GroupHom> homomorphisms(const FiniteGroup& a, const FiniteGroup& b) {
  std::vector<std::vector<int>> imgs;
  search(a, b, false, [&](const std::vector<int>& m) {
    imgs.push_back(m);
    return true;
  });
  std::sort(imgs.begin(), imgs.end());
  imgs.erase(std::unique(imgs.begin(), imgs.end()), imgs.end());
  std::vector<GroupHom> out;
  for (auto& m : imgs) out.push_back(GroupHom{a, b, std::move(m)});
  return out;
}

std::optional<GroupHom> is_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order() || order_histogram(a) != order_histogram(b)) return std::nullopt;
  if (a.is_abelian() != b.is_abelian()) return std::nullopt;
  std::optional<GroupHom> found;
  search(a, b, true, [&](const std::vector<int>& m) {
    found = GroupHom{a, b, m};
    return false;
  });
  return found;
}

}  // namespace fusion
