#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "fusion/classify.hpp"
#include "fusion/errors.hpp"

namespace fusion {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

template <class F>
void parallel_for(std::size_t n, int jobs, F f) {
  const std::size_t width = std::max<std::size_t>(1, std::min<std::size_t>(std::size_t(std::max(jobs, 1)), n));
  if (width == 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < width; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mu);
          if (!err) err = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

std::string row_key(const Cyclotomic& theta, const std::vector<Cyclotomic>& nu) {
  std::string k = theta.str();
  for (auto& v : nu) k += ';' + v.str();
  return k;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a), b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// same-table clusters, each sorted, ordered by first member
std::vector<std::vector<std::size_t>> table_clusters(const std::vector<ClassifyEntry>& entries) {
  std::map<std::string, std::vector<std::size_t>> by;
  for (std::size_t i = 0; i < entries.size(); ++i) by[entries[i].table.key()].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [k, v] : by) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

std::string entry_label(int order, const ClassifyEntry& e) {
  return catalog_entry(order, e.index).name + "[" + std::to_string(e.index) + "]/w" + std::to_string(e.orbit);
}

std::string elements_str(const Subgroup& h) {
  std::string s;
  for (int x : h.elements) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "{" + s + "}";
}

fs::path table_cache_file(int order, int index) {
  const char* dir = std::getenv("FUSION_CACHE_DIR");
  if (!dir || !*dir) return {};
  return fs::path(dir) / ("tables-" + catalog_hash() + "-" + std::to_string(order) + "-" + std::to_string(index) + ".json");
}

}  // namespace

std::string InvariantTable::key() const {
  std::string k = "e=" + std::to_string(fsexp);
  for (auto& r : rows) k += '|' + row_key(r.theta, r.nu) + '*' + std::to_string(r.multiplicity);
  return k;
}

int InvariantTable::simples() const {
  int s = 0;
  for (auto& r : rows) s += r.multiplicity;
  return s;
}

InvariantTable parse_invariant_table(const std::string& key) {
  auto parts = split(key, '|');
  if (parts.empty() || parts[0].rfind("e=", 0) != 0) throw InvalidArgument("not an invariant table: " + key);
  InvariantTable t;
  t.fsexp = std::stoll(parts[0].substr(2));
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const auto star = parts[i].rfind('*');
    auto cells = split(parts[i].substr(0, star), ';');
    InvariantRow r;
    r.theta = Cyclotomic::parse(cells.at(0));
    for (std::size_t j = 1; j < cells.size(); ++j) r.nu.push_back(Cyclotomic::parse(cells[j]));
    r.multiplicity = std::stoi(parts[i].substr(star + 1));
    t.rows.push_back(std::move(r));
  }
  return t;
}

InvariantTable invariant_table(const DenseCocycle& w) {
  PiTable p = pi_table(w);
  InvariantTable t;
  t.fsexp = fs_exponent(w, p);
  std::map<std::string, InvariantRow> rows;
  for (auto& s : double_simples(w)) {
    InvariantRow r{twist(s), fs_double_sequence(w, p, s, t.fsexp), 1};
    auto k = row_key(r.theta, r.nu);
    auto it = rows.find(k);
    if (it == rows.end()) rows.emplace(k, std::move(r));
    else ++it->second.multiplicity;
  }
  for (auto& [k, r] : rows) t.rows.push_back(std::move(r));
  return t;
}

std::string PointedTable::key() const {
  std::string k;
  for (auto& [nu, m] : rows) {
    std::string r;
    for (auto& v : nu) r += (r.empty() ? "" : ";") + v.str();
    k += r + '*' + std::to_string(m) + '|';
  }
  return k;
}

namespace {
PointedTable tally(std::vector<std::vector<Cyclotomic>> seqs) {
  std::map<std::string, std::pair<std::vector<Cyclotomic>, int>> by;
  for (auto& s : seqs) {
    std::string k;
    for (auto& v : s) k += v.str() + ';';
    auto it = by.find(k);
    if (it == by.end()) by.emplace(k, std::make_pair(std::move(s), 1));
    else ++it->second.second;
  }
  PointedTable t;
  for (auto& [k, r] : by) t.rows.push_back(std::move(r));
  return t;
}
}  // namespace

PointedTable pointed_indicator_table(const DenseCocycle& w, std::int64_t count) {
  PiTable p = pi_table(w);
  std::vector<std::vector<Cyclotomic>> seqs;
  for (int g = 0; g < w.group.order(); ++g) {
    std::vector<Cyclotomic> nu;
    for (std::int64_t m = 0; m < count; ++m) nu.push_back(fs_pointed(w, p, g, m));
    seqs.push_back(std::move(nu));
  }
  return tally(std::move(seqs));
}

PointedTable pointed_indicator_table(const DenseCocycle& w) { return pointed_indicator_table(w, fs_exponent(w)); }

std::optional<PointedTable> gt_pointed_table(const DenseCocycle& adapted, const Subgroup& h, std::int64_t count) {
  auto simples = gt_simples(adapted, h);
  if (int(simples.size()) != adapted.group.order()) return std::nullopt;
  for (auto& s : simples)
    if (s.dim() != 1) return std::nullopt;
  PiTable p = pi_table(adapted);
  std::vector<std::vector<Cyclotomic>> seqs;
  for (auto& s : simples) {
    std::vector<Cyclotomic> nu;
    for (std::int64_t m = 0; m < count; ++m) nu.push_back(fs_gt(adapted, p, s, m));
    seqs.push_back(std::move(nu));
  }
  return tally(std::move(seqs));
}

std::vector<ClassifyEntry> classify_entries(int order, const ClassifyOptions& opt) {
  const int groups = catalog_count(order);
  std::vector<std::shared_ptr<const CohomologyGroup>> coh(static_cast<std::size_t>(groups));
  std::vector<std::vector<ClassifyEntry>> per_group(static_cast<std::size_t>(groups));
  std::vector<char> cached(static_cast<std::size_t>(groups), 0);
  for (int i = 0; i < groups; ++i) {
    auto file = table_cache_file(order, i + 1);
    if (file.empty()) continue;
    std::ifstream in(file);
    if (!in) continue;
    try {
      json j = json::parse(in);
      for (auto& e : j.at("orbits")) {
        ClassifyEntry ce;
        ce.index = i + 1;
        ce.orbit = e.at("orbit").get<int>();
        ce.representative = e.at("representative").get<std::vector<std::int64_t>>();
        ce.orbit_size = e.at("size").get<int>();
        ce.table = parse_invariant_table(e.at("table").get<std::string>());
        per_group[std::size_t(i)].push_back(std::move(ce));
      }
      cached[std::size_t(i)] = 1;
    } catch (const std::exception&) {
      per_group[std::size_t(i)].clear();
    }
  }
  std::vector<int> todo;
  for (int i = 0; i < groups; ++i)
    if (!cached[std::size_t(i)]) todo.push_back(i);
  parallel_for(todo.size(), opt.jobs, [&](std::size_t k) {
    const int i = todo[k];
    coh[std::size_t(i)] = catalog_cohomology(order, i + 1, 3, opt.bar_bound);
  });
  struct Job { int group; std::size_t slot; };
  std::vector<Job> jobs;
  for (int i : todo) {
    auto orbits = automorphism_orbits(*coh[std::size_t(i)]);
    auto& list = per_group[std::size_t(i)];
    for (std::size_t j = 0; j < orbits.size(); ++j) {
      ClassifyEntry ce;
      ce.index = i + 1;
      ce.orbit = int(j) + 1;
      ce.representative = orbits[j].representative;
      ce.orbit_size = int(orbits[j].members.size());
      list.push_back(std::move(ce));
      jobs.push_back({i, j});
    }
  }
  parallel_for(jobs.size(), opt.jobs, [&](std::size_t k) {
    auto& e = per_group[std::size_t(jobs[k].group)][jobs[k].slot];
    e.table = invariant_table(dense_cocycle(make_class(coh[std::size_t(jobs[k].group)], e.representative)));
  });
  for (int i : todo) {
    auto file = table_cache_file(order, i + 1);
    if (file.empty()) continue;
    json j;
    j["orbits"] = json::array();
    for (auto& e : per_group[std::size_t(i)])
      j["orbits"].push_back(
          {{"orbit", e.orbit}, {"representative", e.representative}, {"size", e.orbit_size}, {"table", e.table.key()}});
    std::error_code ec;
    fs::create_directories(file.parent_path(), ec);
    fs::path tmp = file;
    tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
    {
      std::ofstream out(tmp);
      out << j.dump();
    }
    fs::rename(tmp, file, ec);
  }
  std::vector<ClassifyEntry> out;
  for (auto& v : per_group)
    for (auto& e : v) out.push_back(std::move(e));
  return out;
}

std::vector<ClassifyLink> corcentral_links(int order, const std::vector<ClassifyEntry>& entries) {
  std::vector<ClassifyLink> links;
  std::map<std::pair<int, std::vector<int>>, int> product_index;
  for (auto& cluster : table_clusters(entries)) {
    if (cluster.size() < 2) continue;
    for (std::size_t i : cluster) {
      const auto& e = entries[i];
      FiniteGroup g = catalog_group(order, e.index);
      CocycleClass c = make_class(catalog_cohomology(order, e.index, 3), e.representative);
      for (auto& a : central_subgroups(g)) {
        if (a.order() == 1) continue;
        if (!is_inflation(c, a)) continue;
        auto pk = std::make_pair(e.index, a.elements);
        auto it = product_index.find(pk);
        if (it == product_index.end()) {
          FiniteGroup prod = direct_product(subgroup_as_group(a).first, quotient(g, a).first);
          int found = 0;
          for (int j = 1; j <= catalog_count(order) && !found; ++j)
            if (is_isomorphic(prod, catalog_group(order, j))) found = j;
          it = product_index.emplace(pk, found).first;
        }
        const int target = it->second;
        std::vector<std::size_t> match;
        for (std::size_t j : cluster)
          if (entries[j].index == target) match.push_back(j);
        if (match.size() != 1 || match[0] == i) continue;
        links.push_back({i, match[0], LinkKind::Corcentral,
                         "central A=" + elements_str(a) + " of order " + std::to_string(a.order()) + ", ω inflated from G/A"});
      }
    }
  }
  return links;
}

std::vector<ClassifyLink> gt_pointed_links(int order, const std::vector<ClassifyEntry>& entries,
                                           const std::vector<std::vector<std::size_t>>& pending) {
  std::vector<ClassifyLink> links;
  std::map<std::size_t, std::string> pointed;
  auto pointed_key = [&](std::size_t j) {
    auto it = pointed.find(j);
    if (it != pointed.end()) return it->second;
    const auto& e = entries[j];
    DenseCocycle w = dense_cocycle(make_class(catalog_cohomology(order, e.index, 3), e.representative));
    return pointed[j] = pointed_indicator_table(w, e.table.fsexp).key();
  };
  for (auto& cluster : pending) {
    for (std::size_t i : cluster) {
      const auto& e = entries[i];
      CocycleClass c = make_class(catalog_cohomology(order, e.index, 3), e.representative);
      DenseCocycle w = dense_cocycle(c);
      for (auto& h : abelian_normal_subgroups(w.group)) {
        if (h.order() == 1 || !restriction_is_trivial_cochain(c, h)) continue;
        auto pt = gt_pointed_table(adapt_cocycle(w, h), h, e.table.fsexp);
        if (!pt) continue;
        const auto k = pt->key();
        std::vector<std::size_t> match;
        for (std::size_t j : cluster)
          if (pointed_key(j) == k) match.push_back(j);
        if (match.size() != 1 || match[0] == i) continue;
        links.push_back({i, match[0], LinkKind::GtPointed,
                         "H=" + elements_str(h) + " of order " + std::to_string(h.order()) +
                             " gives a pointed dual with the pointed indicators of the target"});
      }
    }
  }
  return links;
}

MoritaClassReport classify_order(int order, const ClassifyOptions& opt) {
  MoritaClassReport r;
  r.order = order;
  r.entries = classify_entries(order, opt);
  const auto clusters = table_clusters(r.entries);
  r.table_count = int(clusters.size());
  UnionFind uf(r.entries.size());
  auto apply = [&](const std::vector<ClassifyLink>& links) {
    for (auto& l : links) {
      if (!(r.entries[l.a].table == r.entries[l.b].table))
        throw MismatchedData("link between different invariant tables");
      uf.unite(l.a, l.b);
      r.links.push_back(l);
    }
  };
  auto split_clusters = [&] {
    std::vector<std::vector<std::size_t>> out;
    for (auto& c : clusters) {
      std::set<std::size_t> roots;
      for (auto i : c) roots.insert(uf.find(i));
      if (roots.size() > 1) out.push_back(c);
    }
    return out;
  };
  apply(corcentral_links(order, r.entries));
  if (opt.gt_rule) {
    auto pending = split_clusters();
    if (!pending.empty()) apply(gt_pointed_links(order, r.entries, pending));
  }
  std::map<std::size_t, std::vector<std::size_t>> comps;
  for (std::size_t i = 0; i < r.entries.size(); ++i) comps[uf.find(i)].push_back(i);
  for (auto& [root, members] : comps) r.classes.push_back(members);
  r.unresolved = split_clusters();
  return r;
}

std::string link_kind_name(LinkKind k) { return k == LinkKind::Corcentral ? "corcentral" : "gt-pointed"; }

std::string MoritaClassReport::to_json() const {
  json j;
  j["order"] = order;
  j["orbits"] = entries.size();
  j["tables"] = table_count;
  j["classes"] = classes.size();
  j["unresolved_count"] = unresolved.size();
  json es = json::array();
  for (auto& e : entries)
    es.push_back({{"group", e.index},
                  {"name", catalog_entry(order, e.index).name},
                  {"orbit", e.orbit},
                  {"orbit_size", e.orbit_size},
                  {"representative", e.representative},
                  {"fsexp", e.table.fsexp},
                  {"simples", e.table.simples()}});
  j["entries"] = es;
  json cs = json::array();
  for (auto& c : classes) {
    json m = json::array();
    for (auto i : c) m.push_back(entry_label(order, entries[i]));
    cs.push_back({{"members", m}, {"entries", c}});
  }
  j["class_list"] = cs;
  json ls = json::array();
  for (auto& l : links)
    ls.push_back({{"from", entry_label(order, entries[l.a])},
                  {"to", entry_label(order, entries[l.b])},
                  {"kind", link_kind_name(l.kind)},
                  {"evidence", l.detail}});
  j["links"] = ls;
  json un = json::array();
  for (auto& u : unresolved) {
    json m = json::array();
    for (auto i : u) m.push_back(entry_label(order, entries[i]));
    un.push_back(m);
  }
  j["unresolved"] = un;
  return j.dump(2);
}

std::string MoritaClassReport::to_csv() const {
  std::ostringstream out;
  out << "class,size,fsexp,simples,members\n";
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const auto& t = entries[classes[c][0]].table;
    out << c + 1 << ',' << classes[c].size() << ',' << t.fsexp << ',' << t.simples() << ',';
    for (std::size_t k = 0; k < classes[c].size(); ++k)
      out << (k ? ";" : "") << entry_label(order, entries[classes[c][k]]);
    out << '\n';
  }
  return out.str();
}

}  // namespace fusion
