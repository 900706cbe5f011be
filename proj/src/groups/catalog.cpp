#include <cstdio>
#include <mutex>
#include <sstream>

#include "fusion/groups.hpp"

namespace fusion {
namespace detail {
extern const char* const kCatalogText;
}

std::vector<CatalogEntry> parse_catalog(const std::string& text) {
  std::vector<CatalogEntry> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    CatalogEntry e;
    std::string gens;
    if (!(ls >> e.order >> e.index >> e.name))
      throw InvalidArgument("catalog line " + std::to_string(lineno) + " is malformed");
    ls >> gens;
    std::size_t start = 0;
    while (start < gens.size()) {
      auto stop = gens.find(';', start);
      if (stop == std::string::npos) stop = gens.size();
      e.generators.push_back(parse_permutation(gens.substr(start, stop - start)));
      start = stop + 1;
    }
    for (auto& prev : out)
      if (prev.order == e.order && prev.index == e.index)
        throw InvalidArgument("duplicate catalog entry " + std::to_string(e.order) + "," +
                              std::to_string(e.index));
    out.push_back(std::move(e));
  }
  return out;
}

const std::string& catalog_text() {
  static const std::string text = detail::kCatalogText;
  return text;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = parse_catalog(catalog_text());
  return entries;
}

std::string catalog_hash() {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : catalog_text()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

int catalog_count(int order) {
  int n = 0;
  for (auto& e : catalog()) n += e.order == order;
  return n;
}

const CatalogEntry& catalog_entry(int order, int index) {
  for (auto& e : catalog())
    if (e.order == order && e.index == index) return e;
  throw UnknownEntry("no catalog group (" + std::to_string(order) + "," + std::to_string(index) + ")");
}

FiniteGroup catalog_group(int order, int index) {
  static std::mutex mu;
  static std::vector<std::pair<std::pair<int, int>, FiniteGroup>> built;
  std::lock_guard<std::mutex> lock(mu);
  for (auto& [k, g] : built)
    if (k == std::make_pair(order, index)) return g;
  auto& e = catalog_entry(order, index);
  auto g = group_from_generators(e.generators);
  if (g.order() != e.order)
    throw InvalidArgument("catalog entry " + e.name + " generates a group of the wrong order");
  built.push_back({{order, index}, g});
  return g;
}

}  // namespace fusion
