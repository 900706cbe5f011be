#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>

#include "json.hpp"

#include "fusion/cohomology.hpp"

namespace fusion {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

json to_json(const CohomologyGroup& h) {
  json j;
  j["degree"] = h.degree;
  j["modulus"] = h.modulus;
  j["factors"] = h.factors;
  j["generators"] = h.generators;
  json loc = json::array();
  for (auto& lp : h.local) {
    json cyc = json::array();
    for (auto& c : lp.cycles) {
      json entries = json::array();
      for (auto& [i, v] : c) entries.push_back({i, v});
      cyc.push_back(entries);
    }
    loc.push_back({{"p", lp.p}, {"k", lp.k}, {"exps", lp.exps}, {"cycles", cyc}, {"cocycles", lp.cocycles}});
  }
  j["local"] = loc;
  return j;
}

CohomologyGroup from_json(const json& j, const FiniteGroup& g) {
  CohomologyGroup h;
  h.group = g;
  h.degree = j.at("degree").get<int>();
  h.modulus = j.at("modulus").get<std::int64_t>();
  h.factors = j.at("factors").get<std::vector<std::int64_t>>();
  h.generators = j.at("generators").get<std::vector<Cochain>>();
  for (auto& l : j.at("local")) {
    LocalPart lp;
    lp.p = l.at("p").get<std::int64_t>();
    lp.k = l.at("k").get<int>();
    lp.exps = l.at("exps").get<std::vector<int>>();
    for (auto& c : l.at("cycles")) {
      std::vector<std::pair<long, std::int64_t>> cyc;
      for (auto& e : c) cyc.emplace_back(e.at(0).get<long>(), e.at(1).get<std::int64_t>());
      lp.cycles.push_back(std::move(cyc));
    }
    lp.cocycles = l.at("cocycles").get<std::vector<Cochain>>();
    h.local.push_back(std::move(lp));
  }
  const std::size_t cols = std::size_t(tuple_count(g.order(), h.degree));
  for (auto& w : h.generators)
    if (w.size() != cols) throw MismatchedData("cached cocycle has the wrong length");
  return h;
}

}  // namespace

std::shared_ptr<const CohomologyGroup> catalog_cohomology(int order, int index, int n, long bound) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::shared_ptr<const CohomologyGroup>> memo;
  const auto key = std::make_tuple(order, index, n);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  FiniteGroup g = catalog_group(order, index);
  const char* dir = std::getenv("FUSION_CACHE_DIR");
  fs::path file;
  std::shared_ptr<const CohomologyGroup> h;
  if (dir && *dir) {
    file = fs::path(dir) / ("cohomology-" + catalog_hash() + "-" + std::to_string(order) + "-" +
                            std::to_string(index) + "-" + std::to_string(n) + ".json");
    std::ifstream in(file);
    if (in) {
      try {
        h = std::make_shared<const CohomologyGroup>(from_json(json::parse(in), g));
      } catch (const std::exception&) {
        h.reset();  // unreadable cache entry: recompute and overwrite
      }
    }
  }
  if (!h) {
    h = std::make_shared<const CohomologyGroup>(cohomology(g, n, bound));
    if (!file.empty()) {
      std::error_code ec;
      fs::create_directories(file.parent_path(), ec);
      fs::path tmp = file;
      tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
      {
        std::ofstream out(tmp);
        out << to_json(*h).dump();
      }
      fs::rename(tmp, file, ec);
    }
  }
  std::lock_guard<std::mutex> lock(mu);
  return memo.emplace(key, h).first->second;
}

}  // namespace fusion
