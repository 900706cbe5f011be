#include <sstream>

#include "doctest.h"
#include "fusion/cli.hpp"
#include "json.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "fusion");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = fusion::run(int(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cohomology") {
  auto r = call({"cohomology", "--order", "8", "--index", "1", "--degree", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("Z8") != std::string::npos);
  auto j = nlohmann::json::parse(call({"--format", "json", "cohomology", "--order", "8", "--index", "5"}).out);
  CHECK(j["factors"] == std::vector<int>(7, 2));
  auto c = call({"cohomology", "--order", "16", "--index", "2", "--format", "csv"});
  CHECK(c.out.find("4;4;4") != std::string::npos);
}

TEST_CASE("orbits") {
  auto j = nlohmann::json::parse(call({"orbits", "--order", "16", "--index", "14", "--format", "json"}).out);
  CHECK(j["count"] == 23);
  CHECK(j["rows"].size() == 23);
}

TEST_CASE("indicators") {
  auto p = call({"pointed-indicators", "--order", "2", "--index", "1", "--cocycle", "1", "--format", "csv"});
  CHECK(p.code == 0);
  CHECK(p.out.rfind("nu_0,nu_1,nu_2,nu_3,multiplicity", 0) == 0);
  auto d = nlohmann::json::parse(call({"double-invariants", "--order", "8", "--index", "4", "--orbit", "1", "--format", "json"}).out);
  CHECK(d["simples"] == 22);
  CHECK(d["fsexp"] == 4);
  auto g = call({"gt-indicators", "--order", "6", "--index", "1", "--subgroup", "1,2"});
  CHECK(g.code == 0);
  CHECK(g.out.find("subgroup of order 6") != std::string::npos);
}

TEST_CASE("classify") {
  auto r = call({"classify", "--order", "8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("38 classes") != std::string::npos);
  auto j = nlohmann::json::parse(call({"classify", "--order", "4", "--format", "json"}).out);
  CHECK(j["classes"] == 7);
  CHECK(j["class_list"].size() == 7);
  auto all = call({"classify-all", "--max-order", "5"});
  CHECK(all.code == 0);
  CHECK(all.out.find("total: 16 pointed categories, 15 classes, 0 unresolved") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"cohomology", "--order", "8"}).code == 2);
  CHECK(call({"cohomology", "--order", "8", "--index", "6"}).code == 2);
  CHECK(call({"pointed-indicators", "--order", "8", "--index", "1", "--cocycle", "1,2"}).code == 2);
  CHECK(call({"pointed-indicators", "--order", "8", "--index", "1", "--orbit", "99"}).code == 2);
  CHECK(call({"--bar-bound", "10", "cohomology", "--order", "8", "--index", "1", "--degree", "4"}).code == 3);
  CHECK(call({"--help"}).code == 0);
}
