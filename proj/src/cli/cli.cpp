#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fusion/classify.hpp"
#include "fusion/cli.hpp"
#include "fusion/errors.hpp"

namespace fusion {
namespace {

using nlohmann::json;

struct JobConfig {
  int order = 0, index = 0, orbit = 0, degree = 3, max_order = 31, jobs = 1;
  long bar_bound = kDefaultBarBound;
  std::vector<std::int64_t> cocycle;
  std::vector<int> subgroup;
  std::string cache_dir, format = "text";
  bool allow_unresolved = false;
};

std::string factors_name(const std::vector<std::int64_t>& f) {
  if (f.empty()) return "0";
  std::string s;
  for (auto x : f) s += (s.empty() ? "" : " x ") + ("Z" + std::to_string(x));
  return s;
}

std::shared_ptr<const CohomologyGroup> h3(const JobConfig& c) { return catalog_cohomology(c.order, c.index, 3, c.bar_bound); }

CocycleClass chosen_class(const JobConfig& c) {
  auto h = h3(c);
  std::vector<std::int64_t> e = c.cocycle;
  if (c.orbit > 0) {
    if (!e.empty()) throw InvalidArgument("--orbit and --cocycle are exclusive");
    auto orbits = automorphism_orbits(*h);
    if (std::size_t(c.orbit) > orbits.size())
      throw InvalidArgument("there are " + std::to_string(orbits.size()) + " orbits");
    e = orbits[std::size_t(c.orbit - 1)].representative;
  }
  if (e.empty()) e.assign(h->factors.size(), 0);
  if (e.size() != h->factors.size())
    throw InvalidArgument("--cocycle needs " + std::to_string(h->factors.size()) + " exponents");
  return make_class(h, h->normalize(e));
}

void emit_rows(std::ostream& out, const std::string& format, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows, json extra) {
  if (format == "json") {
    json j = std::move(extra);
    j["columns"] = header;
    j["rows"] = rows;
    out << j.dump(2) << '\n';
    return;
  }
  const char* sep = format == "csv" ? "," : "  ";
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? sep : "") << header[i];
  out << '\n';
  for (auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? sep : "") << r[i];
    out << '\n';
  }
}

int cmd_cohomology(const JobConfig& c, std::ostream& out) {
  auto h = c.degree == 3 ? h3(c) : std::make_shared<const CohomologyGroup>(cohomology(catalog_group(c.order, c.index), c.degree, c.bar_bound));
  json j{{"order", c.order}, {"index", c.index}, {"group", catalog_entry(c.order, c.index).name},
         {"degree", c.degree}, {"factors", h->factors}, {"size", h->size().str()}};
  if (c.format == "json") out << j.dump(2) << '\n';
  else if (c.format == "csv") {
    out << "order,index,group,degree,factors\n" << c.order << ',' << c.index << ',' << catalog_entry(c.order, c.index).name << ','
        << c.degree << ',';
    for (std::size_t i = 0; i < h->factors.size(); ++i) out << (i ? ";" : "") << h->factors[i];
    out << '\n';
  } else {
    out << "H^" << c.degree << "(" << catalog_entry(c.order, c.index).name << ", C^x) = " << factors_name(h->factors) << '\n';
    out << "factors " << json(h->factors).dump() << '\n';
  }
  return 0;
}

int cmd_orbits(const JobConfig& c, std::ostream& out) {
  auto h = h3(c);
  auto orbits = automorphism_orbits(*h);
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    std::string rep;
    for (auto x : orbits[i].representative) rep += (rep.empty() ? "" : ";") + std::to_string(x);
    rows.push_back({std::to_string(i + 1), rep, std::to_string(orbits[i].members.size())});
  }
  if (c.format == "text") out << orbits.size() << " orbit representatives on " << factors_name(h->factors) << '\n';
  emit_rows(out, c.format, {"orbit", "representative", "size"}, rows, {{"order", c.order}, {"index", c.index}, {"count", orbits.size()}});
  return 0;
}

// integers and roots of unity read better in a terminal; other values keep the serialization
std::string show(const Cyclotomic& v, const std::string& format) {
  if (format != "text") return v.str();
  if (auto i = v.to_integer()) return i->str();
  if (auto r = v.root_of_unity()) {
    auto [n, k] = *r;
    return "z" + std::to_string(n) + (k == 1 ? "" : "^" + std::to_string(k));
  }
  if (auto r = (-v).root_of_unity()) {
    auto [n, k] = *r;
    return "-z" + std::to_string(n) + (k == 1 ? "" : "^" + std::to_string(k));
  }
  return v.str();
}

std::vector<std::string> nu_header(std::int64_t e) {
  std::vector<std::string> h;
  for (std::int64_t m = 0; m < e; ++m) h.push_back("nu_" + std::to_string(m));
  return h;
}

int cmd_pointed(const JobConfig& c, std::ostream& out) {
  DenseCocycle w = dense_cocycle(chosen_class(c));
  const auto e = fs_exponent(w);
  auto t = pointed_indicator_table(w, e);
  std::vector<std::vector<std::string>> rows;
  for (auto& [nu, m] : t.rows) {
    std::vector<std::string> r;
    for (auto& v : nu) r.push_back(show(v, c.format));
    r.push_back(std::to_string(m));
    rows.push_back(std::move(r));
  }
  auto h = nu_header(e);
  h.push_back("multiplicity");
  emit_rows(out, c.format, h, rows, {{"fsexp", e}});
  return 0;
}

int cmd_double(const JobConfig& c, std::ostream& out) {
  auto t = invariant_table(dense_cocycle(chosen_class(c)));
  std::vector<std::vector<std::string>> rows;
  for (auto& r : t.rows) {
    std::vector<std::string> row{show(r.theta, c.format)};
    for (auto& v : r.nu) row.push_back(show(v, c.format));
    row.push_back(std::to_string(r.multiplicity));
    rows.push_back(std::move(row));
  }
  std::vector<std::string> h{"theta"};
  for (auto& s : nu_header(t.fsexp)) h.push_back(s);
  h.push_back("multiplicity");
  emit_rows(out, c.format, h, rows, {{"fsexp", t.fsexp}, {"simples", t.simples()}});
  return 0;
}

int cmd_gt(const JobConfig& c, std::ostream& out) {
  CocycleClass cls = chosen_class(c);
  FiniteGroup g = cls.parent->group;
  for (int x : c.subgroup)
    if (x < 0 || x >= g.order()) throw InvalidArgument("subgroup element out of range");
  Subgroup h = generated_subgroup(g, c.subgroup);
  if (!restriction_is_trivial_cochain(cls, h)) throw InvalidArgument("the cocycle does not vanish on the subgroup");
  DenseCocycle a = adapt_cocycle(dense_cocycle(cls), h);
  const auto e = fs_exponent(dense_cocycle(cls));
  PiTable p = pi_table(a);
  std::vector<std::vector<std::string>> rows;
  bool pointed = true;
  for (auto& s : gt_simples(a, h)) {
    std::vector<std::string> r{std::to_string(s.g), std::to_string(s.stabilizer.order())};
    for (std::int64_t m = 0; m < e; ++m) r.push_back(show(fs_gt(a, p, s, m), c.format));
    pointed = pointed && s.dim() == 1;
    rows.push_back(std::move(r));
  }
  std::vector<std::string> hdr{"g", "stabilizer"};
  for (auto& s : nu_header(e)) hdr.push_back(s);
  if (c.format == "text") out << rows.size() << " simples, subgroup of order " << h.order() << (pointed ? ", pointed" : "") << '\n';
  emit_rows(out, c.format, hdr, rows, {{"fsexp", e}, {"subgroup", h.elements}, {"pointed", pointed}});
  return 0;
}

ClassifyOptions options(const JobConfig& c) {
  ClassifyOptions o;
  o.jobs = c.jobs;
  o.bar_bound = c.bar_bound;
  return o;
}

void summary(std::ostream& out, const MoritaClassReport& r) {
  out << "order " << r.order << ": " << r.entries.size() << " pointed categories, " << r.table_count << " tables, "
      << r.class_count() << " classes";
  if (!r.unresolved.empty()) out << ", " << r.unresolved.size() << " UNRESOLVED";
  out << '\n';
}

int cmd_classify(const JobConfig& c, std::ostream& out) {
  auto r = classify_order(c.order, options(c));
  if (c.format == "json") out << r.to_json() << '\n';
  else if (c.format == "csv") out << r.to_csv();
  else {
    summary(out, r);
    for (auto& u : r.unresolved) {
      out << "UNRESOLVED:";
      for (auto i : u) out << ' ' << catalog_entry(r.order, r.entries[i].index).name << "/w" << r.entries[i].orbit;
      out << '\n';
    }
  }
  return r.unresolved.empty() || c.allow_unresolved ? 0 : 1;
}

int cmd_classify_all(const JobConfig& c, std::ostream& out) {
  std::size_t total = 0, orbits = 0, unresolved = 0;
  json all = json::array();
  for (int n = 2; n <= c.max_order; ++n) {
    auto r = classify_order(n, options(c));
    total += r.class_count();
    orbits += r.entries.size();
    unresolved += r.unresolved.size();
    if (c.format == "json") all.push_back(json::parse(r.to_json()));
    else summary(out, r);
  }
  if (c.format == "json") out << json{{"max_order", c.max_order}, {"classes", total}, {"orbits", orbits}, {"unresolved", unresolved}, {"orders", all}}.dump(2) << '\n';
  else out << "total: " << orbits << " pointed categories, " << total << " classes, " << unresolved << " unresolved\n";
  return unresolved == 0 || c.allow_unresolved ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pointed fusion categories: cohomology, indicators, Morita classes"};
  app.require_subcommand(1);
  app.fallthrough();
  JobConfig c;
  app.add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", c.cache_dir, "cache directory (default: $FUSION_CACHE_DIR)");
  app.add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--bar-bound", c.bar_bound, "largest bar complex rank")->check(CLI::PositiveNumber);

  auto group_opts = [&](CLI::App* s) {
    s->add_option("--order", c.order)->required()->check(CLI::Range(1, 31));
    s->add_option("--index", c.index)->required()->check(CLI::PositiveNumber);
  };
  auto* coh = app.add_subcommand("cohomology", "H^n(G, C^x) invariant factors");
  group_opts(coh);
  coh->add_option("--degree", c.degree)->check(CLI::Range(1, 6));
  auto* orb = app.add_subcommand("orbits", "automorphism orbits on H^3(G, C^x)");
  group_opts(orb);
  auto* pt = app.add_subcommand("pointed-indicators", "FS indicators of C(G, ω)");
  group_opts(pt);
  pt->add_option("--cocycle", c.cocycle)->delimiter(',');
  pt->add_option("--orbit", c.orbit, "use the representative of this orbit")->check(CLI::PositiveNumber);
  auto* dbl = app.add_subcommand("double-invariants", "FS indicators and twists of the double");
  group_opts(dbl);
  dbl->add_option("--cocycle", c.cocycle)->delimiter(',');
  dbl->add_option("--orbit", c.orbit, "use the representative of this orbit")->check(CLI::PositiveNumber);
  auto* gt = app.add_subcommand("gt-indicators", "FS indicators of C(G, ω, H, 1)");
  group_opts(gt);
  gt->add_option("--cocycle", c.cocycle)->delimiter(',');
  gt->add_option("--orbit", c.orbit, "use the representative of this orbit")->check(CLI::PositiveNumber);
  gt->add_option("--subgroup", c.subgroup, "generators, as element numbers")->delimiter(',')->required();
  auto* cls = app.add_subcommand("classify", "Morita classes for one order");
  cls->add_option("--order", c.order)->required()->check(CLI::Range(1, 31));
  cls->add_flag("--allow-unresolved", c.allow_unresolved);
  auto* all = app.add_subcommand("classify-all", "Morita classes for all orders up to a bound");
  all->add_option("--max-order", c.max_order)->check(CLI::Range(2, 31));
  all->add_flag("--allow-unresolved", c.allow_unresolved);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (!c.cache_dir.empty()) setenv("FUSION_CACHE_DIR", c.cache_dir.c_str(), 1);
  try {
    if (c.index > 0 && c.index > catalog_count(c.order)) {
      err << "order " << c.order << " has " << catalog_count(c.order) << " groups in the catalog\n";
      return 2;
    }
    if (*coh) return cmd_cohomology(c, out);
    if (*orb) return cmd_orbits(c, out);
    if (*pt) return cmd_pointed(c, out);
    if (*dbl) return cmd_double(c, out);
    if (*gt) return cmd_gt(c, out);
    if (*cls) return cmd_classify(c, out);
    if (*all) return cmd_classify_all(c, out);
  } catch (const SizeBound& e) {
    err << "size bound: " << e.what() << '\n';
    return 3;
  } catch (const InvalidArgument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 4;
  }
  return 2;
}

}  // namespace fusion
