#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fusion/indicators.hpp"

namespace fusion {

struct InvariantRow {
  Cyclotomic theta;
  std::vector<Cyclotomic> nu;  // m = 0 .. fsexp-1
  int multiplicity = 1;
};

// Rows sorted by the serialization of (θ, ν), pairwise distinct.
struct InvariantTable {
  std::int64_t fsexp = 1;
  std::vector<InvariantRow> rows;

  std::string key() const;
  int simples() const;
  friend bool operator==(const InvariantTable& a, const InvariantTable& b) { return a.key() == b.key(); }
};

InvariantTable invariant_table(const DenseCocycle& w);
InvariantTable parse_invariant_table(const std::string& key);

// multiset of indicator sequences ν_0..ν_{count-1} over the simples of C(G, ω)
struct PointedTable {
  std::vector<std::pair<std::vector<Cyclotomic>, int>> rows;
  std::string key() const;
};

PointedTable pointed_indicator_table(const DenseCocycle& w, std::int64_t count);
PointedTable pointed_indicator_table(const DenseCocycle& w);  // count = FS exponent
// The same for C(G, ω, H, 1) when it is pointed; empty when it is not.
std::optional<PointedTable> gt_pointed_table(const DenseCocycle& adapted, const Subgroup& h, std::int64_t count);

struct ClassifyEntry {
  int index = 0;  // catalog index
  int orbit = 0;  // 1-based position among the automorphism orbits
  std::vector<std::int64_t> representative;
  int orbit_size = 0;
  InvariantTable table;
};

enum class LinkKind { Corcentral, GtPointed };

struct ClassifyLink {
  std::size_t a = 0, b = 0;  // entry positions
  LinkKind kind = LinkKind::Corcentral;
  std::string detail;
};

struct MoritaClassReport {
  int order = 0;
  std::vector<ClassifyEntry> entries;
  std::vector<ClassifyLink> links;
  std::vector<std::vector<std::size_t>> classes;     // connected components
  std::vector<std::vector<std::size_t>> unresolved;  // same table, more than one class
  int table_count = 0;

  std::size_t class_count() const { return classes.size(); }
  std::string to_json() const;
  std::string to_csv() const;
};

struct ClassifyOptions {
  int jobs = 1;
  long bar_bound = kDefaultBarBound;
  bool gt_rule = true;
};

// Invariant tables for every (group, orbit) of the order, in catalog order.
std::vector<ClassifyEntry> classify_entries(int order, const ClassifyOptions& opt = {});
std::vector<ClassifyLink> corcentral_links(int order, const std::vector<ClassifyEntry>& entries);
// only for entries listed in `pending`, i.e. in a table cluster that is still split
std::vector<ClassifyLink> gt_pointed_links(int order, const std::vector<ClassifyEntry>& entries,
                                           const std::vector<std::vector<std::size_t>>& pending);
MoritaClassReport classify_order(int order, const ClassifyOptions& opt = {});

std::string link_kind_name(LinkKind k);

}  // namespace fusion
