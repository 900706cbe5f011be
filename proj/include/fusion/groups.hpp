#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fusion/errors.hpp"

namespace fusion {

// Permutation of {0,...,d-1} given by its image list.
using Perm = std::vector<int>;

// Finite group stored as a full Cayley table, identity at index 0.
// Copies share the immutable table.
class FiniteGroup {
public:
  FiniteGroup();  // trivial group
  // Validates the table (closure, identity at 0, inverses); associativity is
  // only checked when `check_assoc` is set because it is cubic.
  FiniteGroup(int order, std::vector<int> table, bool check_assoc = false);

  int order() const { return d_->n; }
  int mul(int a, int b) const { return d_->mul[std::size_t(a) * d_->n + b]; }
  int inv(int a) const { return d_->inv[a]; }
  int element_order(int a) const { return d_->ord[a]; }
  int exponent() const { return d_->exponent; }
  int pow(int a, long k) const;
  // y ▷ g = y g y^{-1}
  int conj(int y, int g) const { return mul(mul(y, g), inv(y)); }
  bool commute(int a, int b) const { return mul(a, b) == mul(b, a); }
  bool is_abelian() const;

  const std::vector<int>& table() const { return d_->mul; }
  const std::vector<int>& inverses() const { return d_->inv; }
  const std::vector<int>& element_orders() const { return d_->ord; }
  bool same_as(const FiniteGroup& o) const { return d_ == o.d_ || d_->mul == o.d_->mul; }

private:
  struct Data {
    int n = 1;
    int exponent = 1;
    std::vector<int> mul, inv, ord;
  };
  std::shared_ptr<const Data> d_;
};

struct GroupHom {
  FiniteGroup source, target;
  std::vector<int> image;

  int operator()(int g) const { return image[g]; }
  bool is_homomorphism() const;
  bool is_bijective() const;
};

GroupHom identity_hom(const FiniteGroup& g);
// (after ∘ before)(x) = after(before(x))
GroupHom compose(const GroupHom& after, const GroupHom& before);
GroupHom inverse_hom(const GroupHom& iso);

struct Subgroup {
  FiniteGroup parent;
  std::vector<int> elements;  // sorted, contains 0

  int order() const { return int(elements.size()); }
  bool contains(int g) const;
};

struct ConjugacyClass {
  int representative;
  std::vector<int> members;
};

// ---- construction -------------------------------------------------------

Perm parse_permutation(const std::string& cycles);
std::string format_permutation(const Perm& p);

FiniteGroup group_from_generators(const std::vector<Perm>& generators, int bound = 512);
FiniteGroup cyclic_group(int n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, int bound = 512);
// Direct product together with the two coordinate injections.
std::pair<GroupHom, GroupHom> product_injections(const FiniteGroup& a, const FiniteGroup& b,
                                                 const FiniteGroup& prod);

// ---- catalog ------------------------------------------------------------

struct CatalogEntry {
  int order = 0;
  int index = 0;
  std::string name;
  std::vector<Perm> generators;
};

std::vector<CatalogEntry> parse_catalog(const std::string& text);
const std::vector<CatalogEntry>& catalog();
const std::string& catalog_text();
std::string catalog_hash();
int catalog_count(int order);
const CatalogEntry& catalog_entry(int order, int index);
FiniteGroup catalog_group(int order, int index);

// ---- structure ----------------------------------------------------------

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g);
// class_of[x] = position of x's class in conjugacy_classes(g)
std::vector<int> class_index(const FiniteGroup& g, const std::vector<ConjugacyClass>& classes);

Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> elements);
Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens);
Subgroup whole_group(const FiniteGroup& g);
Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup centralizer(const FiniteGroup& g, int x);
Subgroup center(const FiniteGroup& g);
bool is_normal(const Subgroup& h);
bool is_abelian(const Subgroup& h);
Subgroup conjugate_subgroup(const Subgroup& h, int y);  // y H y^{-1}
Subgroup intersect(const Subgroup& a, const Subgroup& b);
Subgroup image_subgroup(const GroupHom& phi, const Subgroup& h);

std::vector<Subgroup> all_subgroups(const FiniteGroup& g);
std::vector<Subgroup> cyclic_subgroups(const FiniteGroup& g);
std::vector<Subgroup> abelian_normal_subgroups(const FiniteGroup& g);
std::vector<Subgroup> central_subgroups(const FiniteGroup& g);

// The subgroup as a group in its own right, with the inclusion homomorphism.
// Element i of the result corresponds to h.elements[i].
std::pair<FiniteGroup, GroupHom> subgroup_as_group(const Subgroup& h);
// Factor group and projection; cosets are ordered by their least element.
std::pair<FiniteGroup, GroupHom> quotient(const FiniteGroup& g, const Subgroup& n);

// Commutator quotient invariant factors, ascending.
std::vector<int> abelian_invariants(const FiniteGroup& g);
// (element order, count) pairs, ascending in the order.
std::vector<std::pair<int, int>> order_histogram(const FiniteGroup& g);

// A small generating set, built greedily from elements of large order.
std::vector<int> generating_set(const FiniteGroup& g);

std::vector<GroupHom> automorphisms(const FiniteGroup& g);
std::optional<GroupHom> is_isomorphic(const FiniteGroup& a, const FiniteGroup& b);
// All homomorphisms a -> b (small groups only; used by property tests).
std::vector<GroupHom> homomorphisms(const FiniteGroup& a, const FiniteGroup& b);

}  // namespace fusion
