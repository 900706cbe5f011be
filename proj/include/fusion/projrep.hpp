#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "fusion/cohomology.hpp"
#include "fusion/cyclotomic.hpp"
#include "fusion/groups.hpp"

namespace fusion {

// Additive 2-cocycle: the multiplicative value at (g, h) is ζ_n^{α(g,h)}.
struct TwoCocycle {
  FiniteGroup group;
  std::int64_t modulus = 1;
  std::vector<std::int64_t> values;  // values[g * |G| + h], in [0, n)

  std::int64_t operator()(int g, int h) const { return values[std::size_t(g) * group.order() + h]; }
  bool is_cocycle() const;
  bool is_normalized() const;
  bool is_zero() const;
};

TwoCocycle zero_cocycle(const FiniteGroup& g, std::int64_t n = 1);
// Restriction to a subgroup presented as its own group (element i ↦ incl(i)).
TwoCocycle restrict_cocycle(const TwoCocycle& a, const GroupHom& incl);

// A realized 3-cocycle as a dense |G|^3 table, for fast evaluation.
struct DenseCocycle {
  FiniteGroup group;
  std::int64_t modulus = 1;
  std::vector<std::int64_t> values;

  std::int64_t operator()(int a, int b, int c) const {
    const std::size_t n = std::size_t(group.order());
    return values[(std::size_t(a) * n + std::size_t(b)) * n + std::size_t(c)];
  }
};

DenseCocycle dense_cocycle(const FiniteGroup& g, const Cochain& w, std::int64_t m);
DenseCocycle dense_cocycle(const CocycleClass& c);

// ω_g(x, y) = ω(x, y, g)
TwoCocycle two_cocycle_omega_g(const DenseCocycle& w, int g);
// α_g(x, y) = ω(x,y,g) - ω(x, y▷g, y) + ω(xy▷g, x, y), y▷g = y g y^{-1};
// a cocycle on C_G(g), tabulated on all of G.
TwoCocycle two_cocycle_alpha_g(const DenseCocycle& w, int g);

// μ_n ×_α G with (z, g)(z', g') = (z + z' + α(g, g'), g g'); (z, g) sits at g*n + z.
struct CentralExtension {
  FiniteGroup base;
  std::int64_t modulus = 1;
  FiniteGroup ext;
  std::vector<int> embed;    // z -> (z, 1)
  GroupHom project;          // ext -> base
  std::vector<int> section;  // g -> (0, g)
};

inline constexpr int kExtensionBound = 512;

CentralExtension central_extension(const TwoCocycle& a, int bound = kExtensionBound);

struct CharacterTable {
  FiniteGroup group;
  std::vector<ConjugacyClass> classes;  // identity class first
  std::vector<int> class_of;
  std::vector<std::vector<Cyclotomic>> values;  // values[χ][class]
  std::vector<int> dims;

  const Cyclotomic& at(std::size_t chi, int g) const { return values[chi][std::size_t(class_of[std::size_t(g)])]; }
};

// Dixon–Schneider over F_p with p ≡ 1 mod exp(G), lifted to cyclotomics by
// counting eigenvalue multiplicities. Abelian groups are handled directly.
// Results are memoized per Cayley table.
std::shared_ptr<const CharacterTable> character_table(const FiniteGroup& g);

struct ProjectiveCharacter {
  CentralExtension extension;  // the (gauge-reduced) extension it was read from
  std::vector<Cyclotomic> values;  // per element of the base group
  int dim = 0;
};

// Irreducible α-projective characters: ρ(g)ρ(h) = ζ_n^{α(g,h)} ρ(gh).
// α is first moved inside its class to take values in μ_d with d the order of
// [α], so the extension that is decomposed has order d|G| instead of n|G|.
std::vector<ProjectiveCharacter> alpha_projective_characters(const TwoCocycle& a);
// The literal route: all irreducibles of μ_n ×_α G restricting to μ_n as
// dim·(ζ ↦ ζ). Used as a cross-check.
std::vector<ProjectiveCharacter> tautological_characters(const TwoCocycle& a, int bound = kExtensionBound);

}  // namespace fusion
