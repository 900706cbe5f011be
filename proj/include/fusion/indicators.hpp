#pragma once

#include <cstdint>
#include <vector>

#include "fusion/cohomology.hpp"
#include "fusion/cyclotomic.hpp"
#include "fusion/projrep.hpp"

namespace fusion {

// π_j(x) for 0 <= j <= o(x), additive mod the cocycle modulus:
// π_0 = 0, π_{j+1}(x) = ω(x, x^j, x) + π_j(x).
struct PiTable {
  FiniteGroup group;
  std::int64_t modulus = 1;
  std::vector<std::vector<std::int64_t>> values;  // values[x][j]
};

PiTable pi_table(const DenseCocycle& w);
// any m, using π_{m+o} = π_o + π_m
std::int64_t pi_at(const PiTable& p, int x, std::int64_t m);

// ν_m of the simple g of C(G, ω)
Cyclotomic fs_pointed(const DenseCocycle& w, const PiTable& p, int g, std::int64_t m);

// lcm over x of o(x)·(order of ω restricted to <x>), read off π_o(x)
std::int64_t fs_exponent(const DenseCocycle& w, const PiTable& p);
std::int64_t fs_exponent(const DenseCocycle& w);

// (g, χ) with χ an α_g-projective character of C_G(g)
struct SimpleDoubleObject {
  int g = 0;
  int class_size = 1;
  Subgroup centralizer;
  TwoCocycle cocycle;               // α_g on the centralizer, as its own group
  std::vector<int> local;           // element of G -> index in the centralizer group, or -1
  ProjectiveCharacter character;    // values indexed by the centralizer group
  int dim() const { return class_size * character.dim; }
  const Cyclotomic& chi(int x) const { return character.values[std::size_t(local[std::size_t(x)])]; }
};

std::vector<SimpleDoubleObject> double_simples(const DenseCocycle& w);
// (1/|C_G(g)|) Σ_{x: (gx)^m = x^m} ζ^{α_{x^m}(g,x) + π_m(gx) - π_m(x)} χ(x^m)
Cyclotomic fs_double(const DenseCocycle& w, const PiTable& p, const SimpleDoubleObject& s, std::int64_t m);
// ν_0..ν_{count-1} in one pass
std::vector<Cyclotomic> fs_double_sequence(const DenseCocycle& w, const PiTable& p, const SimpleDoubleObject& s,
                                           std::int64_t count);
// θ = χ(g)/χ(1)
Cyclotomic twist(const SimpleDoubleObject& s);

// ω + dκ with ω + dκ vanishing on G × G × H; ω must vanish on H^3.
DenseCocycle adapt_cocycle(const DenseCocycle& w, const Subgroup& h);
bool is_adapted(const DenseCocycle& w, const Subgroup& h);

// (g, χ): g runs over H\G/H, χ over ω_g-projective characters of S = H ∩ gHg^{-1}
struct SimpleGtObject {
  int g = 0;
  int orbit_size = 1;  // |H| / |S|
  Subgroup stabilizer;
  TwoCocycle cocycle;  // ω_g on S
  std::vector<int> local;
  std::vector<char> coset;  // membership in gH
  ProjectiveCharacter character;
  int dim() const { return orbit_size * character.dim; }
  const Cyclotomic& chi(int x) const { return character.values[std::size_t(local[std::size_t(x)])]; }
};

std::vector<SimpleGtObject> gt_simples(const DenseCocycle& adapted, const Subgroup& h);
// (1/|S|) Σ_{x ∈ gH, x^m ∈ S} ζ^{π_{-m}(x)} χ(x^{-m})
Cyclotomic fs_gt(const DenseCocycle& adapted, const PiTable& p, const SimpleGtObject& s, std::int64_t m);

}  // namespace fusion
