#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fusion/barres.hpp"
#include "fusion/groups.hpp"
#include "fusion/modular.hpp"
#include "fusion/zlinalg.hpp"

namespace fusion {

// Dense, literal version of the homology pipeline. Every matrix is explicit,
// so it is only meant for small complexes (cross-checks, teaching).
struct HomologyData {
  int degree = 0;
  IntMatrix cycleBasis;     // Z (k x N)
  IntMatrix boundaryBasis;  // Hermite basis of B_n
  std::vector<BigInt> factors;  // all invariant factors of Z/B, 1s included
  BigInt m = 1;                 // exponent of H_n
  IntMatrix changeC, changeCinv;  // Z' = C Z
  IntMatrix liftC1;               // Z'' = C1 Z
  IntMatrix liftR1, liftR1inv;    // K' = R1 K
  IntMatrix projector;            // I, N x k
  // h~_i (values on Z) for every factor s_i > 1
  std::vector<IntVector> homVectors;
  // the lifted cocycles on the canonical basis of K_n, mod m
  std::vector<IntVector> cocycles;
};

HomologyData homology_data(const ChainComplex& K, int n);

// p-primary part of H_n, computed over Z/p^k.
struct LocalPart {
  std::int64_t p = 0;
  int k = 0;
  std::vector<int> exps;  // e_i, descending, each 0 < e_i < k
  // torsion cycles: sparse chains (tuple index, coefficient mod p^k) of order p^{e_i}
  std::vector<std::vector<std::pair<long, std::int64_t>>> cycles;
  // dual cocycles mod p^{e_i}: <cycles[i], cocycles[j]> = δ_ij
  std::vector<Cochain> cocycles;
};

// H^n(G, C^x) = Hom(H_n, Z/m) with explicit generator cocycles.
struct CohomologyGroup {
  FiniteGroup group;
  int degree = 0;
  std::int64_t modulus = 1;           // m, exponent of H_n
  std::vector<std::int64_t> factors;  // s_1 | ... | s_l, all > 1
  std::vector<Cochain> generators;    // ω~_i mod m, order s_i
  std::vector<LocalPart> local;

  BigInt size() const;
  // exponent vector (mod s_i) of the class of a cocycle with values mod M
  std::vector<std::int64_t> class_of(const Cochain& w, std::int64_t M) const;
  // sum e_i ω~_i mod m
  Cochain realize(const std::vector<std::int64_t>& exponents) const;
  // reduce an exponent vector mod the factors
  std::vector<std::int64_t> normalize(std::vector<std::int64_t> e) const;
};

CohomologyGroup cohomology(const FiniteGroup& g, int n, long bound = kDefaultBarBound);
// catalog groups go through the in-memory and on-disk cache (FUSION_CACHE_DIR)
std::shared_ptr<const CohomologyGroup> catalog_cohomology(int order, int index, int n,
                                                          long bound = kDefaultBarBound);

struct CocycleClass {
  std::shared_ptr<const CohomologyGroup> parent;
  std::vector<std::int64_t> exponents;
  Cochain realized;  // values mod parent->modulus
};

CocycleClass make_class(std::shared_ptr<const CohomologyGroup> parent, std::vector<std::int64_t> exponents);
std::int64_t class_order(const CocycleClass& c);

// Ĥ(φ): classes of G' -> classes of G, for φ: G -> G'.
std::function<CocycleClass(const CocycleClass&)> induced_map(const GroupHom& phi,
                                                             std::shared_ptr<const CohomologyGroup> source);
// Exponent vector on `source` of the pullback of a cocycle of the target.
std::vector<std::int64_t> pullback_class(const GroupHom& phi, const CohomologyGroup& source, const Cochain& w,
                                         std::int64_t M);

struct Orbit {
  std::vector<std::int64_t> representative;  // lexicographically least exponent vector
  std::vector<std::vector<std::int64_t>> members;
};

inline constexpr long kClassBound = 1000000;

// Orbits of Aut(G) on H^n(G, C^x), ordered by representative.
std::vector<Orbit> automorphism_orbits(const CohomologyGroup& h, long class_bound = kClassBound);
// same, with an explicit list of automorphisms (must generate the group acting)
std::vector<Orbit> automorphism_orbits(const CohomologyGroup& h, const std::vector<GroupHom>& auts,
                                       long class_bound = kClassBound);

// Class on G/N whose inflation is c, if any.
std::optional<CocycleClass> is_inflation(const CocycleClass& c, const Subgroup& n);
bool restriction_is_trivial_cochain(const CocycleClass& c, const Subgroup& h);
bool restriction_is_trivial_cochain(const Cochain& w, const FiniteGroup& g, int n, const Subgroup& h);

// |H^n(G, Z/m)| by counting kernels and images of the coboundary maps mod m.
BigInt cohomology_size_mod(const FiniteGroup& g, int n, std::int64_t m);

}  // namespace fusion
