#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "geomforge/constraints.hpp"
#include "geomforge/group.hpp"
#include "geomforge/polar.hpp"

namespace geomforge {

/// A_9 on the even-weight submodule of GF(2)^9 with phi(v) = wt(v)/2 mod 2.
struct A9Model {
  PolarSpace space;
  Group group;
  std::vector<int> weight8;      // point ids of the nine weight-8 vectors
  bool pairwise_nonperpendicular = false;
  bool generators_dickson0 = false;
  std::optional<std::uint64_t> order;
};
A9Model build_a9();

/// Orbits of a group on ordered pairs of disjoint solids of one family.
struct SolidPairOrbit {
  int family_size = 0;
  int disjoint_per_solid = 0;
  std::uint64_t ordered_pairs = 0;
  std::uint64_t orbit_size = 0;   // orbit of the first pair
  bool transitive = false;
};
/// Pair orbit for permutations already induced on the family.
SolidPairOrbit solid_pair_orbit(const std::vector<Perm>& on_family, const std::vector<Subspace>& family);

struct A9SolidResult {
  SolidPairOrbit a9;
  SolidPairOrbit omega_baseline;   // full Omega+(8,2) generators on their own space
  std::optional<std::uint64_t> pair_stabilizer;  // |A_9| / orbit
};
A9SolidResult verify_a9_antiflag_via_solids(const A9Model& model);

struct Omega7Result {
  int nonsingular_points = 0;
  bool nonsingular_transitive = false;
  std::uint64_t v_isometries = 0;          // isometries fixing v (enumerated)
  std::uint64_t v_stabilizer_order = 0;    // those with Dickson invariant 0
  std::uint64_t pair_stabilizer_order = 0; // Dickson-0 isometries fixing v and two disjoint solids
  SolidPairOrbit pairs;                    // Schreier stabilizer of v on family-M2 pairs
  int rank_on_family = 0;
  std::vector<int> subdegrees;             // ascending
  Rank3Params rank3;                       // disjointness graph on the family
  long long j = 0;
  long long jt = 0;
  bool jt_constant = false;
  Rank4Verdict rank4;
  bool families_preserved = false;         // every generator preserves both families
  bool reflections_swap = false;           // every reflection swaps the families
};
Omega7Result verify_omega7_example();

struct GammaResult {
  AntiflagResult sl2_4;
  AntiflagResult sl2_4_sigma;
  std::optional<std::uint64_t> sigma_order;
  bool sigma_regular = false;
  BlockResult sigma_blocks;
  BlockResult sl3_4_blocks;
};
GammaResult verify_gamma_examples();

}  // namespace geomforge
