#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "geomforge/group.hpp"
#include "geomforge/incidence.hpp"
#include "geomforge/polar.hpp"

namespace geomforge {

class HexagonError : public std::runtime_error {
 public:
  HexagonError(int step, const std::string& what) : std::runtime_error(what), step(step) {}
  int step;
};

/// Split Cayley hexagon inside O(7, q). Basis order e1, e2, e3, f1, f2, f3, d with
/// phi = x_e1 x_f1 + x_e2 x_f2 + x_e3 x_f3 - x_d^2.
struct HexagonModel {
  int q = 0;
  PolarSpace space;                      // O(7, q); hexagon points are all of Omega
  Group k_group;                         // SL(3, q) acting as A on E, A^-T on F, 1 on d
  Vec u;                                 // e1 + f2
  Subspace w_u;                          // <e1, f2, e3 + f3 + d>
  std::vector<int> u_orbit;              // point ids of the K-orbit of u
  std::vector<SemilinearMap> transversal;  // transversal[i] maps u to u_orbit[i]
  std::vector<Subspace> w_orbit;         // W(u^g) = W(u)^g, parallel to u_orbit
  int ef_lines = 0;                      // number of E|F lines
  IncidenceGeometry geometry;            // point ids index space.points()
};

/// Builds the hexagon for a prime power q <= 4. Lines are the E|F lines <e, f>
/// (f in e^perp cap F) together with the lines through u^g inside W(u^g).
HexagonModel build_split_cayley(int q);

struct StepVerdict {
  int step = 0;  // 1..7; 8 is the |W_2(x)| count
  std::string name;
  bool ok = false;
  std::string detail;
};

/// Exhaustive checks of the construction steps (1)-(7) plus |W_2(x)| = (q^5-1)/(q-1).
std::vector<StepVerdict> verify_construction_steps(const HexagonModel& M);

/// Hexagon transported to the symplectic quotient of O(7, q), q even.
struct SymplecticHexagon {
  PolarSpace space;              // Sp(6, q) on GF(q)^6 (coordinate d dropped)
  IncidenceGeometry geometry;    // point ids index space.points()
  bool lines_totally_isotropic = false;
  bool w2_is_perp = false;       // W_2(x) = x^perp for every point
  int w2_hyperplanes = 0;        // points with W_2(x) spanning a hyperplane
};

/// Throws PolarError for odd q.
SymplecticHexagon hexagon_in_sp6(const HexagonModel& M);

/// Automorphisms of the q = 2 hexagon inside Sp(6, 2), by filtering every isometry
/// of the symplectic form.
struct HexagonStabilizer {
  std::uint64_t symplectic_isometries = 0;  // number of Sp(6, 2) elements examined
  std::uint64_t order = 0;                  // elements mapping lines to lines
  Group group;                              // greedy generating set of the stabilizer
};
HexagonStabilizer hexagon_stabilizer_q2(const SymplecticHexagon& S);

/// Ordered ordinary hexagons (x0..x5): a closed path in the point graph with
/// x_i, x_(i+3) opposite.
std::vector<std::vector<int>> ordered_hexagons(const IncidenceGeometry& G);

struct OrbitSplit {
  int total = 0;
  std::vector<int> sizes;  // descending
};
/// Orbits of a group on the t.i. lines and t.i. planes of its symplectic space.
OrbitSplit orbit_split(const Group& G, const std::vector<Subspace>& subspaces);

}  // namespace geomforge
