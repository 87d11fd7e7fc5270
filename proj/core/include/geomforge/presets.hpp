#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "geomforge/group.hpp"
#include "geomforge/polar.hpp"

namespace geomforge {

struct PresetGroup {
  Group group;
  /// Polar space whose form the generators preserve, when there is one.
  std::optional<PolarSpace> space;
  /// Order of the induced projective group, when known in closed form.
  std::optional<std::uint64_t> known_order;
};

/// Named groups:
///   SL(n,q)  Sp(2m,q)  SU(n,q0)  Omega+(2m,q)  Omega-(2m,q)  Omega(2m+1,q)
///   A9_O8plus  SL2_4  SL2_4_semilinear  SL3_4_in_GL6_2  reducible(n,q)
///   hexagon_stabilizer_q2
/// Every generator is checked against its form (or linear structure) on construction.
/// Throws GroupError for unknown names.
PresetGroup preset_group(const std::string& name);

/// Names accepted by preset_group that the acceptance suite exercises.
std::vector<std::string> standard_preset_names();

/// Individual constructions.
std::vector<SemilinearMap> sl_generators(const Field& F, int n);
std::vector<SemilinearMap> symplectic_transvections(const Form& form);
/// Transvections x -> x + a B(x, v) v for every isotropic point v and trace-zero a.
std::vector<SemilinearMap> unitary_transvections(const Form& form);
/// Eichler (Siegel) maps x -> x + B(x,u)w - B(x,w)u - phi(w)B(x,u)u with u a singular
/// basis vector and w a multiple of a basis vector perpendicular to u.
std::vector<SemilinearMap> eichler_generators(const Form& form);
/// Permutation matrix of the even-weight module of GF(2)^9 in the basis e_i + e_9.
Matrix even_weight_permutation(const std::vector<int>& perm);
/// Quadratic form phi(v) = wt(v)/2 mod 2 on the even-weight module.
Form even_weight_form();

}  // namespace geomforge
