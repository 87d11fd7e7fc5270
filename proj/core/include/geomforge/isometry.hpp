#pragma once

#include <cstdint>
#include <functional>

#include "geomforge/polar.hpp"

namespace geomforge {

/// Restrictions for an isometry search. The isometry g is built from images
/// w_i = b_i^g of the basis rows; `partial(level, images)` sees w_0..w_level and
/// may reject the branch. An empty basis means the standard basis.
struct IsometryQuery {
  Matrix basis;
  std::function<bool(int level, const Matrix& images)> partial;
};

/// Enumerates every linear map preserving a symplectic or quadratic form exactly
/// (B, and phi when quadratic), by backtracking over basis images with forward
/// checking of the Gram conditions. `visit` gets the matrix in standard
/// coordinates and returns false to stop. Returns the number of maps visited.
std::uint64_t for_each_isometry(const Form& form, const IsometryQuery& query,
                                const std::function<bool(const Matrix& g)>& visit);

}  // namespace geomforge
