#pragma once

#include "polyef/matrix.hpp"

#include <cstddef>
#include <vector>

namespace polyef::detail {

/// Generators of the cone {z : a·z ≤ 0 for a in ineqs, a·z = 0 for a in eqs}:
/// a basis of the lineality space and the extreme rays modulo it.
struct ConeGenerators {
  std::vector<RVector> rays;
  std::vector<RVector> lines;
};

ConeGenerators dd_cone(std::size_t dim, const std::vector<RVector> &ineqs,
                       const std::vector<RVector> &eqs);

} // namespace polyef::detail
