#pragma once

#include "polyef/polyhedron.hpp"

#include <cstddef>
#include <vector>

namespace polyef {

/// x ↦ matrix·x + offset.
struct AffineMap {
  RMatrix matrix;
  RVector offset;

  static AffineMap linear(RMatrix matrix);
  static AffineMap identity(std::size_t dim);

  std::size_t in_dim() const { return matrix.cols(); }
  std::size_t out_dim() const { return matrix.rows(); }
  bool is_linear() const { return is_zero(offset); }

  RVector apply(const RVector &x) const;
  /// Image of a direction (offset ignored).
  RVector apply_linear(const RVector &d) const;

  void validate() const;
  bool operator==(const AffineMap &) const = default;
};

/// outer ∘ inner.
AffineMap compose(const AffineMap &outer, const AffineMap &inner);

/// Partition of the coordinates into the kept block (in the given order) and
/// the dropped block (ascending).
class CoordinateSplit {
public:
  /// Throws std::out_of_range / std::invalid_argument on bad or repeated
  /// indices.
  static CoordinateSplit keep_only(std::size_t dim, std::vector<std::size_t> keep);

  std::size_t dim() const { return dim_; }
  const std::vector<std::size_t> &keep() const { return keep_; }
  const std::vector<std::size_t> &drop() const { return drop_; }

  /// The linear map that erases the dropped coordinates.
  AffineMap eraser() const;
  /// Restriction of a full-dimensional vector to the kept block.
  RVector restrict(const RVector &full) const;

private:
  std::size_t dim_ = 0;
  std::vector<std::size_t> keep_;
  std::vector<std::size_t> drop_;
};

/// {x : ∃w (w, x) ∈ h} by Fourier–Motzkin elimination of the dropped
/// coordinates in ascending order, pruning redundancy after each step.
/// Equalities involving a dropped coordinate are used for substitution.
HRep project_coords(const HRep &h, const CoordinateSplit &split);

/// Image under an affine map through the generators, re-minimalized.
Polyhedron image(const Polyhedron &p, const AffineMap &map);

/// {(x, x') : x ∈ domain, x' = matrix·x + offset} in R^{in + out}.
HRep graph_polyhedron(const AffineMap &map, const HRep &domain);

} // namespace polyef
