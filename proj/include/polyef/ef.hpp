#pragma once

#include "polyef/projection.hpp"

#include <cstddef>
#include <optional>

namespace polyef {

enum class EfDetail {
  ProjEqual,
  ProjPointNotInTarget,
  TargetPointNoLift,
  ImageEqual,
  ImageNotEqual,
};

const char *to_string(EfDetail detail);

/// Outcome of one extended-formulation test. A failing verdict always carries
/// a witness that has been re-checked with the membership primitives:
///  - ProjPointNotInTarget: the point has a lift into ext but is not in target
///  - TargetPointNoLift: the point is in target but has no lift
///  - ImageNotEqual: the point lies in exactly one of image and target
struct EfVerdict {
  bool holds = false;
  std::optional<RVector> witness;
  EfDetail detail = EfDetail::ProjEqual;
};

/// Projection of `ext` onto the kept block equals `target`.
///
/// Witness search order on failure:
///  1. vertices of the projection that are not in target;
///  2. vertices of target without a lift;
///  3. a target vertex moved along a projection ray/line that target does not
///     recede along, doubling the step until it leaves target;
///  4. symmetrically, a target vertex moved along a target ray until it loses
///     its lift.
EfVerdict check_ef_standard(const HRep &ext, const Polyhedron &target,
                            const CoordinateSplit &split);

/// x ∈ target ⇔ ∃w (w, x) ∈ ext, decided directly on the lifted system
/// without forming the projection: every target generator must lift, and
/// every target constraint must be valid on ext (exact LPs in the lifted
/// space). Agrees with check_ef_standard on `holds`.
EfVerdict check_ef_iff(const HRep &ext, const Polyhedron &target,
                       const CoordinateSplit &split);

/// image(ext, map) equals target. A nonzero offset is rejected unless
/// `allow_affine` is set.
EfVerdict check_ef_map(const Polyhedron &ext, const Polyhedron &target,
                       const AffineMap &map, bool allow_affine = false);

/// Search for a linear map M with image(ext, M) = target by assigning target
/// vertices to ext vertices. Candidates are returned only after check_ef_map
/// confirms them. Throws EnumerationBoundExceeded when the number of
/// assignments exceeds `enumeration_bound`.
std::optional<AffineMap> synthesize_linear_map(const Polyhedron &ext,
                                               const Polyhedron &target,
                                               std::size_t enumeration_bound = 10000);

/// Sizes of the irredundant forms of two given H-representations. These are
/// representation sizes, not extension complexities.
struct SizeReport {
  std::size_t ext_inequalities = 0;
  std::size_t ext_equalities = 0;
  std::size_t target_inequalities = 0;
  std::size_t target_equalities = 0;
  /// Compared with each equality counted as two inequalities.
  bool ext_ge_target = false;

  std::size_t ext_size() const { return ext_inequalities + 2 * ext_equalities; }
  std::size_t target_size() const {
    return target_inequalities + 2 * target_equalities;
  }
};

SizeReport lemma9_size_report(const HRep &ext, const HRep &target);

} // namespace polyef
