#pragma once

#include "polyef/matrix.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

namespace polyef {

/// coef·x ≤ rhs as an inequality, coef·x = rhs as an equality.
struct Constraint {
  RVector coef;
  Rational rhs;

  bool operator==(const Constraint &) const = default;
};

bool constraint_less(const Constraint &a, const Constraint &b);

/// Polyhedron {x ∈ R^dim : inequalities, equalities}. No constraints at all
/// denotes the whole space.
struct HRep {
  std::size_t dim = 0;
  std::vector<Constraint> inequalities;
  std::vector<Constraint> equalities;

  static HRep universe(std::size_t dim);
  /// Canonical empty set: the single inequality 0·x ≤ -1.
  static HRep empty_set(std::size_t dim);

  /// Throws DimensionMismatch if any coefficient vector has the wrong length.
  void validate() const;

  bool operator==(const HRep &) const = default;
};

/// conv(points) + cone(rays) + span(lines). Empty iff `points` is empty.
struct VRep {
  std::size_t dim = 0;
  std::vector<RVector> points;
  std::vector<RVector> rays;
  std::vector<RVector> lines;

  bool is_empty() const { return points.empty(); }
  /// Throws DimensionMismatch on bad lengths, Error on zero rays/lines.
  void validate() const;

  bool operator==(const VRep &) const = default;
};

/// Desk-scale guards for the representation conversions.
struct Limits {
  std::size_t max_dim = 8;
  std::size_t max_constraints = 64;
  std::size_t max_generators = 64;
};

/// A polyhedron known by an H-representation, a V-representation, or both.
/// The missing one is computed on first use and cached; copies share the
/// cache, which is filled at most once under a lock.
class Polyhedron {
public:
  static Polyhedron from_h(HRep h, Limits limits = {});
  static Polyhedron from_v(VRep v, Limits limits = {});
  /// Both must describe the same set; checked in verification mode.
  static Polyhedron from_both(HRep h, VRep v, Limits limits = {});

  std::size_t ambient_dim() const;
  bool has_h() const;
  bool has_v() const;
  const HRep &h() const;
  const VRep &v() const;

private:
  struct State;
  explicit Polyhedron(std::shared_ptr<State> state);
  std::shared_ptr<State> state_;
};

bool h_contains(const HRep &h, const RVector &x);
bool v_contains(const VRep &v, const RVector &x);
bool contains(const Polyhedron &p, const RVector &x);

/// d with A d ≤ 0 and E d = 0.
bool in_recession_cone(const HRep &h, const RVector &direction);

/// Dimension of the affine hull; -1 when empty.
int dimension(const HRep &h);
int dimension(const VRep &v);
int dimension(const Polyhedron &p);

/// True when nonempty and free of rays and lines, or empty.
bool is_bounded(const Polyhedron &p);

/// Minimal generators by the double description method: vertices of the
/// polyhedron intersected with the orthogonal complement of its lineality
/// space, primitive extreme rays in that complement, and an RREF basis of the
/// lineality space. All lists are in canonical order.
VRep h_to_v(const HRep &h, const Limits &limits = {});

/// Irredundant description: affine hull equalities (RREF, primitive) and
/// facet inequalities (reduced modulo the equalities, primitive), sorted.
HRep v_to_h(const VRep &v, const Limits &limits = {});

/// Whether dropping inequality `index` leaves the set unchanged.
/// Throws std::out_of_range for a bad index.
bool is_redundant(const HRep &h, std::size_t index);

/// Equivalent description with implicit equalities promoted and every
/// remaining inequality irredundant. Uses the same canonical form as v_to_h.
HRep remove_redundancy(const HRep &h);

/// Set equality of two polyhedra of the same ambient dimension.
bool poly_equal(const Polyhedron &a, const Polyhedron &b);

/// Set equality from explicit representations of both sides.
bool sets_equal(const HRep &ha, const VRep &va, const HRep &hb, const VRep &vb);

/// Canonical scaling used in every emitted description.
Constraint normalize_inequality(const Constraint &c);
Constraint normalize_equality(const Constraint &c);

/// Inequality count where each equality counts as two inequalities.
std::size_t inequality_size(const HRep &h);

} // namespace polyef
