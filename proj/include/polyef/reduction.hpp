#pragma once

#include "polyef/lp.hpp"
#include "polyef/projection.hpp"

#include <optional>
#include <string>

namespace polyef {

/// The coupling L = {(x, y) : Bx + Cy = b} together with its normal form
/// x = C̄y + b̄, where C̄ = -(BᵀB)⁻¹BᵀC and b̄ = (BᵀB)⁻¹Bᵀb.
class AffineGraph {
public:
  const RMatrix &B() const { return b_mat_; }
  const RMatrix &C() const { return c_mat_; }
  const RVector &b() const { return rhs_; }
  const RMatrix &cbar() const { return cbar_; }
  const RVector &bbar() const { return bbar_; }

  std::size_t x_dim() const { return b_mat_.cols(); }
  std::size_t y_dim() const { return c_mat_.cols(); }

  /// L is nonempty (rank [B C] = rank [B C | b]).
  bool consistent() const { return consistent_; }
  /// B·C̄ = -C and B·b̄ = b, so L is exactly {x = C̄y + b̄} for every y.
  bool normal_form_exact() const { return normal_form_exact_; }
  /// Empty when consistent and exact; otherwise a human-readable note.
  const std::string &warning() const { return warning_; }

  /// y ↦ C̄y + b̄.
  AffineMap as_map() const { return AffineMap{cbar_, bbar_}; }
  RVector retrieve(const RVector &y) const { return as_map().apply(y); }

private:
  friend AffineGraph normalize_graph(const RMatrix &, const RMatrix &,
                                     const RVector &);
  RMatrix b_mat_, c_mat_;
  RVector rhs_;
  RMatrix cbar_;
  RVector bbar_;
  bool consistent_ = true;
  bool normal_form_exact_ = true;
  std::string warning_;
};

/// Throws GramSingular when BᵀB is singular, DimensionMismatch on bad shapes.
AffineGraph normalize_graph(const RMatrix &B, const RMatrix &C, const RVector &b);

/// Minimize (αᵀC̄)·y over Y, then retrieve x = C̄y* + b̄.
struct TwoStepResult {
  LpStatus status = LpStatus::infeasible;
  RVector reduced_objective;
  /// αᵀb̄, left out of the solver objective and added back to `value`.
  Rational constant;
  std::optional<RVector> y;
  std::optional<RVector> x;
  std::optional<Rational> value;
  std::optional<RVector> ray;
};

TwoStepResult two_step_solve(const Polyhedron &Y, const AffineGraph &graph,
                             const RVector &alpha);

struct ReductionInstance {
  std::optional<Polyhedron> X;
  Polyhedron Y;
  AffineGraph graph;
  RVector alpha;

  void validate() const;
};

struct LegResult {
  LpStatus status = LpStatus::infeasible;
  std::optional<Rational> value;
  std::optional<RVector> point;
};

struct EquivalenceReport {
  /// min αᵀx over X.
  LegResult lp0;
  /// min αᵀx over {(x, y) ∈ L, x ∈ X, y ∈ Y}; point is (x, y).
  LegResult lp1;
  /// two_step_solve; point is the optimal y.
  LegResult lp2;
  std::optional<RVector> retrieved_x;
  /// Same status on every leg and, when optimal, the same value.
  bool values_equal = false;
  /// retrieved x lies in X and attains the LP0 value.
  bool retrieved_optimal = false;
};

/// Text describing how "redundant for X and Y" is interpreted.
extern const char *const kRedundancyInterpretation;

/// Runs the three legs; requires inst.X. Status disagreements are reported.
EquivalenceReport verify_equivalence(const ReductionInstance &inst);
EquivalenceReport verify_equivalence(const ReductionInstance &inst,
                                     const RVector &alpha);

/// Every generator of X is hit by some y ∈ Y through the graph and every
/// generator of Y is sent into X (rays/lines through the recession cones).
bool check_graph_redundancy(const Polyhedron &X, const Polyhedron &Y,
                            const AffineGraph &graph);

struct CorrespondenceReport {
  bool redundant = false;
  bool injective = false;
  bool image_equal = false;
  std::string reason;

  bool bijective() const { return redundant && injective && image_equal; }
};

CorrespondenceReport correspondence_report(const Polyhedron &X,
                                           const Polyhedron &Y,
                                           const AffineGraph &graph);

/// y ↦ C̄y + b̄ is one-to-one on Y and maps Y onto X.
bool is_bijective_on(const Polyhedron &X, const Polyhedron &Y,
                     const AffineGraph &graph);

/// First α among ±unit vectors for which the legs disagree or the retrieved
/// x is not LP0-optimal.
std::optional<RVector> find_inequivalent_alpha(const ReductionInstance &inst);

} // namespace polyef
