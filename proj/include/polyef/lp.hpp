#pragma once

#include "polyef/polyhedron.hpp"

#include <optional>

namespace polyef {

enum class Sense { minimize, maximize };
enum class LpStatus { optimal, unbounded, infeasible };

const char *to_string(LpStatus status);

/// Optimize objective·x over `feasible`. Variables are free.
struct LinearProgram {
  RVector objective;
  Sense sense = Sense::minimize;
  HRep feasible;
};

/// Dual certificate for an optimal answer, stated for the maximization form
/// of the problem (objective negated when minimizing): inequality multipliers
/// are nonnegative, equality multipliers free, the weighted constraint rows
/// sum to the (max-form) objective and the weighted right-hand sides to the
/// (max-form) optimal value.
struct DualCertificate {
  RVector inequality_multipliers;
  RVector equality_multipliers;
};

struct LpOutcome {
  LpStatus status = LpStatus::infeasible;
  std::optional<RVector> point;
  std::optional<Rational> value;
  /// Feasible recession direction that strictly improves the objective.
  std::optional<RVector> ray;
  std::optional<DualCertificate> dual;
};

/// Exact two-phase primal simplex with Bland's rule. Free variables are split
/// into nonnegative parts internally.
LpOutcome solve(const LinearProgram &lp);

/// Some feasible point, or nullopt when the system is empty.
std::optional<RVector> feasible_point(const HRep &h);

/// Checks a dual certificate against the problem and optimal value.
bool certificate_valid(const LinearProgram &lp, const DualCertificate &dual,
                       const Rational &value);

} // namespace polyef
