#include "polyef/lp.hpp"
#include "polyef/error.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace polyef {

const char *to_string(LpStatus status) {
  switch (status) {
  case LpStatus::optimal:
    return "optimal";
  case LpStatus::unbounded:
    return "unbounded";
  case LpStatus::infeasible:
    return "infeasible";
  }
  return "?";
}

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Standard-form tableau: rows are σᵢ(aᵢx⁺ − aᵢx⁻ + sᵢ) = σᵢbᵢ with σᵢ chosen
// so every right-hand side is nonnegative. Column order is x⁺, x⁻, slacks,
// artificials; Bland's rule uses this order.
class Tableau {
public:
  Tableau(const HRep &h) : n_(h.dim), k_(h.inequalities.size()) {
    const std::size_t m = k_ + h.equalities.size();
    sign_.assign(m, 1);
    identity_col_.assign(m, kNone);
    rows_.assign(m, RVector());
    basis_.assign(m, kNone);

    std::vector<bool> needs_artificial(m, false);
    for (std::size_t i = 0; i < m; ++i) {
      const Constraint &c = i < k_ ? h.inequalities[i] : h.equalities[i - k_];
      if (sgn(c.rhs) < 0)
        sign_[i] = -1;
      needs_artificial[i] = i >= k_ || sign_[i] < 0;
    }
    std::size_t artificials = 0;
    for (bool b : needs_artificial)
      artificials += b ? 1 : 0;
    first_artificial_ = 2 * n_ + k_;
    cols_ = first_artificial_ + artificials;

    std::size_t next_art = first_artificial_;
    for (std::size_t i = 0; i < m; ++i) {
      const Constraint &c = i < k_ ? h.inequalities[i] : h.equalities[i - k_];
      RVector row(cols_ + 1);
      const Rational s(sign_[i]);
      for (std::size_t j = 0; j < n_; ++j) {
        row[j] = s * c.coef[j];
        row[n_ + j] = -row[j];
      }
      if (i < k_)
        row[2 * n_ + i] = s;
      row[cols_] = s * c.rhs;
      if (needs_artificial[i]) {
        row[next_art] = 1;
        identity_col_[i] = next_art++;
      } else {
        identity_col_[i] = 2 * n_ + i;
      }
      basis_[i] = identity_col_[i];
      rows_[i] = std::move(row);
    }
  }

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  std::size_t first_artificial() const { return first_artificial_; }
  bool is_artificial(std::size_t j) const { return j >= first_artificial_; }

  enum class Result { optimal, unbounded };

  // Minimizes cost·z over the current basis with Bland's rule; columns at or
  // beyond `enter_limit` never enter. On unbounded, `entering` is the column.
  Result run(const RVector &cost, std::size_t enter_limit,
             std::size_t &entering) {
    RVector reduced = cost;
    reduced.push_back(0);
    for (std::size_t i = 0; i < rows(); ++i) {
      const Rational &cb = cost[basis_[i]];
      if (sgn(cb) == 0)
        continue;
      for (std::size_t j = 0; j <= cols_; ++j)
        reduced[j] -= cb * rows_[i][j];
    }

    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < enter_limit; ++j)
        if (sgn(reduced[j]) < 0) {
          enter = j;
          break;
        }
      if (enter == kNone)
        return Result::optimal;

      std::size_t leave = kNone;
      Rational best;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (sgn(rows_[i][enter]) <= 0)
          continue;
        Rational ratio = rows_[i][cols_] / rows_[i][enter];
        if (leave == kNone || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == kNone) {
        entering = enter;
        return Result::unbounded;
      }
      pivot(leave, enter, &reduced);
    }
  }

  void pivot(std::size_t r, std::size_t c, RVector *reduced = nullptr) {
    RVector &prow = rows_[r];
    const Rational inv = 1 / prow[c];
    for (auto &e : prow)
      if (sgn(e) != 0)
        e *= inv;
    auto eliminate = [&](RVector &row) {
      if (sgn(row[c]) == 0)
        return;
      const Rational f = row[c];
      for (std::size_t j = 0; j <= cols_; ++j)
        if (sgn(prow[j]) != 0)
          row[j] -= f * prow[j];
    };
    for (std::size_t i = 0; i < rows(); ++i)
      if (i != r)
        eliminate(rows_[i]);
    if (reduced)
      eliminate(*reduced);
    basis_[r] = c;
  }

  // Pivots basic artificials out where a non-artificial column allows it.
  // Rows where none does are linearly dependent and keep their artificial
  // basic at zero; their non-artificial entries stay zero under later pivots.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < rows(); ++i) {
      if (!is_artificial(basis_[i]))
        continue;
      for (std::size_t j = 0; j < first_artificial_; ++j)
        if (sgn(rows_[i][j]) != 0) {
          pivot(i, j);
          break;
        }
    }
  }

  RVector primal() const {
    RVector z(cols_);
    for (std::size_t i = 0; i < rows(); ++i)
      z[basis_[i]] = rows_[i][cols_];
    return z;
  }

  RVector x_of(const RVector &z) const {
    RVector x(n_);
    for (std::size_t j = 0; j < n_; ++j)
      x[j] = z[j] - z[n_ + j];
    return x;
  }

  RVector ray_direction(std::size_t entering) const {
    RVector d(cols_);
    d[entering] = 1;
    for (std::size_t i = 0; i < rows(); ++i)
      d[basis_[i]] = -rows_[i][entering];
    return x_of(d);
  }

  // π = c_B B⁻¹, read from the columns that formed the initial identity;
  // returns σᵢπᵢ, the multiplier of original row i.
  RVector row_multipliers(const RVector &cost) const {
    RVector y(rows());
    for (std::size_t i = 0; i < rows(); ++i) {
      Rational pi = 0;
      for (std::size_t r = 0; r < rows(); ++r) {
        const Rational &cb = cost[basis_[r]];
        if (sgn(cb) != 0)
          pi += cb * rows_[r][identity_col_[i]];
      }
      y[i] = sign_[i] < 0 ? Rational(-pi) : pi;
    }
    return y;
  }

  std::size_t num_inequalities() const { return k_; }

private:
  std::size_t n_;
  std::size_t k_;
  std::size_t cols_ = 0;
  std::size_t first_artificial_ = 0;
  std::vector<int> sign_;
  std::vector<std::size_t> identity_col_;
  std::vector<RVector> rows_;
  std::vector<std::size_t> basis_;
};

void check_outcome(const LinearProgram &lp, const LpOutcome &out) {
  const HRep &h = lp.feasible;
  if (out.status == LpStatus::optimal) {
    if (!h_contains(h, *out.point))
      throw VerificationError("simplex optimum is infeasible");
    if (dot(lp.objective, *out.point) != *out.value)
      throw VerificationError("simplex value does not match its point");
    if (!certificate_valid(lp, *out.dual, *out.value))
      throw VerificationError("simplex dual certificate is invalid");
  } else if (out.status == LpStatus::unbounded) {
    if (!in_recession_cone(h, *out.ray))
      throw VerificationError("unbounded ray is not a recession direction");
    Rational gain = dot(lp.objective, *out.ray);
    if (lp.sense == Sense::minimize ? sgn(gain) >= 0 : sgn(gain) <= 0)
      throw VerificationError("unbounded ray does not improve the objective");
  }
}

} // namespace

bool certificate_valid(const LinearProgram &lp, const DualCertificate &dual,
                       const Rational &value) {
  const HRep &h = lp.feasible;
  if (dual.inequality_multipliers.size() != h.inequalities.size() ||
      dual.equality_multipliers.size() != h.equalities.size())
    return false;
  RVector combo(h.dim);
  Rational rhs = 0;
  auto accumulate = [&](const std::vector<Constraint> &cs, const RVector &y) {
    for (std::size_t i = 0; i < cs.size(); ++i) {
      for (std::size_t j = 0; j < h.dim; ++j)
        combo[j] += y[i] * cs[i].coef[j];
      rhs += y[i] * cs[i].rhs;
    }
  };
  for (const auto &y : dual.inequality_multipliers)
    if (sgn(y) < 0)
      return false;
  accumulate(h.inequalities, dual.inequality_multipliers);
  accumulate(h.equalities, dual.equality_multipliers);
  const bool maximize = lp.sense == Sense::maximize;
  for (std::size_t j = 0; j < h.dim; ++j)
    if (combo[j] != (maximize ? lp.objective[j] : Rational(-lp.objective[j])))
      return false;
  return rhs == (maximize ? value : Rational(-value));
}

LpOutcome solve(const LinearProgram &lp) {
  const HRep &h = lp.feasible;
  h.validate();
  if (lp.objective.size() != h.dim)
    throw DimensionMismatch("LP objective length differs from dimension");

  Tableau t(h);
  LpOutcome out;
  std::size_t entering = kNone;

  if (t.first_artificial() < t.cols()) {
    RVector phase1(t.cols());
    for (std::size_t j = t.first_artificial(); j < t.cols(); ++j)
      phase1[j] = 1;
    t.run(phase1, t.cols(), entering);
    RVector z = t.primal();
    for (std::size_t j = t.first_artificial(); j < t.cols(); ++j)
      if (sgn(z[j]) != 0) {
        out.status = LpStatus::infeasible;
        return out;
      }
    t.drive_out_artificials();
  }

  const std::size_t n = h.dim;
  RVector cost(t.cols());
  for (std::size_t j = 0; j < n; ++j) {
    cost[j] = lp.sense == Sense::minimize ? lp.objective[j]
                                          : Rational(-lp.objective[j]);
    cost[n + j] = -cost[j];
  }

  if (t.run(cost, t.first_artificial(), entering) ==
      Tableau::Result::unbounded) {
    out.status = LpStatus::unbounded;
    out.ray = primitive(t.ray_direction(entering));
  } else {
    out.status = LpStatus::optimal;
    out.point = t.x_of(t.primal());
    out.value = dot(lp.objective, *out.point);
    RVector y = t.row_multipliers(cost);
    DualCertificate dual;
    for (std::size_t i = 0; i < y.size(); ++i) {
      Rational yi = -y[i];
      if (i < t.num_inequalities())
        dual.inequality_multipliers.push_back(yi);
      else
        dual.equality_multipliers.push_back(yi);
    }
    out.dual = std::move(dual);
  }
  if (verification_enabled())
    check_outcome(lp, out);
  return out;
}

std::optional<RVector> feasible_point(const HRep &h) {
  LpOutcome out = solve({RVector(h.dim), Sense::minimize, h});
  if (out.status != LpStatus::optimal)
    return std::nullopt;
  return out.point;
}

} // namespace polyef
