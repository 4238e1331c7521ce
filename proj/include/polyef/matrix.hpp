#pragma once

#include "polyef/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace polyef {

using RVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class RMatrix {
public:
  RMatrix() = default;
  RMatrix(std::size_t rows, std::size_t cols);

  static RMatrix identity(std::size_t n);
  /// Every row must have length `cols`.
  static RMatrix from_rows(const std::vector<RVector> &rows, std::size_t cols);
  static RMatrix column(const RVector &entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational &operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Rational &operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  RVector row(std::size_t r) const;
  RVector col(std::size_t c) const;
  std::vector<RVector> row_list() const;
  RMatrix transpose() const;
  bool is_zero() const;

  bool operator==(const RMatrix &other) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

RMatrix mat_mul(const RMatrix &lhs, const RMatrix &rhs);
RVector mat_vec(const RMatrix &m, const RVector &v);
RMatrix operator-(const RMatrix &m);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
RVector add(const RVector &a, const RVector &b);
RVector sub(const RVector &a, const RVector &b);
RVector scale(const RVector &a, const Rational &factor);
bool is_zero(std::span<const Rational> v);
RVector unit_vector(std::size_t dim, std::size_t index);

/// Lexicographic order on entries, used for canonical output order.
bool lex_less(const RVector &a, const RVector &b);

/// Positive multiple of `v` whose entries are coprime integers.
RVector primitive(const RVector &v);

/// Solution of M x = rhs, or nullopt when M is singular.
std::optional<RVector> solve_square(const RMatrix &m, const RVector &rhs);

/// Solution X of M X = R for every column of R, or nullopt when singular.
std::optional<RMatrix> solve_square(const RMatrix &m, const RMatrix &rhs);

/// (BᵀB)⁻¹BᵀM. Throws GramSingular when BᵀB is singular.
RMatrix gram_solve(const RMatrix &b, const RMatrix &m);

/// Rank over Q, by fraction-free elimination.
std::size_t rank(const RMatrix &m);
std::size_t rank(const std::vector<RVector> &rows, std::size_t cols);

/// Nonzero rows of the reduced row echelon form of `rows`. This is the
/// canonical basis of their span.
std::vector<RVector> rref_basis(const std::vector<RVector> &rows,
                                std::size_t cols);

/// Basis of {x : M x = 0}.
std::vector<RVector> nullspace(const RMatrix &m);

} // namespace polyef
