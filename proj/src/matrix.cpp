#include "polyef/matrix.hpp"
#include "polyef/error.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace polyef {

RMatrix::RMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RMatrix RMatrix::identity(std::size_t n) {
  RMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

RMatrix RMatrix::from_rows(const std::vector<RVector> &rows, std::size_t cols) {
  RMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw DimensionMismatch("matrix row has wrong length");
    std::copy(rows[r].begin(), rows[r].end(), m.entries_.begin() + r * cols);
  }
  return m;
}

RMatrix RMatrix::column(const RVector &entries) {
  RMatrix m(entries.size(), 1);
  std::copy(entries.begin(), entries.end(), m.entries_.begin());
  return m;
}

RVector RMatrix::row(std::size_t r) const {
  return RVector(entries_.begin() + r * cols_,
                 entries_.begin() + (r + 1) * cols_);
}

RVector RMatrix::col(std::size_t c) const {
  RVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    out[r] = (*this)(r, c);
  return out;
}

std::vector<RVector> RMatrix::row_list() const {
  std::vector<RVector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    out.push_back(row(r));
  return out;
}

RMatrix RMatrix::transpose() const {
  RMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

bool RMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Rational &q) { return sgn(q) == 0; });
}

RMatrix mat_mul(const RMatrix &lhs, const RMatrix &rhs) {
  if (lhs.cols() != rhs.rows())
    throw DimensionMismatch("mat_mul: inner dimensions differ");
  RMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      if (sgn(lhs(i, k)) == 0)
        continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j)
        out(i, j) += lhs(i, k) * rhs(k, j);
    }
  return out;
}

RVector mat_vec(const RMatrix &m, const RVector &v) {
  if (m.cols() != v.size())
    throw DimensionMismatch("mat_vec: vector length differs from columns");
  RVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out[i] += m(i, j) * v[j];
  return out;
}

RMatrix operator-(const RMatrix &m) {
  RMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = -m(i, j);
  return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size())
    throw DimensionMismatch("dot: lengths differ");
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0)
      acc += a[i] * b[i];
  return acc;
}

RVector add(const RVector &a, const RVector &b) {
  if (a.size() != b.size())
    throw DimensionMismatch("add: lengths differ");
  RVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[i] + b[i];
  return out;
}

RVector sub(const RVector &a, const RVector &b) {
  if (a.size() != b.size())
    throw DimensionMismatch("sub: lengths differ");
  RVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[i] - b[i];
  return out;
}

RVector scale(const RVector &a, const Rational &factor) {
  RVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[i] * factor;
  return out;
}

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Rational &q) { return sgn(q) == 0; });
}

RVector unit_vector(std::size_t dim, std::size_t index) {
  RVector e(dim);
  e[index] = 1;
  return e;
}

bool lex_less(const RVector &a, const RVector &b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

RVector primitive(const RVector &v) {
  mpz_class lcm_den = 1;
  for (const auto &q : v)
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den_mpz_t());
  mpz_class g = 0;
  for (const auto &q : v) {
    mpz_class n = q.get_num() * (lcm_den / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  if (g == 0)
    return v;
  RVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[i] = Rational(v[i].get_num() * (lcm_den / v[i].get_den()) / g);
  return out;
}

namespace {

using IntRow = std::vector<mpz_class>;

// Clears denominators row by row so elimination can stay in Z.
std::vector<IntRow> integer_rows(const std::vector<RVector> &rows) {
  std::vector<IntRow> out;
  out.reserve(rows.size());
  for (const auto &r : rows) {
    mpz_class lcm_den = 1;
    for (const auto &q : r)
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den_mpz_t());
    IntRow ir(r.size());
    for (std::size_t j = 0; j < r.size(); ++j)
      ir[j] = r[j].get_num() * (lcm_den / r[j].get_den());
    out.push_back(std::move(ir));
  }
  return out;
}

// Fraction-free (Bareiss) forward elimination over the first `pivot_cols`
// columns. Every intermediate entry is a minor of the input, so the
// divisions by the previous pivot are exact. Returns the pivot columns.
std::vector<std::size_t> bareiss(std::vector<IntRow> &m,
                                 std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  if (m.empty())
    return pivots;
  const std::size_t width = m.front().size();
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0)
      ++p;
    if (p == m.size())
      continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      for (std::size_t j = c + 1; j < width; ++j) {
        mpz_class t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

} // namespace

std::optional<RMatrix> solve_square(const RMatrix &m, const RMatrix &rhs) {
  if (m.rows() != m.cols())
    throw DimensionMismatch("solve_square: matrix is not square");
  if (rhs.rows() != m.rows())
    throw DimensionMismatch("solve_square: right-hand side has wrong length");
  const std::size_t n = m.rows();
  const std::size_t k = rhs.cols();

  std::vector<RVector> aug(n, RVector(n + k));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug[i][j] = m(i, j);
    for (std::size_t j = 0; j < k; ++j)
      aug[i][n + j] = rhs(i, j);
  }
  auto ints = integer_rows(aug);
  if (bareiss(ints, n).size() < n)
    return std::nullopt;

  RMatrix x(n, k);
  for (std::size_t col = 0; col < k; ++col) {
    for (std::size_t ii = n; ii-- > 0;) {
      Rational acc(ints[ii][n + col]);
      for (std::size_t j = ii + 1; j < n; ++j)
        acc -= Rational(ints[ii][j]) * x(j, col);
      x(ii, col) = acc / Rational(ints[ii][ii]);
    }
  }
  return x;
}

std::optional<RVector> solve_square(const RMatrix &m, const RVector &rhs) {
  auto x = solve_square(m, RMatrix::column(rhs));
  if (!x)
    return std::nullopt;
  return x->col(0);
}

RMatrix gram_solve(const RMatrix &b, const RMatrix &m) {
  if (b.rows() != m.rows())
    throw DimensionMismatch("gram_solve: B and M have different row counts");
  RMatrix bt = b.transpose();
  auto x = solve_square(mat_mul(bt, b), mat_mul(bt, m));
  if (!x)
    throw GramSingular();
  return *x;
}

std::size_t rank(const std::vector<RVector> &rows, std::size_t cols) {
  for (const auto &r : rows)
    if (r.size() != cols)
      throw DimensionMismatch("rank: row has wrong length");
  auto ints = integer_rows(rows);
  return bareiss(ints, cols).size();
}

std::size_t rank(const RMatrix &m) { return rank(m.row_list(), m.cols()); }

std::vector<RVector> rref_basis(const std::vector<RVector> &rows,
                                std::size_t cols) {
  std::vector<RVector> m = rows;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && sgn(m[p][c]) == 0)
      ++p;
    if (p == m.size())
      continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (auto &e : m[r])
      e *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || sgn(m[i][c]) == 0)
        continue;
      Rational f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j)
        m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  m.resize(r);
  return m;
}

std::vector<RVector> nullspace(const RMatrix &m) {
  auto basis = rref_basis(m.row_list(), m.cols());
  std::vector<std::size_t> pivot_of_row;
  std::vector<bool> is_pivot(m.cols(), false);
  for (const auto &row : basis) {
    std::size_t c = 0;
    while (sgn(row[c]) == 0)
      ++c;
    pivot_of_row.push_back(c);
    is_pivot[c] = true;
  }
  std::vector<RVector> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free])
      continue;
    RVector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < basis.size(); ++i)
      v[pivot_of_row[i]] = -basis[i][free];
    out.push_back(std::move(v));
  }
  return out;
}

} // namespace polyef
