#include "lefcalc/rational_matrix.hpp"

#include <utility>

#include "lefcalc/error.hpp"

namespace lefcalc {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw InternalError("matrix product shape mismatch");
  RationalMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        if (rhs(k, j) != 0) out(i, j) += a * rhs(k, j);
    }
  return out;
}

bool RationalMatrix::is_zero() const {
  for (const Rational& x : data_)
    if (x != 0) return false;
  return true;
}

Rational RationalMatrix::trace() const {
  if (rows_ != cols_) throw InternalError("trace of a non-square matrix");
  Rational t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

RationalMatrix RationalMatrix::column(std::size_t c) const { return columns({c}); }

RationalMatrix RationalMatrix::columns(const std::vector<std::size_t>& indices) const {
  RationalMatrix out(rows_, indices.size());
  for (std::size_t j = 0; j < indices.size(); ++j)
    for (std::size_t i = 0; i < rows_; ++i) out(i, j) = (*this)(i, indices[j]);
  return out;
}

RowEchelon row_echelon(RationalMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rational factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (m(row, j) != 0) m(i, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const RationalMatrix& matrix) { return row_echelon(matrix).pivots.size(); }

RationalMatrix kernel_basis(const RationalMatrix& matrix) {
  const RowEchelon e = row_echelon(matrix);
  std::vector<bool> is_pivot(matrix.cols(), false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < matrix.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);

  RationalMatrix basis(matrix.cols(), free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], k) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) basis(e.pivots[r], k) = -e.reduced(r, free[k]);
  }
  return basis;
}

RationalMatrix image_basis(const RationalMatrix& matrix) {
  return matrix.columns(row_echelon(matrix).pivots);
}

RationalMatrix solve_in_basis(const RationalMatrix& basis, const RationalMatrix& rhs) {
  if (basis.rows() != rhs.rows()) throw InternalError("solve_in_basis: row count mismatch");
  const std::size_t k = basis.cols();
  RationalMatrix augmented(basis.rows(), k + rhs.cols());
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    for (std::size_t j = 0; j < k; ++j) augmented(i, j) = basis(i, j);
    for (std::size_t j = 0; j < rhs.cols(); ++j) augmented(i, k + j) = rhs(i, j);
  }
  const RowEchelon e = row_echelon(std::move(augmented));
  for (std::size_t r = 0; r < k; ++r) {
    if (r >= e.pivots.size() || e.pivots[r] != r)
      throw InternalError("solve_in_basis: basis columns are dependent");
  }
  if (e.pivots.size() > k) throw InternalError("solve_in_basis: right-hand side leaves the subspace");
  RationalMatrix solution(k, rhs.cols());
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t j = 0; j < rhs.cols(); ++j) solution(r, j) = e.reduced(r, k + j);
  return solution;
}

Rational restricted_trace(const RationalMatrix& endomorphism, const RationalMatrix& basis) {
  if (basis.cols() == 0) return 0;
  return solve_in_basis(basis, endomorphism * basis).trace();
}

}  // namespace lefcalc
