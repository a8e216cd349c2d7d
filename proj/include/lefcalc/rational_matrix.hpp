#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace lefcalc {

using Rational = boost::multiprecision::mpq_rational;

/// Dense row-major matrix over the rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix operator*(const RationalMatrix& rhs) const;
  bool operator==(const RationalMatrix& rhs) const = default;

  bool is_zero() const;
  Rational trace() const;
  RationalMatrix column(std::size_t c) const;
  /// Columns `indices` of this matrix, in order.
  RationalMatrix columns(const std::vector<std::size_t>& indices) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form with the pivot columns, chosen left to right
/// (first nonzero entry in each column below the current row).
struct RowEchelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivots;
};

RowEchelon row_echelon(RationalMatrix matrix);

std::size_t rank(const RationalMatrix& matrix);

/// Columns spanning the null space, one per free variable of the echelon form.
RationalMatrix kernel_basis(const RationalMatrix& matrix);

/// The pivot columns of `matrix`: a basis of its column space.
RationalMatrix image_basis(const RationalMatrix& matrix);

/// Solves basis * T = rhs for T, where `basis` has independent columns.
/// Throws InternalError when rhs is not in the column space of basis.
RationalMatrix solve_in_basis(const RationalMatrix& basis, const RationalMatrix& rhs);

/// Trace of `endomorphism` restricted to the subspace spanned by the columns
/// of `basis`, which must be invariant.
Rational restricted_trace(const RationalMatrix& endomorphism, const RationalMatrix& basis);

}  // namespace lefcalc
