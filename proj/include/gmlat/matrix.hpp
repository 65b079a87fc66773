#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "gmlat/integer.hpp"

namespace gmlat {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix diagonal(const IntVector& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector col(std::size_t j) const;

  IntMatrix transpose() const;
  IntMatrix scaled(const Integer& factor) const;
  IntMatrix operator-() const { return scaled(-1); }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b);
  friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& v);
RatVector operator*(const IntMatrix& a, const RatVector& v);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const RatVector& a, const RatVector& b);
RatVector to_rational(const IntVector& v);

/// x^T * gram * y
Integer bilinear(const IntMatrix& gram, const IntVector& x, const IntVector& y);
Rational bilinear(const IntMatrix& gram, const RatVector& x, const RatVector& y);

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);

/// left * input * right = diag(invariants, 0...), with left and right unimodular and
/// invariants positive, each dividing the next.
struct SmithForm {
  IntMatrix left;
  IntMatrix right;
  IntVector invariants;  // nonzero diagonal entries, length == rank
  std::size_t rank() const { return invariants.size(); }
};

SmithForm smith_normal_form(const IntMatrix& m);

std::size_t matrix_rank(const IntMatrix& m);

/// Row-style Hermite normal form of the row lattice (zero rows dropped).
IntMatrix hermite_normal_form(const IntMatrix& m);

/// Rows form a basis of {v in Z^cols : m * v = 0}; the basis is saturated and in
/// Hermite normal form.
IntMatrix integer_kernel(const IntMatrix& m);

/// Rational inverse of a square nonsingular matrix, returned as (adjugate-like numerator, denominator)
/// with inverse == numerator / denominator and denominator > 0.
struct RationalInverse {
  IntMatrix numerator;
  Integer denominator;
};
RationalInverse rational_inverse(const IntMatrix& m);

}  // namespace gmlat
