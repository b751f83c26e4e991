#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "pluricalc/rational.hpp"

namespace pluricalc {

using RatVector = std::vector<Rational>;

// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatMatrix operator-() const;
  RatVector operator*(const RatVector& v) const;
  RatMatrix operator*(const RatMatrix& o) const;
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

  // Principal submatrix on the given (sorted or not) index set.
  RatMatrix principal(const std::vector<std::size_t>& idx) const;

  // Largest |i - j| over nonzero entries; 0 for diagonal and empty matrices.
  std::size_t bandwidth() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& o) const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  RatMatrix to_rational() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

// Exact determinant. det of the 0x0 matrix is 1. Throws DimensionError when
// M is not square. Integer-valued input goes through fraction-free Bareiss
// elimination, everything else through rational Gaussian elimination.
Rational det(const RatMatrix& m);
BigInt det(const IntMatrix& m);

// Unique x with M x = v. Throws DimensionError or SingularMatrixError.
RatVector solve(const RatMatrix& m, const RatVector& v);

// True iff every leading principal minor of -M is positive. M is the raw
// (not negated) intersection matrix. Throws DimensionError when M is not
// square and symmetric.
bool is_negative_definite(const RatMatrix& m);

// Tridiagonal helpers: sub[i] = M(i+1, i), diag[i] = M(i, i), super[i] = M(i, i+1).
RatVector solve_tridiagonal(const RatVector& sub, const RatVector& diag, const RatVector& super,
                            const RatVector& rhs);
bool is_negative_definite_tridiagonal(const RatVector& offdiag, const RatVector& diag);

struct SmithForm {
  std::vector<BigInt> diag;  // non-negative, d1 | d2 | ...; length min(rows, cols)
  IntMatrix left;            // unimodular, rows x rows
  IntMatrix right;           // unimodular, cols x cols
};

// left * M * right is diagonal with the divisibility chain on its diagonal.
SmithForm smith_normal_form(const IntMatrix& m);

}  // namespace pluricalc
