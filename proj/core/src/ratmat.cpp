#include "pluricalc/ratmat.hpp"

#include <algorithm>
#include <utility>

#include "pluricalc/error.hpp"

namespace pluricalc {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("RatMatrix: ragged initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool RatMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

RatMatrix RatMatrix::operator-() const {
  RatMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = -data_[i];
  return out;
}

RatVector RatMatrix::operator*(const RatVector& v) const {
  if (v.size() != cols_) throw DimensionError("RatMatrix * vector: size mismatch");
  RatVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational acc;
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rational& a = (*this)(i, j);
      if (!a.is_zero() && !v[j].is_zero()) acc += a * v[j];
    }
    out[i] = acc;
  }
  return out;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw DimensionError("RatMatrix * RatMatrix: size mismatch");
  RatMatrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
    }
  return out;
}

RatMatrix RatMatrix::principal(const std::vector<std::size_t>& idx) const {
  RatMatrix out(idx.size(), idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) out(a, b) = (*this)(idx[a], idx[b]);
  return out;
}

std::size_t RatMatrix::bandwidth() const {
  std::size_t bw = 0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero()) bw = std::max(bw, i > j ? i - j : j - i);
  return bw;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, BigInt(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("IntMatrix: ragged initializer");
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw DimensionError("IntMatrix * IntMatrix: size mismatch");
  IntMatrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += (*this)(i, k) * o(k, j);
  return out;
}

RatMatrix IntMatrix::to_rational() const {
  RatMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = Rational((*this)(i, j));
  return out;
}

namespace {

bool all_integral(const RatMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_integer()) return false;
  return true;
}

// Fraction-free elimination; every intermediate pivot is a minor of the input.
BigInt bareiss(IntMatrix a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(t);
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// In-place banded Gaussian elimination with partial pivoting (first nonzero
// within the band). Returns false if the matrix is singular. Applies the same
// row operations to rhs when non-null. Tracks the determinant sign and pivots.
struct Elimination {
  bool singular = false;
  int sign = 1;
};

Elimination eliminate(RatMatrix& a, RatVector* rhs) {
  const std::size_t n = a.rows();
  const std::size_t bw = a.bandwidth();
  Elimination out;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t row_end = std::min(n, i + bw + 1);
    const std::size_t col_end = std::min(n, i + 2 * bw + 1);
    std::size_t p = i;
    while (p < row_end && a(p, i).is_zero()) ++p;
    if (p == row_end) {
      out.singular = true;
      return out;
    }
    if (p != i) {
      for (std::size_t j = i; j < col_end; ++j) std::swap(a(i, j), a(p, j));
      if (rhs) std::swap((*rhs)[i], (*rhs)[p]);
      out.sign = -out.sign;
    }
    const Rational pivot = a(i, i);
    for (std::size_t r = i + 1; r < row_end; ++r) {
      if (a(r, i).is_zero()) continue;
      const Rational factor = a(r, i) / pivot;
      a(r, i) = 0;
      for (std::size_t j = i + 1; j < col_end; ++j) {
        if (!a(i, j).is_zero()) a(r, j) -= factor * a(i, j);
      }
      if (rhs && !(*rhs)[i].is_zero()) (*rhs)[r] -= factor * (*rhs)[i];
    }
  }
  return out;
}

}  // namespace

Rational det(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionError("det: matrix is not square");
  if (m.rows() == 0) return 1;
  if (all_integral(m)) {
    IntMatrix a(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) a(i, j) = m(i, j).numerator();
    return Rational(bareiss(std::move(a)));
  }
  RatMatrix a = m;
  const Elimination e = eliminate(a, nullptr);
  if (e.singular) return 0;
  Rational d = e.sign;
  for (std::size_t i = 0; i < a.rows(); ++i) d *= a(i, i);
  return d;
}

BigInt det(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("det: matrix is not square");
  return bareiss(m);
}

RatVector solve(const RatMatrix& m, const RatVector& v) {
  if (!m.is_square()) throw DimensionError("solve: matrix is not square");
  if (v.size() != m.rows()) throw DimensionError("solve: right-hand side has wrong length");
  RatMatrix a = m;
  RatVector b = v;
  if (eliminate(a, &b).singular) throw SingularMatrixError("solve: matrix is singular");
  const std::size_t n = a.rows();
  RatVector x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Rational acc = b[ii];
    for (std::size_t j = ii + 1; j < n; ++j)
      if (!a(ii, j).is_zero()) acc -= a(ii, j) * x[j];
    x[ii] = acc / a(ii, ii);
  }
  return x;
}

bool is_negative_definite(const RatMatrix& m) {
  if (!m.is_square() || !m.is_symmetric())
    throw DimensionError("is_negative_definite: matrix must be square and symmetric");
  // Without row exchanges the k-th pivot of -M is the ratio of consecutive
  // leading principal minors, so all minors are positive iff all pivots are.
  RatMatrix a = -m;
  const std::size_t n = a.rows();
  const std::size_t bw = a.bandwidth();
  for (std::size_t i = 0; i < n; ++i) {
    if (a(i, i).sign() <= 0) return false;
    const std::size_t end = std::min(n, i + bw + 1);
    for (std::size_t r = i + 1; r < end; ++r) {
      if (a(r, i).is_zero()) continue;
      const Rational factor = a(r, i) / a(i, i);
      for (std::size_t j = i + 1; j < end; ++j)
        if (!a(i, j).is_zero()) a(r, j) -= factor * a(i, j);
      a(r, i) = 0;
    }
  }
  return true;
}

RatVector solve_tridiagonal(const RatVector& sub, const RatVector& diag, const RatVector& super,
                            const RatVector& rhs) {
  const std::size_t n = diag.size();
  if (rhs.size() != n || (n > 0 && (sub.size() != n - 1 || super.size() != n - 1)))
    throw DimensionError("solve_tridiagonal: inconsistent sizes");
  if (n == 0) return {};
  // Thomas algorithm; falls back to the general solver on a zero pivot.
  RatVector c(n), d(n);
  Rational denom = diag[0];
  bool ok = !denom.is_zero();
  if (ok) {
    if (n > 1) c[0] = super[0] / denom;
    d[0] = rhs[0] / denom;
    for (std::size_t i = 1; i < n && ok; ++i) {
      denom = diag[i] - sub[i - 1] * c[i - 1];
      if (denom.is_zero()) {
        ok = false;
        break;
      }
      if (i + 1 < n) c[i] = super[i] / denom;
      d[i] = (rhs[i] - sub[i - 1] * d[i - 1]) / denom;
    }
  }
  if (!ok) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = diag[i];
      if (i + 1 < n) {
        m(i, i + 1) = super[i];
        m(i + 1, i) = sub[i];
      }
    }
    return solve(m, rhs);
  }
  RatVector x(n);
  x[n - 1] = d[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) x[i] = d[i] - c[i] * x[i + 1];
  return x;
}

bool is_negative_definite_tridiagonal(const RatVector& offdiag, const RatVector& diag) {
  const std::size_t n = diag.size();
  if (n > 0 && offdiag.size() != n - 1) throw DimensionError("tridiagonal: inconsistent sizes");
  // Leading minors of -M: D_k = -d_k D_{k-1} - o_{k-1}^2 D_{k-2}.
  Rational prev2 = 1;
  Rational prev1 = 1;
  for (std::size_t k = 0; k < n; ++k) {
    Rational cur = -diag[k] * prev1;
    if (k > 0) cur -= offdiag[k - 1] * offdiag[k - 1] * prev2;
    if (cur.sign() <= 0) return false;
    prev2 = prev1;
    prev1 = cur;
  }
  return true;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix a = m;
  IntMatrix left = IntMatrix::identity(rows);
  IntMatrix right = IntMatrix::identity(cols);

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols; ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t c = 0; c < rows; ++c) std::swap(left(i, c), left(j, c));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows; ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t r = 0; r < cols; ++r) std::swap(right(r, i), right(r, j));
  };
  // row_dst -= q * row_src
  auto add_row = [&](std::size_t dst, std::size_t src, const BigInt& q) {
    for (std::size_t c = 0; c < cols; ++c) a(dst, c) -= q * a(src, c);
    for (std::size_t c = 0; c < rows; ++c) left(dst, c) -= q * left(src, c);
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const BigInt& q) {
    for (std::size_t r = 0; r < rows; ++r) a(r, dst) -= q * a(r, src);
    for (std::size_t r = 0; r < cols; ++r) right(r, dst) -= q * right(r, src);
  };

  const std::size_t rank_bound = std::min(rows, cols);
  for (std::size_t t = 0; t < rank_bound; ++t) {
    for (;;) {
      // Smallest nonzero |entry| of the trailing block becomes the pivot.
      bool found = false;
      std::size_t pr = t, pc = t;
      BigInt best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (a(i, j) == 0) continue;
          BigInt v = abs(a(i, j));
          if (!found || v < best) {
            found = true;
            best = v;
            pr = i;
            pc = j;
          }
        }
      if (!found) break;
      swap_rows(t, pr);
      swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        add_row(i, t, floor_div(a(i, t), a(t, t)));
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        add_col(j, t, floor_div(a(t, j), a(t, t)));
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          BigInt r;
          mpz_tdiv_r(r.get_mpz_t(), a(i, j).get_mpz_t(), a(t, t).get_mpz_t());
          if (r != 0) {
            // Fold the offending row into row t; the next pass shrinks the pivot.
            add_row(t, i, BigInt(-1));
            divides = false;
            break;
          }
        }
      if (divides) break;
    }
    if (a(t, t) < 0) {
      for (std::size_t c = 0; c < cols; ++c) a(t, c) = -a(t, c);
      for (std::size_t c = 0; c < rows; ++c) left(t, c) = -left(t, c);
    }
  }

  SmithForm out;
  out.diag.reserve(rank_bound);
  for (std::size_t i = 0; i < rank_bound; ++i) out.diag.push_back(a(i, i));
  out.left = std::move(left);
  out.right = std::move(right);
  return out;
}

}  // namespace pluricalc
