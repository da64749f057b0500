#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cokahler/errors.hpp"
#include "cokahler/matrix.hpp"
#include "cokahler/numeric.hpp"

namespace cokahler {

/// Row echelon form produced by fraction-free (Bareiss) elimination on the
/// denominator-cleared matrix. Entries stay integral throughout; rationals
/// only reappear during back-substitution.
struct EchelonForm {
  std::vector<std::vector<Int>> rows;
  std::vector<std::size_t> pivot_cols;  // ascending, one per used row
  int swap_sign = 1;
  std::vector<Int> row_scales;  // denominator lcm applied to each input row
  std::size_t rank() const { return pivot_cols.size(); }
};

namespace detail {

inline Int exact_div(const Int& a, const Int& b) {
  Int q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (!r.is_zero())
    throw InternalConsistencyError("fraction-free elimination produced a non-exact division");
  return q;
}

}  // namespace detail

inline EchelonForm fraction_free_echelon(const Matrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  EchelonForm ef;
  ef.rows.assign(r, std::vector<Int>(c));
  ef.row_scales.assign(r, Int(1));
  for (std::size_t i = 0; i < r; ++i) {
    Int scale = 1;
    for (std::size_t j = 0; j < c; ++j) scale = lcm(scale, Int(denominator(m(i, j))));
    ef.row_scales[i] = scale;
    for (std::size_t j = 0; j < c; ++j)
      ef.rows[i][j] = numerator(m(i, j)) * (scale / denominator(m(i, j)));
  }

  Int prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < c && row < r; ++col) {
    std::size_t piv = row;
    while (piv < r && ef.rows[piv][col].is_zero()) ++piv;
    if (piv == r) continue;  // free column
    if (piv != row) {
      ef.rows[piv].swap(ef.rows[row]);
      ef.swap_sign = -ef.swap_sign;
    }
    for (std::size_t i = row + 1; i < r; ++i) {
      // The update must hit every row below the pivot, including rows whose
      // pivot-column entry is already zero, or later divisions stop being exact.
      for (std::size_t j = col + 1; j < c; ++j)
        ef.rows[i][j] = detail::exact_div(
            ef.rows[row][col] * ef.rows[i][j] - ef.rows[i][col] * ef.rows[row][j], prev);
      ef.rows[i][col] = 0;
    }
    prev = ef.rows[row][col];
    ef.pivot_cols.push_back(col);
    ++row;
  }
  return ef;
}

inline std::size_t rank(const Matrix& m) { return fraction_free_echelon(m).rank(); }

inline Rat determinant(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  EchelonForm ef = fraction_free_echelon(m);
  if (ef.rank() < n) return 0;
  Rat det(ef.rows[n - 1][n - 1] * ef.swap_sign);
  for (const Int& s : ef.row_scales) det /= Rat(s);
  return det;
}

namespace detail {

/// Scale a rational vector to a primitive integer vector whose first nonzero
/// entry is positive. Keeps kernel bases deterministic and readable.
inline std::vector<Rat> primitive_normalize(std::vector<Rat> v) {
  Int den = 1;
  for (const Rat& q : v) den = lcm(den, Int(denominator(q)));
  Int content = 0;
  for (Rat& q : v) {
    q *= Rat(den);
    content = gcd(content, numerator(q));
  }
  if (content > 1)
    for (Rat& q : v) q /= Rat(content);
  for (const Rat& q : v) {
    if (q.is_zero()) continue;
    if (q < 0)
      for (Rat& w : v) w = -w;
    break;
  }
  return v;
}

}  // namespace detail

/// Basis of { v : Mv = 0 } over the rationals, one vector per free column.
/// Vectors are primitive integer vectors, deterministic across runs.
inline std::vector<std::vector<Rat>> rational_kernel(const Matrix& m) {
  const std::size_t c = m.cols();
  EchelonForm ef = fraction_free_echelon(m);
  std::vector<bool> is_pivot(c, false);
  for (std::size_t p : ef.pivot_cols) is_pivot[p] = true;

  std::vector<std::vector<Rat>> basis;
  basis.reserve(c - ef.rank());
  for (std::size_t f = 0; f < c; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(c, Rat(0));
    v[f] = 1;
    for (std::size_t ri = ef.rank(); ri-- > 0;) {
      const std::size_t p = ef.pivot_cols[ri];
      Rat acc = 0;
      for (std::size_t j = p + 1; j < c; ++j)
        if (!v[j].is_zero() && !ef.rows[ri][j].is_zero()) acc += Rat(ef.rows[ri][j]) * v[j];
      v[p] = -acc / Rat(ef.rows[ri][p]);
    }
    basis.push_back(detail::primitive_normalize(std::move(v)));
  }
  return basis;
}

inline std::size_t kernel_dimension(const Matrix& m) { return m.cols() - rank(m); }

/// Exact inverse via Gauss-Jordan elimination over the rationals.
inline Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix a = m;
  Matrix inv = Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) throw SingularMatrixError("matrix is not invertible");
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    const Rat d = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= d;
      inv(col, j) /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col).is_zero()) continue;
      const Rat f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

}  // namespace cokahler
