#pragma once

#include <cstddef>
#include <vector>

#include "cokahler/errors.hpp"
#include "cokahler/matrix.hpp"
#include "cokahler/numeric.hpp"

namespace cokahler {

/// Monic characteristic polynomial det(xI - A), coefficients ascending:
/// result[k] is the coefficient of x^k, result[n] = 1.
/// Faddeev-LeVerrier; every division is exact.
inline std::vector<Rat> charpoly(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("charpoly of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<Rat> coeffs(n + 1);
  coeffs[n] = 1;
  Matrix aux = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix m = a * aux;
    const Rat c = -m.trace() / Rat(Int(k));
    coeffs[n - k] = c;
    if (k < n) {
      for (std::size_t i = 0; i < n; ++i) m(i, i) += c;
      aux = std::move(m);
    }
  }
  return coeffs;
}

inline Rat charpoly_determinant(const std::vector<Rat>& coeffs) {
  // det(A) = (-1)^n * p(0)
  const std::size_t n = coeffs.size() - 1;
  return (n % 2 == 0) ? coeffs[0] : -coeffs[0];
}

inline Rat charpoly_trace(const std::vector<Rat>& coeffs) {
  const std::size_t n = coeffs.size() - 1;
  return n == 0 ? Rat(0) : -coeffs[n - 1];
}

}  // namespace cokahler
