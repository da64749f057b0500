#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cokahler/errors.hpp"
#include "cokahler/matrix.hpp"
#include "cokahler/numeric.hpp"

namespace cokahler {

/// Smith decomposition U*A*V = S with U, V unimodular and S diagonal with
/// the divisibility chain s_1 | s_2 | ... and nonnegative entries.
struct SnfResult {
  Matrix u;
  Matrix s;
  Matrix v;

  std::vector<Int> diagonal() const {
    std::vector<Int> d;
    const std::size_t k = std::min(s.rows(), s.cols());
    d.reserve(k);
    for (std::size_t i = 0; i < k; ++i) d.push_back(numerator(s(i, i)));
    return d;
  }
};

namespace detail {

struct IntGrid {
  std::size_t rows, cols;
  std::vector<Int> a;
  Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

inline void grid_swap_rows(IntGrid& g, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < g.cols; ++c) std::swap(g.at(i, c), g.at(j, c));
}
inline void grid_swap_cols(IntGrid& g, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < g.rows; ++r) std::swap(g.at(r, i), g.at(r, j));
}
inline void grid_add_row(IntGrid& g, std::size_t dst, std::size_t src, const Int& f) {
  for (std::size_t c = 0; c < g.cols; ++c) g.at(dst, c) += f * g.at(src, c);
}
inline void grid_add_col(IntGrid& g, std::size_t dst, std::size_t src, const Int& f) {
  for (std::size_t r = 0; r < g.rows; ++r) g.at(r, dst) += f * g.at(r, src);
}
inline void grid_negate_row(IntGrid& g, std::size_t i) {
  for (std::size_t c = 0; c < g.cols; ++c) g.at(i, c) = -g.at(i, c);
}

inline Matrix grid_to_matrix(const IntGrid& g) {
  Matrix m(g.rows, g.cols);
  for (std::size_t i = 0; i < g.rows; ++i)
    for (std::size_t j = 0; j < g.cols; ++j) m(i, j) = Rat(g.at(i, j));
  return m;
}

}  // namespace detail

inline SnfResult snf(const Matrix& a) {
  if (!a.is_integral()) throw IntegralityError("snf requires integer entries");
  const std::size_t r = a.rows(), c = a.cols();
  detail::IntGrid s{r, c, a.integer_data()};
  detail::IntGrid u{r, r, Matrix::identity(r).integer_data()};
  detail::IntGrid v{c, c, Matrix::identity(c).integer_data()};

  const std::size_t steps = std::min(r, c);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // Minimal-|value| pivot bounds intermediate growth.
      std::size_t pi = t, pj = t;
      Int best = 0;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j) {
          const Int& x = s.at(i, j);
          if (x.is_zero()) continue;
          if (best.is_zero() || abs(x) < best) {
            best = abs(x);
            pi = i;
            pj = j;
          }
        }
      if (best.is_zero()) {
        t = steps;  // the remaining block is zero
        break;
      }
      detail::grid_swap_rows(s, t, pi);
      detail::grid_swap_rows(u, t, pi);
      detail::grid_swap_cols(s, t, pj);
      detail::grid_swap_cols(v, t, pj);

      bool cleared = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (s.at(i, t).is_zero()) continue;
        const Int q = s.at(i, t) / s.at(t, t);
        detail::grid_add_row(s, i, t, -q);
        detail::grid_add_row(u, i, t, -q);
        if (!s.at(i, t).is_zero()) cleared = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (s.at(t, j).is_zero()) continue;
        const Int q = s.at(t, j) / s.at(t, t);
        detail::grid_add_col(s, j, t, -q);
        detail::grid_add_col(v, j, t, -q);
        if (!s.at(t, j).is_zero()) cleared = false;
      }
      if (!cleared) continue;  // remainders left; pick a smaller pivot

      // Pivot must divide the remaining block for the divisibility chain.
      std::size_t bad_row = 0;
      bool divides_all = true;
      for (std::size_t i = t + 1; i < r && divides_all; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (s.at(i, j) % s.at(t, t) != 0) {
            bad_row = i;
            divides_all = false;
            break;
          }
      if (divides_all) break;
      detail::grid_add_row(s, t, bad_row, 1);
      detail::grid_add_row(u, t, bad_row, 1);
    }
    if (t >= steps) break;
    if (s.at(t, t) < 0) {
      detail::grid_negate_row(s, t);
      detail::grid_negate_row(u, t);
    }
  }

  return SnfResult{detail::grid_to_matrix(u), detail::grid_to_matrix(s), detail::grid_to_matrix(v)};
}

/// coker(M) = Z^rank (+) Z/t_1 (+) Z/t_2 (+) ... with t_1 | t_2 | ... read
/// off the Smith diagonal of M : Z^cols -> Z^rows.
struct CokerStructure {
  std::size_t rank = 0;
  std::vector<Int> torsion;

  friend bool operator==(const CokerStructure& a, const CokerStructure& b) {
    return a.rank == b.rank && a.torsion == b.torsion;
  }
};

inline CokerStructure coker_structure(const Matrix& m) {
  const SnfResult f = snf(m);
  CokerStructure out;
  std::size_t nonzero = 0;
  for (const Int& d : f.diagonal()) {
    if (d.is_zero()) continue;
    ++nonzero;
    if (d > 1) out.torsion.push_back(d);
  }
  out.rank = m.rows() - nonzero;
  return out;
}

}  // namespace cokahler
