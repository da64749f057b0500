#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "cokahler/errors.hpp"
#include "cokahler/matrix.hpp"
#include "cokahler/multi_index.hpp"
#include "cokahler/numeric.hpp"

namespace cokahler {

namespace detail {

inline std::uint32_t index_mask(const std::vector<int>& idx) {
  std::uint32_t m = 0;
  for (int i : idx) m |= 1u << (i - 1);
  return m;
}

}  // namespace detail

/// Matrix of the induced map on the k-th exterior power in the lexicographic
/// bases: entry (I, J) is the k x k minor of A with rows I and columns J.
/// Functorial: induced_map(A*B, k) = induced_map(A, k) * induced_map(B, k).
///
/// Minors are built level by level, expanding along the first column of J and
/// sharing every sub-minor across the C(2n,k)^2 grid; the grid dominates the
/// runtime for large k, so the sharing is what keeps high dimensions usable.
inline Matrix induced_map(const Matrix& a, int k) {
  if (!a.is_square()) throw DimensionError("induced_map needs a square matrix");
  const int dim = static_cast<int>(a.rows());
  if (k < 0 || k > dim)
    throw DegreeError("induced_map degree " + std::to_string(k) + " out of range for dimension " +
                      std::to_string(dim));
  if (dim > 31) throw DimensionError("induced_map supports dimension at most 31");

  // Level t stores all t x t minors, indexed by (row-set rank, col-set rank).
  std::vector<Rat> prev{Rat(1)};
  std::vector<MultiIndex> prev_combs = basis(0, dim);
  std::unordered_map<std::uint32_t, std::size_t> prev_rank{{0u, 0}};

  for (int t = 1; t <= k; ++t) {
    const std::vector<MultiIndex> combs = basis(t, dim);
    const std::size_t ct = combs.size();
    std::vector<Rat> cur(ct * ct, Rat(0));
    for (std::size_t ri = 0; ri < ct; ++ri) {
      const std::vector<int>& rows = combs[ri].indices();
      // Row subsets with one element removed, shared across all column sets.
      std::vector<std::size_t> sub_rank(static_cast<std::size_t>(t));
      const std::uint32_t rmask = detail::index_mask(rows);
      for (int s = 0; s < t; ++s)
        sub_rank[static_cast<std::size_t>(s)] =
            prev_rank.at(rmask & ~(1u << (rows[static_cast<std::size_t>(s)] - 1)));
      for (std::size_t ci = 0; ci < ct; ++ci) {
        const std::vector<int>& cols = combs[ci].indices();
        const std::uint32_t cmask_rest = detail::index_mask(cols) & ~(1u << (cols[0] - 1));
        const std::size_t crank_rest = prev_rank.at(cmask_rest);
        Rat acc = 0;
        for (int s = 0; s < t; ++s) {
          const Rat& entry = a(static_cast<std::size_t>(rows[static_cast<std::size_t>(s)] - 1),
                               static_cast<std::size_t>(cols[0] - 1));
          if (entry.is_zero()) continue;
          const Rat& sub = prev[sub_rank[static_cast<std::size_t>(s)] * prev_combs.size() +
                                crank_rest];
          if (sub.is_zero()) continue;
          if (s % 2 == 0)
            acc += entry * sub;
          else
            acc -= entry * sub;
        }
        cur[ri * ct + ci] = std::move(acc);
      }
    }
    prev = std::move(cur);
    prev_combs = combs;
    prev_rank.clear();
    for (std::size_t i = 0; i < prev_combs.size(); ++i)
      prev_rank.emplace(detail::index_mask(prev_combs[i].indices()), i);
  }

  const std::size_t ck = prev_combs.size();
  Matrix out(ck, ck);
  for (std::size_t i = 0; i < ck; ++i)
    for (std::size_t j = 0; j < ck; ++j) out(i, j) = prev[i * ck + j];
  return out;
}

/// The action of a diffeomorphism with linearization A on degree-k cohomology
/// of the torus: the induced map of the transpose.
inline Matrix cohomology_action(const Matrix& a, int k) { return induced_map(a.transpose(), k); }

}  // namespace cokahler
