#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "cokahler/errors.hpp"
#include "cokahler/numeric.hpp"

namespace cokahler {

/// Strictly increasing tuple of 1-based indices; a basis monomial
/// e_{i1} ^ e_{i2} ^ ... of the exterior algebra.
class MultiIndex {
 public:
  MultiIndex() = default;

  explicit MultiIndex(std::vector<int> indices) : idx_(std::move(indices)) {
    for (std::size_t i = 0; i < idx_.size(); ++i) {
      if (idx_[i] < 1 || (i > 0 && idx_[i] <= idx_[i - 1]))
        throw ValidationError("multi-index must be strictly increasing and positive");
    }
  }

  int degree() const { return static_cast<int>(idx_.size()); }
  const std::vector<int>& indices() const { return idx_; }
  int max_index() const { return idx_.empty() ? 0 : idx_.back(); }

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.idx_ == b.idx_; }
  friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) { return a.idx_ <=> b.idx_; }

  std::string to_string() const {
    if (idx_.empty()) return "1";
    std::string s = "e_{";
    for (std::size_t i = 0; i < idx_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(idx_[i]);
    }
    return s + "}";
  }

 private:
  std::vector<int> idx_;
};

/// All C(dim, k) strictly increasing k-tuples from {1..dim}, lexicographic.
inline std::vector<MultiIndex> basis(int k, int dim) {
  if (k < 0 || k > dim)
    throw DegreeError("degree " + std::to_string(k) + " out of range for dimension " +
                      std::to_string(dim));
  std::vector<MultiIndex> out;
  out.reserve(static_cast<std::size_t>(to_int64(binomial(dim, k))));
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
  for (;;) {
    out.emplace_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == dim - (k - 1 - i)) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

/// Lexicographic rank of a k-combination within basis(k, dim).
inline std::size_t basis_rank(const MultiIndex& mi, int dim) {
  const int k = mi.degree();
  if (mi.max_index() > dim) throw DegreeError("multi-index exceeds dimension");
  Int r = 0;
  int prev = 0;
  for (int i = 0; i < k; ++i) {
    const int ci = mi.indices()[static_cast<std::size_t>(i)];
    for (int v = prev + 1; v < ci; ++v) r += binomial(dim - v, k - 1 - i);
    prev = ci;
  }
  return static_cast<std::size_t>(to_int64(r));
}

}  // namespace cokahler
