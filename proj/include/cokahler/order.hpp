#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "cokahler/charpoly.hpp"
#include "cokahler/cyclotomic.hpp"
#include "cokahler/errors.hpp"
#include "cokahler/linalg.hpp"
#include "cokahler/matrix.hpp"

namespace cokahler {

/// Multiplicative order of an integer matrix: the least m with A^m = I,
/// or infinite.
struct OrderResult {
  bool finite = false;
  std::uint64_t value = 0;  // meaningful only when finite

  static OrderResult infinite() { return OrderResult{false, 0}; }
  static OrderResult of(std::uint64_t m) { return OrderResult{true, m}; }

  friend bool operator==(const OrderResult& a, const OrderResult& b) {
    return a.finite == b.finite && (!a.finite || a.value == b.value);
  }
};

namespace detail {

inline std::vector<std::uint64_t> divisors_ascending(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Decision procedure: a finite-order matrix has an all-cyclotomic
/// characteristic polynomial, so strip cyclotomic factors first; a
/// non-cyclotomic factor settles infinite order immediately. Otherwise the
/// order divides the lcm of the cyclotomic indices found, and minimality is
/// established by explicit powering (which also rejects non-semisimple
/// matrices such as unipotent blocks). Terminates on every input with no
/// user-supplied cap.
inline OrderResult matrix_order(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("matrix_order of a non-square matrix");
  if (!a.is_integral()) throw IntegralityError("matrix_order requires integer entries");
  const std::vector<Rat> cp = charpoly(a);
  const Rat det = charpoly_determinant(cp);
  if (det != 1 && det != -1)
    throw NotUnimodularError("matrix_order requires |det| = 1, got det = " + det.str());

  IntPoly p;
  p.reserve(cp.size());
  for (const Rat& c : cp) {
    if (!is_integer(c))
      throw InternalConsistencyError("characteristic polynomial of an integer matrix "
                                     "came out non-integral");
    p.push_back(numerator(c));
  }
  const CyclotomicProfile prof = cyclotomic_profile(p);
  if (!prof.all_cyclotomic()) return OrderResult::infinite();

  Int lcm_bound = 1;
  for (std::int64_t n : prof.indices) lcm_bound = lcm(lcm_bound, Int(n));
  const std::uint64_t bound = lcm_bound.convert_to<std::uint64_t>();

  const Matrix id = Matrix::identity(a.rows());
  if (a.pow(bound) != id) return OrderResult::infinite();
  for (std::uint64_t d : detail::divisors_ascending(bound))
    if (a.pow(d) == id) return OrderResult::of(d);
  throw InternalConsistencyError("order divisor scan found no witness below the bound");
}

}  // namespace cokahler
