#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cokahler/errors.hpp"
#include "cokahler/numeric.hpp"

namespace cokahler {

/// Integer polynomial, coefficients ascending. Normalized: no leading zeros
/// except the zero polynomial {}.
using IntPoly = std::vector<Int>;

namespace poly {

inline IntPoly trimmed(IntPoly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

inline int degree(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

inline IntPoly x_power_minus_one(std::int64_t n) {
  IntPoly p(static_cast<std::size_t>(n) + 1, Int(0));
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  return p;
}

/// Quotient of p by a monic divisor d; the remainder must vanish.
inline IntPoly divide_exact(const IntPoly& p, const IntPoly& d) {
  if (d.empty() || d.back() != 1)
    throw InternalConsistencyError("polynomial division needs a monic divisor");
  IntPoly rem = p;
  if (degree(rem) < degree(d))
    throw InternalConsistencyError("polynomial division with divisor of larger degree");
  IntPoly q(rem.size() - d.size() + 1, Int(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    const Int coef = rem[k + d.size() - 1];
    if (coef.is_zero()) continue;
    q[k] = coef;
    for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= coef * d[j];
  }
  for (const Int& c : rem)
    if (!c.is_zero()) throw InternalConsistencyError("polynomial division was not exact");
  return trimmed(std::move(q));
}

/// Whether a monic divisor divides p; on success also returns the quotient.
inline bool try_divide(const IntPoly& p, const IntPoly& d, IntPoly* quotient) {
  if (degree(p) < degree(d)) return false;
  IntPoly rem = p;
  IntPoly q(rem.size() - d.size() + 1, Int(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    const Int coef = rem[k + d.size() - 1];
    if (coef.is_zero()) continue;
    q[k] = coef;
    for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= coef * d[j];
  }
  for (const Int& c : rem)
    if (!c.is_zero()) return false;
  if (quotient) *quotient = trimmed(std::move(q));
  return true;
}

}  // namespace poly

inline std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace detail {

inline const IntPoly& cyclotomic_memo(std::int64_t n, std::map<std::int64_t, IntPoly>& memo) {
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  IntPoly p = poly::x_power_minus_one(n);
  for (std::int64_t d = 1; d < n; ++d)
    if (n % d == 0) p = poly::divide_exact(p, cyclotomic_memo(d, memo));
  return memo.emplace(n, std::move(p)).first->second;
}

}  // namespace detail

/// The n-th cyclotomic polynomial, computed by exact division of x^n - 1 by
/// all lower cyclotomic factors. No shared state, safe for concurrent callers.
inline IntPoly cyclotomic_polynomial(std::int64_t n) {
  if (n < 1) throw DegreeError("cyclotomic index must be positive");
  std::map<std::int64_t, IntPoly> memo;
  return detail::cyclotomic_memo(n, memo);
}

/// All N with euler_phi(N) <= d. Finite: phi(N) >= sqrt(N/2).
inline std::vector<std::int64_t> cyclotomic_candidates(int d) {
  std::vector<std::int64_t> out;
  const std::int64_t bound = 2 * static_cast<std::int64_t>(d) * d + 1;
  for (std::int64_t n = 1; n <= bound; ++n)
    if (euler_phi(n) <= d) out.push_back(n);
  return out;
}

/// Strips every cyclotomic factor from p (with multiplicity) and reports the
/// indices found plus the residual non-cyclotomic part.
struct CyclotomicProfile {
  std::vector<std::int64_t> indices;  // one entry per factor, repeats allowed
  IntPoly residual;                   // constant iff p is a product of cyclotomics
  bool all_cyclotomic() const { return poly::degree(residual) <= 0; }
};

inline CyclotomicProfile cyclotomic_profile(const IntPoly& p) {
  CyclotomicProfile prof;
  prof.residual = poly::trimmed(p);
  std::map<std::int64_t, IntPoly> memo;
  for (std::int64_t n : cyclotomic_candidates(poly::degree(prof.residual))) {
    const IntPoly& phi_n = detail::cyclotomic_memo(n, memo);
    IntPoly quotient;
    while (poly::degree(prof.residual) >= poly::degree(phi_n) &&
           poly::try_divide(prof.residual, phi_n, &quotient)) {
      prof.indices.push_back(n);
      prof.residual = quotient;
    }
  }
  return prof;
}

}  // namespace cokahler
