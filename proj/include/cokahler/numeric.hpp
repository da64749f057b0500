#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace cokahler {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

/// Numerator of an integer-valued rational. Callers must check is_integer first.
inline Int integer_part(const Rat& q) { return numerator(q); }

inline Int abs(const Int& x) { return x < 0 ? Int(-x) : x; }

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int v = 1;
  for (int i = 0; i < k; ++i) {
    v *= n - i;
    v /= i + 1;  // exact: v is always a binomial coefficient
  }
  return v;
}

inline std::int64_t to_int64(const Int& x) { return x.convert_to<std::int64_t>(); }

}  // namespace cokahler
