#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cokahler/errors.hpp"
#include "cokahler/multi_index.hpp"
#include "cokahler/numeric.hpp"

namespace cokahler {

/// Homogeneous element of the exterior algebra: a sparse rational combination
/// of basis monomials of one degree. Zero coefficients are never stored.
class ExteriorElement {
 public:
  explicit ExteriorElement(int degree) : degree_(degree) {
    if (degree < 0) throw DegreeError("exterior element of negative degree");
  }

  static ExteriorElement unit() {
    ExteriorElement e(0);
    e.add_term(MultiIndex{}, 1);
    return e;
  }

  static ExteriorElement basis_monomial(const MultiIndex& mi) {
    ExteriorElement e(mi.degree());
    e.add_term(mi, 1);
    return e;
  }

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<MultiIndex, Rat>& terms() const { return terms_; }

  Rat coefficient(const MultiIndex& mi) const {
    auto it = terms_.find(mi);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  void add_term(const MultiIndex& mi, const Rat& c) {
    if (mi.degree() != degree_)
      throw DegreeError("term of degree " + std::to_string(mi.degree()) +
                        " added to element of degree " + std::to_string(degree_));
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(mi, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  ExteriorElement& operator+=(const ExteriorElement& o) {
    if (o.degree_ != degree_) throw DegreeError("adding exterior elements of unequal degree");
    for (const auto& [mi, c] : o.terms_) add_term(mi, c);
    return *this;
  }
  ExteriorElement& operator-=(const ExteriorElement& o) { return *this += -o; }
  ExteriorElement& operator*=(const Rat& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [mi, c] : terms_) c *= s;
    return *this;
  }

  friend ExteriorElement operator+(ExteriorElement a, const ExteriorElement& b) { return a += b; }
  friend ExteriorElement operator-(ExteriorElement a, const ExteriorElement& b) { return a -= b; }
  friend ExteriorElement operator*(ExteriorElement a, const Rat& s) { return a *= s; }
  friend ExteriorElement operator*(const Rat& s, ExteriorElement a) { return a *= s; }
  friend ExteriorElement operator-(const ExteriorElement& a) {
    ExteriorElement r(a.degree_);
    for (const auto& [mi, c] : a.terms_) r.terms_.emplace(mi, -c);
    return r;
  }

  friend bool operator==(const ExteriorElement& a, const ExteriorElement& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const ExteriorElement& a, const ExteriorElement& b) { return !(a == b); }

  /// Coefficients in the lexicographic basis of degree-k monomials on
  /// {1..dim}; the bridge between sparse elements and matrices.
  std::vector<Rat> coefficient_vector(int dim) const {
    if (degree_ > dim) return {};
    std::vector<Rat> v(static_cast<std::size_t>(to_int64(binomial(dim, degree_))), Rat(0));
    for (const auto& [mi, c] : terms_) v[basis_rank(mi, dim)] = c;
    return v;
  }

  static ExteriorElement from_coefficient_vector(int k, int dim, const std::vector<Rat>& v) {
    const std::vector<MultiIndex> b = basis(k, dim);
    if (v.size() != b.size())
      throw DimensionError("coefficient vector length does not match basis size");
    ExteriorElement e(k);
    for (std::size_t i = 0; i < b.size(); ++i) e.add_term(b[i], v[i]);
    return e;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [mi, c] : terms_) {
      const bool negative = c < 0;
      const Rat mag = negative ? Rat(-c) : c;
      if (s.empty()) {
        if (negative) s += "-";
      } else {
        s += negative ? " - " : " + ";
      }
      if (mag != 1 || mi.degree() == 0) {
        s += mag.str();
        if (mi.degree() > 0) s += " ";
      }
      if (mi.degree() > 0) s += mi.to_string();
    }
    return s;
  }

 private:
  int degree_;
  std::map<MultiIndex, Rat> terms_;
};

namespace detail {

/// Merge two strictly increasing index tuples; returns the permutation sign,
/// or 0 when an index repeats.
inline int merge_indices(const std::vector<int>& a, const std::vector<int>& b,
                         std::vector<int>& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  long inversions = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return 0;
    if (a[i] < b[j]) {
      out.push_back(a[i++]);
    } else {
      // b[j] jumps over the remaining entries of a
      inversions += static_cast<long>(a.size() - i);
      out.push_back(b[j++]);
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace detail

/// Graded product. Degrees add; terms with a repeated index vanish, so the
/// product beyond the ambient top degree is simply the zero element.
inline ExteriorElement wedge(const ExteriorElement& x, const ExteriorElement& y) {
  ExteriorElement out(x.degree() + y.degree());
  std::vector<int> merged;
  for (const auto& [mi, c] : x.terms())
    for (const auto& [mj, d] : y.terms()) {
      const int sign = detail::merge_indices(mi.indices(), mj.indices(), merged);
      if (sign == 0) continue;
      Rat prod = c * d;
      if (sign < 0) prod = -prod;
      out.add_term(MultiIndex(merged), prod);
    }
  return out;
}

inline ExteriorElement wedge_power(const ExteriorElement& x, int p) {
  if (p < 0) throw DegreeError("negative wedge power");
  ExteriorElement out = ExteriorElement::unit();
  for (int i = 0; i < p; ++i) out = wedge(out, x);
  return out;
}

}  // namespace cokahler
