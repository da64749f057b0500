#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cokahler/errors.hpp"
#include "cokahler/exterior.hpp"
#include "cokahler/induced.hpp"
#include "cokahler/kahler.hpp"
#include "cokahler/lefschetz.hpp"
#include "cokahler/linalg.hpp"
#include "cokahler/matrix.hpp"
#include "cokahler/order.hpp"

namespace cokahler {

namespace detail {

inline std::uint64_t require_finite_order(const Matrix& a, const char* who) {
  const OrderResult ord = matrix_order(a);
  if (!ord.finite) throw InfiniteOrderError(std::string(who) + " requires a finite-order matrix");
  return ord.value;
}

inline Matrix minus_identity(Matrix m) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= 1;
  return m;
}

}  // namespace detail

/// Fixed subspace of the degree-k cohomology action: dimension and a rational
/// basis, given as coefficient vectors in the lexicographic monomial basis.
struct FixedSubspace {
  std::size_t dimension = 0;
  std::vector<std::vector<Rat>> basis_vectors;
};

/// Dimension (and basis) of ker(cohomology_action(A, k) - I) over Q.
/// Fixed subspaces are computed as kernels; the projector and the Molien
/// average below are kept purely as cross-check oracles.
inline FixedSubspace invariant_betti(const Matrix& a, int k) {
  detail::require_finite_order(a, "invariant_betti");
  const Matrix t = cohomology_action(a, k);
  FixedSubspace out;
  out.basis_vectors = rational_kernel(detail::minus_identity(t));
  out.dimension = out.basis_vectors.size();
  return out;
}

/// P = (1/m) * sum of the action's powers; idempotent with the fixed subspace
/// as column space.
inline Matrix averaging_projector(const Matrix& a, int k) {
  const std::uint64_t m = detail::require_finite_order(a, "averaging_projector");
  const Matrix t = cohomology_action(a, k);
  Matrix p = power_scan(t, m).sum;
  p *= Rat(Int(1), Int(m));
  return p;
}

/// Molien trace average (1/m) * sum_j trace(induced_map(A, k)^j). Always an
/// exact integer equal to the fixed-subspace dimension; a fractional average
/// can only come from a bug.
inline std::size_t molien_invariant_dim(const Matrix& a, int k) {
  const std::uint64_t m = detail::require_finite_order(a, "molien_invariant_dim");
  const Matrix t = induced_map(a, k);
  Rat total = 0;
  for (const Rat& tr : power_scan(t, m).traces) total += tr;
  total /= Rat(Int(m));
  if (!is_integer(total) || total < 0)
    throw InternalConsistencyError("Molien average came out non-integral: " + total.str());
  return static_cast<std::size_t>(to_int64(numerator(total)));
}

/// Average of omega over the group generated by the cohomology action. For a
/// genuine Hermitian isometry the average is an invariant nondegenerate class;
/// a degenerate average means the pair (A, omega) is inconsistent with the
/// model, which is an input error, never a silent fallback.
inline KahlerForm invariant_kahler_class(const Matrix& a, const KahlerForm& omega) {
  const std::uint64_t m = detail::require_finite_order(a, "invariant_kahler_class");
  if (static_cast<std::size_t>(omega.dim()) != a.rows())
    throw DimensionError("omega dimension does not match the matrix");
  const Matrix t = cohomology_action(a, 2);
  const int dim = omega.dim();
  const std::vector<Rat> v = omega.element().coefficient_vector(dim);

  std::vector<Rat> averaged(v.size(), Rat(0));
  std::vector<Rat> cur = v;
  const bool already_invariant = [&] {
    std::vector<Rat> image(v.size(), Rat(0));
    for (std::size_t i = 0; i < v.size(); ++i) {
      Rat acc = 0;
      for (std::size_t j = 0; j < v.size(); ++j)
        if (!v[j].is_zero()) acc += t(i, j) * v[j];
      image[i] = std::move(acc);
    }
    return image == v;
  }();
  for (std::uint64_t step = 0; step < m; ++step) {
    for (std::size_t i = 0; i < v.size(); ++i) averaged[i] += cur[i];
    if (step + 1 == m) break;
    std::vector<Rat> next(v.size(), Rat(0));
    for (std::size_t i = 0; i < v.size(); ++i) {
      Rat acc = 0;
      for (std::size_t j = 0; j < v.size(); ++j)
        if (!cur[j].is_zero()) acc += t(i, j) * cur[j];
      next[i] = std::move(acc);
    }
    cur = std::move(next);
  }
  const Rat scale(Int(1), Int(m));
  for (Rat& q : averaged) q *= scale;

  const KahlerForm result = KahlerForm::from_element(
      omega.n(), ExteriorElement::from_coefficient_vector(2, dim, averaged));
  if (already_invariant && !(result == omega))
    throw InternalConsistencyError("averaging moved an already-invariant form");
  if (!result.is_nondegenerate())
    throw NoInvariantKahlerError(
        "the averaged form is degenerate: the matrix cannot be realized as a Hermitian "
        "isometry compatible with the given omega; supply a different omega");
  return result;
}

/// Per-degree record of the injectivity of wedging with the invariant class
/// on fixed subspaces; implies the monotone chain of invariant dimensions.
struct InjectivityReport {
  struct Degree {
    int s = 0;
    std::size_t lower_dim = 0;  // fixed subspace in degree s-2
    std::size_t upper_dim = 0;  // fixed subspace in degree s
    bool injective = false;
  };
  bool ok = false;
  std::vector<Degree> degrees;
};

/// Checks that x -> omega_bar ^ x is injective from the degree-(s-2) fixed
/// subspace into the degree-s fixed subspace for every s where the Lefschetz
/// structure guarantees it (2 <= s <= n+1; s = 2 at n = 1 is the first
/// nontrivial instance).
inline InjectivityReport omega_injectivity_check(const Matrix& a, const KahlerForm& omega_bar,
                                                 int n) {
  detail::require_finite_order(a, "omega_injectivity_check");
  if (omega_bar.n() != n) throw DimensionError("omega dimension does not match n");
  if (!omega_bar.is_nondegenerate())
    throw DegeneracyError("omega_injectivity_check needs a nondegenerate form");
  const int dim = 2 * n;
  const Matrix t2 = cohomology_action(a, 2);
  const std::vector<Rat> v = omega_bar.element().coefficient_vector(dim);
  std::vector<Rat> image(v.size(), Rat(0));
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rat acc = 0;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) acc += t2(i, j) * v[j];
    image[i] = std::move(acc);
  }
  if (image != v)
    throw NotInvariantError("omega_bar is not invariant under the cohomology action");

  InjectivityReport report;
  report.ok = true;
  for (int s = 2; s <= n + 1; ++s) {
    const FixedSubspace lower = invariant_betti(a, s - 2);
    const FixedSubspace upper = invariant_betti(a, s);
    InjectivityReport::Degree entry;
    entry.s = s;
    entry.lower_dim = lower.dimension;
    entry.upper_dim = upper.dimension;
    if (lower.dimension == 0) {
      entry.injective = true;
    } else {
      const Matrix l = lefschetz_operator(omega_bar, s - 2);
      Matrix fixed_basis(l.cols(), lower.dimension);
      for (std::size_t col = 0; col < lower.dimension; ++col)
        for (std::size_t row = 0; row < l.cols(); ++row)
          fixed_basis(row, col) = lower.basis_vectors[col][row];
      entry.injective = rank(l * fixed_basis) == lower.dimension;
    }
    report.ok = report.ok && entry.injective;
    report.degrees.push_back(entry);
  }
  return report;
}

/// Fixed-subspace dimensions and bases in every degree 0..2n.
struct InvariantSummary {
  std::uint64_t group_order = 1;
  std::vector<FixedSubspace> by_degree;

  std::vector<std::size_t> dims() const {
    std::vector<std::size_t> d;
    d.reserve(by_degree.size());
    for (const FixedSubspace& f : by_degree) d.push_back(f.dimension);
    return d;
  }
};

inline InvariantSummary invariant_summary(const Matrix& a) {
  InvariantSummary summary;
  summary.group_order = detail::require_finite_order(a, "invariant_summary");
  const int dim = static_cast<int>(a.rows());
  summary.by_degree.reserve(static_cast<std::size_t>(dim) + 1);
  for (int k = 0; k <= dim; ++k) {
    const Matrix t = cohomology_action(a, k);
    FixedSubspace f;
    f.basis_vectors = rational_kernel(detail::minus_identity(t));
    f.dimension = f.basis_vectors.size();
    summary.by_degree.push_back(std::move(f));
  }
  return summary;
}

}  // namespace cokahler
