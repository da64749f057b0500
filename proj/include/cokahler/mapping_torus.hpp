#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cokahler/errors.hpp"
#include "cokahler/exterior.hpp"
#include "cokahler/group_action.hpp"
#include "cokahler/induced.hpp"
#include "cokahler/kahler.hpp"
#include "cokahler/linalg.hpp"
#include "cokahler/matrix.hpp"
#include "cokahler/order.hpp"

namespace cokahler {

/// Betti numbers b_0 .. b_{2n+1} of the mapping torus of a 2n-torus.
class BettiVector {
 public:
  BettiVector(int n, std::vector<std::int64_t> values) : n_(n), b_(std::move(values)) {
    if (n_ < 1) throw ValidationError("BettiVector needs n >= 1");
    if (b_.size() != static_cast<std::size_t>(2 * n_ + 2))
      throw ValidationError("BettiVector needs 2n+2 entries");
    for (std::int64_t v : b_)
      if (v < 0) throw ValidationError("Betti numbers are nonnegative");
  }

  int n() const { return n_; }
  std::size_t size() const { return b_.size(); }
  std::int64_t operator[](std::size_t s) const { return b_[s]; }
  const std::vector<std::int64_t>& values() const { return b_; }

  std::int64_t euler_characteristic() const {
    std::int64_t chi = 0;
    for (std::size_t s = 0; s < b_.size(); ++s) chi += (s % 2 == 0) ? b_[s] : -b_[s];
    return chi;
  }

  friend bool operator==(const BettiVector& a, const BettiVector& b) {
    return a.n_ == b.n_ && a.b_ == b.b_;
  }
  friend bool operator!=(const BettiVector& a, const BettiVector& b) { return !(a == b); }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < b_.size(); ++i) {
      if (i) s += " ";
      s += std::to_string(b_[i]);
    }
    return s;
  }

 private:
  int n_;
  std::vector<std::int64_t> b_;
};

/// b_s(M) = b'_s + b'_{s-1} from the invariant cohomology of the fiber, with
/// b'_{-1} = b'_{2n+1} = 0. The class omega_bar enters through validation
/// only (the dimensions depend on A alone); passing it keeps the certified
/// invariant class attached to the computation that its existence powers.
inline BettiVector betti_numbers(const Matrix& a, const KahlerForm& omega_bar) {
  const std::uint64_t m = detail::require_finite_order(a, "betti_numbers");
  (void)m;
  if (static_cast<std::size_t>(omega_bar.dim()) != a.rows())
    throw DimensionError("omega_bar dimension does not match the matrix");
  if (!omega_bar.is_nondegenerate())
    throw DegeneracyError("betti_numbers needs a nondegenerate invariant class");
  {
    const Matrix t2 = cohomology_action(a, 2);
    const int dim = omega_bar.dim();
    const std::vector<Rat> v = omega_bar.element().coefficient_vector(dim);
    std::vector<Rat> image(v.size(), Rat(0));
    for (std::size_t i = 0; i < v.size(); ++i) {
      Rat acc = 0;
      for (std::size_t j = 0; j < v.size(); ++j)
        if (!v[j].is_zero()) acc += t2(i, j) * v[j];
      image[i] = std::move(acc);
    }
    if (image != v) throw NotInvariantError("betti_numbers needs an invariant omega_bar");
  }

  const InvariantSummary summary = invariant_summary(a);
  const int n = static_cast<int>(a.rows()) / 2;
  std::vector<std::int64_t> b(static_cast<std::size_t>(2 * n + 2), 0);
  for (int s = 0; s <= 2 * n + 1; ++s) {
    std::int64_t v = 0;
    if (s <= 2 * n) v += static_cast<std::int64_t>(summary.by_degree[static_cast<std::size_t>(s)].dimension);
    if (s >= 1) v += static_cast<std::int64_t>(summary.by_degree[static_cast<std::size_t>(s - 1)].dimension);
    b[static_cast<std::size_t>(s)] = v;
  }
  return BettiVector(n, std::move(b));
}

/// Independent oracle from the long exact sequence of the fibration over the
/// circle: b_s(M) = dim ker(T_s - I) + dim coker(T_{s-1} - I) over Q, where
/// T_k is the degree-k cohomology action. Valid for any unimodular monodromy,
/// finite order or not, so it also covers co-symplectic mapping tori that the
/// invariant-cohomology formula must refuse.
inline BettiVector wang_betti_oracle(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("wang_betti_oracle needs a square matrix");
  if (!a.is_integral()) throw IntegralityError("wang_betti_oracle requires integer entries");
  {
    const Rat det = charpoly_determinant(charpoly(a));
    if (det != 1 && det != -1)
      throw NotUnimodularError("wang_betti_oracle requires |det| = 1");
  }
  const int dim = static_cast<int>(a.rows());
  const int n = dim / 2;

  // kernel and cokernel dimensions of (T_k - I) for k = 0..2n
  std::vector<std::size_t> ker(static_cast<std::size_t>(dim) + 1, 0);
  std::vector<std::size_t> coker(static_cast<std::size_t>(dim) + 1, 0);
  for (int k = 0; k <= dim; ++k) {
    const Matrix t = detail::minus_identity(cohomology_action(a, k));
    const std::size_t r = rank(t);
    ker[static_cast<std::size_t>(k)] = t.cols() - r;
    coker[static_cast<std::size_t>(k)] = t.rows() - r;
  }

  std::vector<std::int64_t> b(static_cast<std::size_t>(2 * n + 2), 0);
  for (int s = 0; s <= 2 * n + 1; ++s) {
    std::int64_t v = 0;
    if (s <= dim) v += static_cast<std::int64_t>(ker[static_cast<std::size_t>(s)]);
    if (s >= 1 && s - 1 <= dim) v += static_cast<std::int64_t>(coker[static_cast<std::size_t>(s - 1)]);
    b[static_cast<std::size_t>(s)] = v;
  }
  return BettiVector(n, std::move(b));
}

/// b_1 <= b_2 <= ... <= b_n together with the middle equality b_n = b_{n+1}.
inline bool monotonicity_check(const BettiVector& b, int n) {
  for (int s = 1; s < n; ++s)
    if (b[static_cast<std::size_t>(s)] > b[static_cast<std::size_t>(s + 1)]) return false;
  return b[static_cast<std::size_t>(n)] == b[static_cast<std::size_t>(n + 1)];
}

inline bool b1_parity_check(const BettiVector& b) { return b[1] % 2 == 1; }

inline bool poincare_duality_check(const BettiVector& b) {
  const std::size_t top = b.size() - 1;
  for (std::size_t s = 0; s <= top; ++s)
    if (b[s] != b[top - s]) return false;
  return true;
}

/// Matrix of the pairing (alpha, beta) -> coefficient of the top monomial in
/// alpha ^ beta ^ omega_bar^{n-1} on the degree-1 basis. Skew, and
/// nondegenerate whenever omega_bar is.
inline Matrix symplectic_pairing(const KahlerForm& omega_bar, int n) {
  if (omega_bar.n() != n) throw DimensionError("omega dimension does not match n");
  if (!omega_bar.is_nondegenerate())
    throw DegeneracyError("symplectic_pairing needs a nondegenerate form");
  const int dim = 2 * n;
  const ExteriorElement power = wedge_power(omega_bar.element(), n - 1);
  std::vector<int> all(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) all[static_cast<std::size_t>(i)] = i + 1;
  const MultiIndex top(all);

  Matrix p(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
  for (int i = 1; i <= dim; ++i)
    for (int j = i + 1; j <= dim; ++j) {
      const ExteriorElement pair =
          wedge(ExteriorElement::basis_monomial(MultiIndex({i, j})), power);
      const Rat c = pair.coefficient(top);
      p(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = c;
      p(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(i - 1)) = -c;
    }
  return p;
}

/// Result of the symplectic eigenvalue verification on degree-1 cohomology.
struct EigenvalueParityResult {
  bool pairing_preserved = false;
  std::size_t multiplicity = 0;  // of eigenvalue +1; geometric = algebraic here
  bool multiplicity_even = false;
};

/// Verifies that the degree-1 action preserves the pairing and that the
/// eigenvalue +1 occurs with even multiplicity. A finite-order action is
/// semisimple over Q, so the kernel dimension of (action - I) is the
/// multiplicity itself.
inline EigenvalueParityResult eigenvalue_one_parity_check(const Matrix& a, const Matrix& pairing) {
  detail::require_finite_order(a, "eigenvalue_one_parity_check");
  if (pairing.rows() != a.rows() || pairing.cols() != a.cols())
    throw DimensionError("pairing matrix shape does not match the matrix");
  const Matrix action = a.transpose();
  if (action.transpose() * pairing * action != pairing)
    throw NotSymplecticError(
        "the degree-1 action does not preserve the pairing; the input matrix is "
        "incompatible with the supplied omega_bar");
  EigenvalueParityResult result;
  result.pairing_preserved = true;
  result.multiplicity = kernel_dimension(detail::minus_identity(action));
  result.multiplicity_even = result.multiplicity % 2 == 0;
  return result;
}

}  // namespace cokahler
