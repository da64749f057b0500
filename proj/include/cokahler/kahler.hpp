#pragma once

#include <cstddef>
#include <utility>

#include "cokahler/errors.hpp"
#include "cokahler/exterior.hpp"
#include "cokahler/linalg.hpp"
#include "cokahler/matrix.hpp"
#include "cokahler/multi_index.hpp"

namespace cokahler {

/// A 2-form on Q^{2n}, kept in both pictures: as a degree-2 exterior element
/// and as its skew-symmetric 2n x 2n coefficient matrix. Nondegeneracy is a
/// property checked where an operation needs it, so degenerate candidates can
/// be constructed and then rejected with a proper error.
class KahlerForm {
 public:
  KahlerForm(int n, Matrix omega) : n_(n), omega_(std::move(omega)), element_(2) {
    if (n_ < 1) throw ValidationError("KahlerForm needs n >= 1");
    const std::size_t d = static_cast<std::size_t>(2 * n_);
    if (omega_.rows() != d || omega_.cols() != d)
      throw ValidationError("omega matrix must be 2n x 2n");
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (omega_(i, j) != -omega_(j, i))
          throw ValidationError("omega matrix must be skew-symmetric");
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j)
        element_.add_term(MultiIndex({static_cast<int>(i) + 1, static_cast<int>(j) + 1}),
                          omega_(i, j));
  }

  static KahlerForm from_element(int n, const ExteriorElement& element) {
    if (element.degree() != 2) throw DegreeError("a Kahler form has degree 2");
    const std::size_t d = static_cast<std::size_t>(2 * n);
    Matrix m(d, d);
    for (const auto& [mi, c] : element.terms()) {
      if (mi.max_index() > 2 * n) throw DegreeError("2-form index exceeds dimension 2n");
      const std::size_t i = static_cast<std::size_t>(mi.indices()[0] - 1);
      const std::size_t j = static_cast<std::size_t>(mi.indices()[1] - 1);
      m(i, j) = c;
      m(j, i) = -c;
    }
    return KahlerForm(n, std::move(m));
  }

  int n() const { return n_; }
  int dim() const { return 2 * n_; }
  const Matrix& matrix() const { return omega_; }
  const ExteriorElement& element() const { return element_; }

  bool is_nondegenerate() const { return !determinant(omega_).is_zero(); }

  friend bool operator==(const KahlerForm& a, const KahlerForm& b) {
    return a.n_ == b.n_ && a.omega_ == b.omega_;
  }

 private:
  int n_;
  Matrix omega_;
  ExteriorElement element_;
};

/// The block form e_1 ^ e_2 + e_3 ^ e_4 + ... + e_{2n-1} ^ e_{2n}: one block
/// per complex coordinate of the torus.
inline KahlerForm standard_omega(int n) {
  if (n < 1) throw ValidationError("standard_omega needs n >= 1");
  Matrix m(static_cast<std::size_t>(2 * n), static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    m(static_cast<std::size_t>(2 * i), static_cast<std::size_t>(2 * i + 1)) = 1;
    m(static_cast<std::size_t>(2 * i + 1), static_cast<std::size_t>(2 * i)) = -1;
  }
  return KahlerForm(n, std::move(m));
}

}  // namespace cokahler
