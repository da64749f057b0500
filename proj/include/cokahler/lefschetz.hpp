#pragma once

#include <cstddef>
#include <vector>

#include "cokahler/errors.hpp"
#include "cokahler/exterior.hpp"
#include "cokahler/kahler.hpp"
#include "cokahler/linalg.hpp"
#include "cokahler/matrix.hpp"
#include "cokahler/multi_index.hpp"

namespace cokahler {

/// Matrix of x -> omega ^ x from degree k to degree k+2, lexicographic bases.
inline Matrix lefschetz_operator(const KahlerForm& omega, int k) {
  const int dim = omega.dim();
  if (k < 0 || k + 2 > dim)
    throw DegreeError("lefschetz_operator degree " + std::to_string(k) +
                      " overflows dimension " + std::to_string(dim));
  const std::vector<MultiIndex> dom = basis(k, dim);
  const std::size_t target_size = static_cast<std::size_t>(to_int64(binomial(dim, k + 2)));
  Matrix out(target_size, dom.size());
  for (std::size_t j = 0; j < dom.size(); ++j) {
    const ExteriorElement image = wedge(omega.element(), ExteriorElement::basis_monomial(dom[j]));
    for (const auto& [mi, c] : image.terms()) out(basis_rank(mi, dim), j) = c;
  }
  return out;
}

/// Per-degree outcome of the Hard Lefschetz verification: for each j <= n the
/// composite L^{n-j} from degree j to degree 2n-j must be an isomorphism.
struct HardLefschetzReport {
  struct Degree {
    int j = 0;
    std::size_t dimension = 0;
    std::size_t rank = 0;
    bool isomorphism = false;
  };
  bool ok = false;
  std::vector<Degree> degrees;
};

inline HardLefschetzReport hard_lefschetz_check(const KahlerForm& omega, int n) {
  if (omega.n() != n) throw DimensionError("Kahler form dimension does not match n");
  if (!omega.is_nondegenerate())
    throw DegeneracyError("hard_lefschetz_check needs a nondegenerate form");
  HardLefschetzReport report;
  report.ok = true;
  for (int j = 0; j <= n; ++j) {
    Matrix composite = Matrix::identity(static_cast<std::size_t>(to_int64(binomial(2 * n, j))));
    for (int d = j; d + 2 <= 2 * n - j; d += 2) composite = lefschetz_operator(omega, d) * composite;
    HardLefschetzReport::Degree entry;
    entry.j = j;
    entry.dimension = composite.cols();
    entry.rank = rank(composite);
    entry.isomorphism = composite.rows() == composite.cols() && entry.rank == entry.dimension;
    report.ok = report.ok && entry.isomorphism;
    report.degrees.push_back(entry);
  }
  return report;
}

}  // namespace cokahler
