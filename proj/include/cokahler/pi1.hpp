#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cokahler/errors.hpp"
#include "cokahler/linalg.hpp"
#include "cokahler/mapping_torus.hpp"
#include "cokahler/matrix.hpp"
#include "cokahler/order.hpp"
#include "cokahler/smith.hpp"

namespace cokahler {

namespace detail {

inline void require_unimodular(const Matrix& a, const char* who) {
  if (!a.is_square()) throw DimensionError(std::string(who) + " needs a square matrix");
  if (!a.is_integral()) throw IntegralityError(std::string(who) + " requires integer entries");
  const Rat det = determinant(a);
  if (det != 1 && det != -1)
    throw NotUnimodularError(std::string(who) + " requires |det| = 1, got det = " + det.str());
}

}  // namespace detail

/// Presentation of the semidirect product Z^{2n} x| Z: lattice generators
/// v1..v_{2n} commute, and conjugation by t acts by the matrix A (column i of
/// A gives t v_i t^-1). Emitted as data; everything the pipeline computes
/// from it factors through A - I and the Smith form.
struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<std::string> relations;
  Matrix conjugation;

  std::size_t relation_count() const { return relations.size(); }

  friend bool operator==(const GroupPresentation& a, const GroupPresentation& b) {
    return a.generators == b.generators && a.relations == b.relations &&
           a.conjugation == b.conjugation;
  }
};

namespace detail {

inline std::string power_word(const std::string& gen, const Int& e) {
  if (e == 1) return gen;
  return gen + "^" + e.str();
}

}  // namespace detail

inline GroupPresentation presentation(const Matrix& a) {
  detail::require_unimodular(a, "presentation");
  const std::size_t dim = a.rows();
  GroupPresentation pres;
  pres.conjugation = a;
  pres.generators.push_back("t");
  for (std::size_t i = 1; i <= dim; ++i) pres.generators.push_back("v" + std::to_string(i));
  for (std::size_t i = 1; i <= dim; ++i)
    for (std::size_t j = i + 1; j <= dim; ++j)
      pres.relations.push_back("[v" + std::to_string(i) + ",v" + std::to_string(j) + "]");
  for (std::size_t i = 0; i < dim; ++i) {
    std::string rhs;
    for (std::size_t j = 0; j < dim; ++j) {
      const Int e = numerator(a(j, i));
      if (e.is_zero()) continue;
      if (!rhs.empty()) rhs += " ";
      rhs += detail::power_word("v" + std::to_string(j + 1), e);
    }
    if (rhs.empty()) rhs = "1";
    pres.relations.push_back("t v" + std::to_string(i + 1) + " t^-1 = " + rhs);
  }
  return pres;
}

/// H_1(M; Z) = Z (+) coker(A - I): the base circle contributes the free Z,
/// the fiber lattice contributes the cokernel.
struct FirstHomology {
  std::size_t rank = 0;
  std::vector<Int> torsion;

  friend bool operator==(const FirstHomology& a, const FirstHomology& b) {
    return a.rank == b.rank && a.torsion == b.torsion;
  }

  std::string to_string() const {
    std::string s = rank == 1 ? "Z" : "Z^" + std::to_string(rank);
    for (const Int& t : torsion) s += " + Z/" + t.str();
    return s;
  }
};

inline FirstHomology first_homology(const Matrix& a) {
  detail::require_unimodular(a, "first_homology");
  const CokerStructure coker = coker_structure(detail::minus_identity(a));
  FirstHomology h;
  h.rank = 1 + coker.rank;
  h.torsion = coker.torsion;
  return h;
}

/// The finite-index subgroup Z^{2n} x Z of the fundamental group, direct
/// because A^m = I makes t^m central.
struct ProductSubgroup {
  std::uint64_t index = 1;
  std::string subgroup;
  std::string quotient;

  friend bool operator==(const ProductSubgroup& a, const ProductSubgroup& b) {
    return a.index == b.index && a.subgroup == b.subgroup && a.quotient == b.quotient;
  }
};

inline ProductSubgroup product_subgroup(const Matrix& a) {
  const std::uint64_t m = detail::require_finite_order(a, "product_subgroup");
  if (a.pow(m) != Matrix::identity(a.rows()))
    throw InternalConsistencyError("order witness failed: A^m != I");
  ProductSubgroup s;
  s.index = m;
  s.subgroup = "Z^" + std::to_string(a.rows()) + " x Z, generated by v1..v" +
               std::to_string(a.rows()) + " and t^" + std::to_string(m);
  s.quotient = "Z/" + std::to_string(m);
  return s;
}

/// The finite cyclic cover T^{2n} x S^1 -> M and its deck action.
struct CoverData {
  std::uint64_t degree = 1;
  std::string total_space;
  std::string deck_group;
  std::string deck_action;
  std::uint64_t winding = 1;

  friend bool operator==(const CoverData& a, const CoverData& b) {
    return a.degree == b.degree && a.total_space == b.total_space &&
           a.deck_group == b.deck_group && a.deck_action == b.deck_action &&
           a.winding == b.winding;
  }
};

inline CoverData cover_data(const Matrix& a) {
  const std::uint64_t m = detail::require_finite_order(a, "cover_data");
  CoverData c;
  c.degree = m;
  c.total_space = "T^" + std::to_string(a.rows()) + " x S^1";
  c.deck_group = "Z/" + std::to_string(m);
  c.deck_action = "generator acts by A on the torus factor and by rotation by 1/" +
                  std::to_string(m) + " on the circle factor";
  c.winding = m;
  return c;
}

/// The structure group of the bundle over the circle: the cyclic group
/// generated by the monodromy.
struct StructureGroup {
  bool finite = false;
  std::uint64_t order = 0;  // meaningful when finite
  std::string description;

  friend bool operator==(const StructureGroup& a, const StructureGroup& b) {
    return a.finite == b.finite && a.order == b.order && a.description == b.description;
  }
};

inline StructureGroup structure_group(const Matrix& a) {
  detail::require_unimodular(a, "structure_group");
  const OrderResult ord = matrix_order(a);
  StructureGroup g;
  g.finite = ord.finite;
  g.order = ord.finite ? ord.value : 0;
  if (!ord.finite)
    g.description = "infinite cyclic group generated by A";
  else if (ord.value == 1)
    g.description = "trivial group";
  else
    g.description = "cyclic group of order " + std::to_string(ord.value) + " generated by A";
  return g;
}

/// For a linear torus map, isotopy to the identity is detected on first
/// homology, so the bundle is trivial exactly when A = I.
inline bool bundle_triviality(const Matrix& a) {
  detail::require_unimodular(a, "bundle_triviality");
  return a == Matrix::identity(a.rows());
}

enum class CertificateKind { TrivialProduct, NotAProduct, Unknown };

/// Product / non-product certificate. Every NotAProduct cites a rule whose
/// proof actually applies to the input; anything else is Unknown with the
/// obstruction data attached.
struct Certificate {
  CertificateKind kind = CertificateKind::Unknown;
  std::string rule;    // "dim3-aspherical" or "solvable-perfect" for NotAProduct
  std::string detail;
  std::vector<Int> h1_torsion;  // attached obstruction data for Unknown

  friend bool operator==(const Certificate& a, const Certificate& b) {
    return a.kind == b.kind && a.rule == b.rule && a.detail == b.detail &&
           a.h1_torsion == b.h1_torsion;
  }
};

/// Rules, in order of precedence:
///  - A = I: the mapping torus is the trivial product.
///  - |det(A - I)| = 1, A != I ("solvable-perfect"): H_1(M;Z) = Z, so a
///    product factor K would have a solvable fundamental group equal to its
///    own commutator subgroup; impossible. Works in every dimension.
///  - dim M = 3, b_1 = 1, A != I ("dim3-aspherical"): the only closed
///    orientable 3-manifold with b_1 = 1 that splits off a circle is
///    S^1 x S^2, ruled out because the torus mapping torus is aspherical.
/// Cases with torsion in H_1 and dimension > 3 stay Unknown rather than
/// stretching either argument.
inline Certificate non_product_certificate(const Matrix& a, const BettiVector& b) {
  detail::require_finite_order(a, "non_product_certificate");
  Certificate cert;
  if (a == Matrix::identity(a.rows())) {
    cert.kind = CertificateKind::TrivialProduct;
    cert.detail = "A = I: the bundle is the trivial product T^" + std::to_string(a.rows()) +
                  " x S^1";
    return cert;
  }
  const Rat det_ami = determinant(detail::minus_identity(a));
  if (det_ami == 1 || det_ami == -1) {
    const FirstHomology h1 = first_homology(a);
    if (!(h1 == FirstHomology{1, {}}))
      throw InternalConsistencyError("unimodular A - I must give H_1 = Z");
    cert.kind = CertificateKind::NotAProduct;
    cert.rule = "solvable-perfect";
    cert.detail =
        "H_1(M;Z) = Z, so a product factor would be a compact manifold whose solvable "
        "fundamental group equals its own commutator subgroup";
    return cert;
  }
  const int n = b.n();
  if (n == 1 && b[1] == 1) {
    cert.kind = CertificateKind::NotAProduct;
    cert.rule = "dim3-aspherical";
    cert.detail =
        "an orientable 3-manifold with b_1 = 1 splitting off a circle must be S^1 x S^2, "
        "ruled out because the mapping torus is aspherical";
    return cert;
  }
  cert.kind = CertificateKind::Unknown;
  cert.h1_torsion = first_homology(a).torsion;
  cert.detail = "no applicable rule; H_1 torsion attached as obstruction data";
  return cert;
}

}  // namespace cokahler
