#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace cokahler;
using test_support::Rng;

namespace {

const Matrix kCdm{{0, 1}, {-1, 0}};
const Matrix kMp{{0, -1}, {1, 1}};
const Matrix kCat{{2, 1}, {1, 1}};

}  // namespace

TEST_CASE("presentation of the semidirect product") {
  const GroupPresentation p = presentation(kCdm);
  CHECK(p.generators == std::vector<std::string>{"t", "v1", "v2"});
  REQUIRE(p.relation_count() == 3);  // C(2,2) + 2
  CHECK(p.relations[0] == "[v1,v2]");
  CHECK(p.relations[1] == "t v1 t^-1 = v2^-1");
  CHECK(p.relations[2] == "t v2 t^-1 = v1");
  CHECK(p.conjugation == kCdm);

  const GroupPresentation id = presentation(Matrix::identity(2));
  CHECK(id.relations[1] == "t v1 t^-1 = v1");
  CHECK(id.relations[2] == "t v2 t^-1 = v2");

  // Infinite order is fine; unimodularity is required.
  const GroupPresentation cat = presentation(kCat);
  CHECK(cat.relations[1] == "t v1 t^-1 = v1^2 v2");
  CHECK(presentation(Matrix::identity(4)).relation_count() == 6 + 4);
  CHECK_THROWS_AS(presentation(Matrix{{2, 0}, {0, 1}}), NotUnimodularError);
}

TEST_CASE("first homology") {
  CHECK(first_homology(kMp) == FirstHomology{1, {}});
  CHECK(first_homology(kCdm) == FirstHomology{1, {Int(2)}});
  CHECK(first_homology(Matrix::identity(2)) == FirstHomology{3, {}});
  CHECK(first_homology(kCat) == FirstHomology{1, {}});
  CHECK(first_homology(kCdm).to_string() == "Z + Z/2");
}

TEST_CASE("product subgroup") {
  const ProductSubgroup cdm = product_subgroup(kCdm);
  CHECK(cdm.index == 4);
  CHECK(cdm.quotient == "Z/4");
  CHECK(product_subgroup(Matrix::identity(2)).index == 1);
  CHECK(product_subgroup(kMp).index == 6);
  CHECK(product_subgroup(kMp).quotient == "Z/6");
  CHECK_THROWS_AS(product_subgroup(kCat), InfiniteOrderError);
}

TEST_CASE("cover data") {
  const CoverData cdm = cover_data(kCdm);
  CHECK(cdm.degree == 4);
  CHECK(cdm.winding == 4);
  CHECK(cdm.total_space == "T^2 x S^1");
  CHECK(cdm.deck_group == "Z/4");
  CHECK(cover_data(kMp).degree == 6);
  CHECK(cover_data(kMp).winding == 6);
  CHECK(cover_data(Matrix::identity(2)).degree == 1);
  CHECK_THROWS_AS(cover_data(kCat), InfiniteOrderError);
}

TEST_CASE("structure group") {
  const StructureGroup cdm = structure_group(kCdm);
  CHECK(cdm.finite);
  CHECK(cdm.order == 4);
  const StructureGroup id = structure_group(Matrix::identity(2));
  CHECK(id.finite);
  CHECK(id.order == 1);
  CHECK(id.description == "trivial group");
  const StructureGroup cat = structure_group(kCat);
  CHECK_FALSE(cat.finite);
  CHECK(cat.description == "infinite cyclic group generated by A");
}

TEST_CASE("bundle triviality") {
  CHECK(bundle_triviality(Matrix::identity(2)));
  CHECK(bundle_triviality(Matrix::identity(6)));
  CHECK_FALSE(bundle_triviality(kCdm));
  CHECK_FALSE(bundle_triviality(kCat));
}

TEST_CASE("non-product certificates on the pinned examples") {
  const KahlerForm om1 = standard_omega(1);
  const BettiVector b_cdm = betti_numbers(kCdm, invariant_kahler_class(kCdm, om1));
  const Certificate cdm = non_product_certificate(kCdm, b_cdm);
  CHECK(cdm.kind == CertificateKind::NotAProduct);
  CHECK(cdm.rule == "dim3-aspherical");

  const BettiVector b_mp = betti_numbers(kMp, invariant_kahler_class(kMp, om1));
  const Certificate mp = non_product_certificate(kMp, b_mp);
  CHECK(mp.kind == CertificateKind::NotAProduct);
  CHECK(mp.rule == "solvable-perfect");

  const Certificate id =
      non_product_certificate(Matrix::identity(2), betti_numbers(Matrix::identity(2), om1));
  CHECK(id.kind == CertificateKind::TrivialProduct);

  CHECK_THROWS_AS(non_product_certificate(kCat, b_cdm), InfiniteOrderError);
}

TEST_CASE("solvable-perfect applies to the block family in every dimension") {
  for (int n : {2, 3}) {
    Matrix b(static_cast<std::size_t>(2 * n), static_cast<std::size_t>(2 * n));
    for (int c = 0; c < n; ++c)
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
          b(static_cast<std::size_t>(2 * c) + i, static_cast<std::size_t>(2 * c) + j) =
              kMp(i, j);
    const KahlerForm bar = invariant_kahler_class(b, standard_omega(n));
    const Certificate cert = non_product_certificate(b, betti_numbers(b, bar));
    CHECK(cert.kind == CertificateKind::NotAProduct);
    CHECK(cert.rule == "solvable-perfect");
  }
}

TEST_CASE("torsion obstructions fall back to Unknown above dimension 3") {
  // CDM (+) CDM on T^4: |det(A - I)| = 4, H_1 torsion (Z/2)^2, dim M = 5.
  Matrix a(4, 4);
  a(0, 1) = 1;
  a(1, 0) = -1;
  a(2, 3) = 1;
  a(3, 2) = -1;
  const KahlerForm bar = invariant_kahler_class(a, standard_omega(2));
  const Certificate cert = non_product_certificate(a, betti_numbers(a, bar));
  CHECK(cert.kind == CertificateKind::Unknown);
  CHECK(cert.h1_torsion == std::vector<Int>{Int(2), Int(2)});
}

TEST_CASE("pi1 invariants are consistent across modules") {
  Rng rng(424243);
  for (int iter = 0; iter < 20; ++iter) {
    const auto sample = test_support::random_cokahler_sample(rng, 4);
    const FirstHomology h1 = first_homology(sample.a);
    // rational b_1 agreement between the group side and the cohomology side
    CHECK(h1.rank - 1 == invariant_betti(sample.a, 1).dimension);

    const OrderResult ord = matrix_order(sample.a);
    REQUIRE(ord.finite);
    CHECK(product_subgroup(sample.a).index == ord.value);
    CHECK(cover_data(sample.a).degree == ord.value);
    CHECK(structure_group(sample.a).order == ord.value);

    const KahlerForm bar =
        invariant_kahler_class(sample.a, KahlerForm(sample.n, sample.omega));
    const Certificate cert = non_product_certificate(sample.a, betti_numbers(sample.a, bar));
    if (cert.kind == CertificateKind::TrivialProduct) CHECK(bundle_triviality(sample.a));
    if (cert.rule == "solvable-perfect") CHECK(h1 == FirstHomology{1, {}});
  }
}
