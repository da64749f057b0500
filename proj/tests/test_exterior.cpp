#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace cokahler;
using test_support::Rng;

namespace {

ExteriorElement e(std::initializer_list<int> idx) {
  return ExteriorElement::basis_monomial(MultiIndex(std::vector<int>(idx)));
}

ExteriorElement random_sparse(Rng& rng, int degree, int dim) {
  const std::vector<MultiIndex> b = basis(degree, dim);
  ExteriorElement x(degree);
  const int terms = rng.uniform(1, 3);
  for (int t = 0; t < terms; ++t) {
    const MultiIndex& mi = b[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(b.size()) - 1))];
    x.add_term(mi, Rat(rng.uniform(-3, 3)));
  }
  return x;
}

std::vector<Rat> apply_matrix(const Matrix& m, const std::vector<Rat>& v) {
  std::vector<Rat> out(m.rows(), Rat(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

}  // namespace

TEST_CASE("basis enumeration") {
  CHECK(basis(0, 2) == std::vector<MultiIndex>{MultiIndex{}});
  CHECK(basis(1, 2) == std::vector<MultiIndex>{MultiIndex({1}), MultiIndex({2})});
  CHECK(basis(2, 4) == std::vector<MultiIndex>{MultiIndex({1, 2}), MultiIndex({1, 3}),
                                               MultiIndex({1, 4}), MultiIndex({2, 3}),
                                               MultiIndex({2, 4}), MultiIndex({3, 4})});
  CHECK_THROWS_AS(basis(3, 2), DegreeError);
  CHECK_THROWS_AS(basis(-1, 2), DegreeError);
  CHECK_THROWS_AS(MultiIndex({2, 1}), ValidationError);
  CHECK_THROWS_AS(MultiIndex({0, 1}), ValidationError);
}

TEST_CASE("basis_rank inverts enumeration") {
  for (int dim : {2, 4, 6, 8})
    for (int k = 0; k <= dim; ++k) {
      const std::vector<MultiIndex> b = basis(k, dim);
      for (std::size_t i = 0; i < b.size(); ++i) CHECK(basis_rank(b[i], dim) == i);
    }
}

TEST_CASE("wedge on the pinned examples") {
  CHECK(wedge(e({1}), e({2})) == e({1, 2}));
  CHECK(wedge(e({2}), e({1})) == -e({1, 2}));
  CHECK(wedge(e({1}) + e({2}), e({1})) == -e({1, 2}));
  // Beyond the ambient top degree everything dies by index repetition.
  CHECK(wedge(e({1, 2}), e({1, 2})).is_zero());
  CHECK(wedge(e({1, 2}), e({2, 3})).is_zero());
}

TEST_CASE("wedge is associative and graded-commutative") {
  Rng rng(606060);
  for (int iter = 0; iter < 60; ++iter) {
    const int dim = 2 * rng.uniform(1, 4);
    const int p = rng.uniform(0, std::min(dim, 3));
    const int q = rng.uniform(0, std::min(dim - p, 3));
    const int r = rng.uniform(0, std::min(dim - p - q, 2));
    const ExteriorElement x = random_sparse(rng, p, dim);
    const ExteriorElement y = random_sparse(rng, q, dim);
    const ExteriorElement z = random_sparse(rng, r, dim);

    CHECK(wedge(wedge(x, y), z) == wedge(x, wedge(y, z)));
    ExteriorElement yx = wedge(y, x);
    if ((p * q) % 2 == 1) yx = -yx;
    CHECK(wedge(x, y) == yx);
    if (p == r)  // bilinearity in the first slot
      CHECK(wedge(x + z * Rat(2), y) == wedge(x, y) + wedge(z, y) * Rat(2));
  }
}

TEST_CASE("standard omega") {
  CHECK(standard_omega(1).element() == e({1, 2}));
  CHECK(standard_omega(2).element() == e({1, 2}) + e({3, 4}));
  CHECK(standard_omega(2).is_nondegenerate());
  // omega ^ omega = 2 e_{1,2,3,4}
  const ExteriorElement sq = wedge(standard_omega(2).element(), standard_omega(2).element());
  CHECK(sq == e({1, 2, 3, 4}) * Rat(2));
  CHECK_THROWS_AS(standard_omega(0), ValidationError);
}

TEST_CASE("induced map on the pinned examples") {
  const Matrix cdm{{0, 1}, {-1, 0}};
  CHECK(induced_map(cdm, 1) == cdm);
  CHECK(induced_map(cdm, 2) == Matrix{{1}});
  CHECK(induced_map(cdm, 0) == Matrix{{1}});

  Rng rng(11);
  const Matrix a = test_support::random_int_matrix(rng, 4, 4, -3, 3);
  CHECK(induced_map(a, 1) == a);
  CHECK(induced_map(a, 4) == [&] {
    Matrix d(1, 1);
    d(0, 0) = Rat(test_support::naive_det(a));
    return d;
  }());
  CHECK_THROWS_AS(induced_map(a, 5), DegreeError);
  CHECK_THROWS_AS(induced_map(Matrix::zero(2, 3), 1), DimensionError);
}

TEST_CASE("induced map entries are minors") {
  Rng rng(2222);
  const Matrix a = test_support::random_int_matrix(rng, 5, 5, -3, 3);
  for (int k : {2, 3}) {
    const Matrix lk = induced_map(a, k);
    const std::vector<MultiIndex> b = basis(k, 5);
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) {
        Matrix sub(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
        for (int r = 0; r < k; ++r)
          for (int c = 0; c < k; ++c)
            sub(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
                a(static_cast<std::size_t>(b[i].indices()[static_cast<std::size_t>(r)] - 1),
                  static_cast<std::size_t>(b[j].indices()[static_cast<std::size_t>(c)] - 1));
        CHECK(lk(i, j) == Rat(test_support::naive_det(sub)));
      }
  }
}

TEST_CASE("induced map functoriality and determinant identity") {
  Rng rng(909090);
  for (int iter = 0; iter < 12; ++iter) {
    const int n = rng.uniform(1, 4);
    const std::size_t dim = static_cast<std::size_t>(2 * n);
    const Matrix a = test_support::random_unimodular(rng, dim);
    const Matrix b = test_support::random_unimodular(rng, dim);
    for (int k = 0; k <= 2 * n; ++k)
      CHECK(induced_map(a * b, k) == induced_map(a, k) * induced_map(b, k));
  }
  for (int iter = 0; iter < 8; ++iter) {
    const int n = rng.uniform(1, 3);
    const std::size_t dim = static_cast<std::size_t>(2 * n);
    const Matrix a = test_support::random_int_matrix(rng, dim, dim, -2, 2);
    const Rat det_a = determinant(a);
    for (int k = 1; k <= 2 * n; ++k) {
      Rat expected = 1;
      const Int e = binomial(2 * n - 1, k - 1);
      for (Int i = 0; i < e; ++i) expected *= det_a;
      CHECK(determinant(induced_map(a, k)) == expected);
    }
  }
}

TEST_CASE("induced map is natural for the wedge") {
  Rng rng(515151);
  for (int iter = 0; iter < 25; ++iter) {
    const int n = rng.uniform(1, 3);
    const int dim = 2 * n;
    const int p = rng.uniform(0, dim - 1);
    const int q = rng.uniform(0, dim - p);
    const Matrix a = test_support::random_unimodular(rng, static_cast<std::size_t>(dim));
    const ExteriorElement x = random_sparse(rng, p, dim);
    const ExteriorElement y = random_sparse(rng, q, dim);

    const std::vector<Rat> lhs =
        apply_matrix(induced_map(a, p + q), wedge(x, y).coefficient_vector(dim));
    const ExteriorElement ax = ExteriorElement::from_coefficient_vector(
        p, dim, apply_matrix(induced_map(a, p), x.coefficient_vector(dim)));
    const ExteriorElement ay = ExteriorElement::from_coefficient_vector(
        q, dim, apply_matrix(induced_map(a, q), y.coefficient_vector(dim)));
    CHECK(lhs == wedge(ax, ay).coefficient_vector(dim));
  }
}

TEST_CASE("lefschetz operator") {
  // n=1, k=0: the unit maps to e_{1,2}.
  const Matrix l0 = lefschetz_operator(standard_omega(1), 0);
  CHECK(l0.rows() == 1);
  CHECK(l0.cols() == 1);
  CHECK(l0(0, 0) == 1);

  // n=2, k=1: full rank 4.
  const Matrix l1 = lefschetz_operator(standard_omega(2), 1);
  CHECK(l1.rows() == 4);
  CHECK(l1.cols() == 4);
  CHECK(rank(l1) == 4);

  CHECK_THROWS_AS(lefschetz_operator(standard_omega(1), 1), DegreeError);

  // The operator matrix and a direct wedge call agree.
  Rng rng(373737);
  const KahlerForm om = standard_omega(3);
  for (int k : {0, 1, 2}) {
    const ExteriorElement x = random_sparse(rng, k, 6);
    const std::vector<Rat> via_matrix =
        apply_matrix(lefschetz_operator(om, k), x.coefficient_vector(6));
    CHECK(ExteriorElement::from_coefficient_vector(k + 2, 6, via_matrix) ==
          wedge(om.element(), x));
    // Two applications compose.
    const std::vector<Rat> twice = apply_matrix(
        lefschetz_operator(om, k + 2) * lefschetz_operator(om, k), x.coefficient_vector(6));
    CHECK(ExteriorElement::from_coefficient_vector(k + 4, 6, twice) ==
          wedge(om.element(), wedge(om.element(), x)));
  }
}

TEST_CASE("hard lefschetz for the standard form") {
  for (int n = 1; n <= 5; ++n) {
    const HardLefschetzReport r = hard_lefschetz_check(standard_omega(n), n);
    CHECK(r.ok);
    CHECK(r.degrees.size() == static_cast<std::size_t>(n) + 1);
    for (const auto& d : r.degrees) CHECK(d.rank == d.dimension);
  }
}

TEST_CASE("hard lefschetz rejects a degenerate form") {
  // e_{1,2} alone on dimension 4: rank-2 skew matrix.
  Matrix m(4, 4);
  m(0, 1) = 1;
  m(1, 0) = -1;
  const KahlerForm degenerate(2, m);
  CHECK_FALSE(degenerate.is_nondegenerate());
  CHECK_THROWS_AS(hard_lefschetz_check(degenerate, 2), DegeneracyError);
}
