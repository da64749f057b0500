#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace cokahler;
using test_support::Rng;

TEST_CASE("matrix basics") {
  Matrix a{{1, 2}, {3, 4}};
  CHECK(a.rows() == 2);
  CHECK(a.trace() == 5);
  CHECK(a.transpose() == Matrix{{1, 3}, {2, 4}});
  CHECK(a * Matrix::identity(2) == a);
  CHECK(a.pow(0) == Matrix::identity(2));
  CHECK(a.pow(3) == a * a * a);
  CHECK(a.is_integral());
  Matrix half(1, 1);
  half(0, 0) = Rat(1, 2);
  CHECK_FALSE(half.is_integral());
  CHECK_THROWS_AS(a * Matrix::identity(3), DimensionError);
}

TEST_CASE("smith normal form on the pinned examples") {
  // Oracle (gcd of k x k minors) agrees with the frozen expected diagonal.
  Matrix m{{-1, 1}, {-1, -1}};
  CHECK(test_support::snf_diagonal_by_minor_gcds(m) == std::vector<Int>{Int(1), Int(2)});
  SnfResult f = snf(m);
  CHECK(f.diagonal() == std::vector<Int>{Int(1), Int(2)});
  CHECK(f.u * m * f.v == f.s);

  CHECK(snf(Matrix::identity(4)).diagonal() == std::vector<Int>(4, Int(1)));
  CHECK(snf(Matrix::zero(2, 2)).diagonal() == std::vector<Int>(2, Int(0)));

  Matrix nonint(1, 1);
  nonint(0, 0) = Rat(1, 3);
  CHECK_THROWS_AS(snf(nonint), IntegralityError);
}

TEST_CASE("smith invariants on random integer matrices") {
  Rng rng(20240811);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t r = static_cast<std::size_t>(rng.uniform(1, 8));
    const std::size_t c = static_cast<std::size_t>(rng.uniform(1, 8));
    const Matrix a = test_support::random_int_matrix(rng, r, c, -5, 5);
    const SnfResult f = snf(a);

    CHECK(f.u * a * f.v == f.s);
    const Rat du = determinant(f.u), dv = determinant(f.v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));

    const std::vector<Int> d = f.diagonal();
    for (std::size_t i = 0; i < d.size(); ++i) {
      CHECK(d[i] >= 0);
      if (i + 1 < d.size() && !d[i + 1].is_zero()) {
        REQUIRE(!d[i].is_zero());
        CHECK(d[i + 1] % d[i] == 0);
      }
      if (i + 1 < d.size() && d[i].is_zero()) CHECK(d[i + 1].is_zero());
    }
    // Off-diagonal entries of S vanish.
    for (std::size_t i = 0; i < f.s.rows(); ++i)
      for (std::size_t j = 0; j < f.s.cols(); ++j)
        if (i != j) CHECK(f.s(i, j).is_zero());

    if (r == c) {
      Int prod = 1;
      for (const Int& x : d) prod *= x;
      CHECK(Rat(prod) == abs(Rat(test_support::naive_det(a))));
    }
    if (r <= 4 && c <= 4) CHECK(d == test_support::snf_diagonal_by_minor_gcds(a));
  }
}

TEST_CASE("cokernel structure") {
  const CokerStructure c1 = coker_structure(Matrix{{-1, 1}, {-1, -1}});
  CHECK(c1.rank == 0);
  CHECK(c1.torsion == std::vector<Int>{Int(2)});

  const CokerStructure c2 = coker_structure(Matrix::zero(3, 3));
  CHECK(c2.rank == 3);
  CHECK(c2.torsion.empty());

  const CokerStructure c3 = coker_structure(Matrix{{-1, -1}, {1, 0}});
  CHECK(c3.rank == 0);
  CHECK(c3.torsion.empty());
}

TEST_CASE("rational kernel on the pinned examples") {
  CHECK(rational_kernel(Matrix::identity(3)).empty());
  CHECK(rational_kernel(Matrix::zero(2, 2)).size() == 2);
  CHECK(rational_kernel(Matrix{{-1, 1}, {-1, -1}}).empty());
}

TEST_CASE("kernel + rank properties on random matrices") {
  Rng rng(987654);
  for (int iter = 0; iter < 120; ++iter) {
    const std::size_t r = static_cast<std::size_t>(rng.uniform(1, 7));
    const std::size_t c = static_cast<std::size_t>(rng.uniform(1, 7));
    Matrix a = test_support::random_int_matrix(rng, r, c, -4, 4);
    if (iter % 3 == 0)  // sprinkle rational entries
      a(0, 0) += Rat(1, rng.uniform(2, 5));
    const auto kernel = rational_kernel(a);
    CHECK(rank(a) + kernel.size() == c);
    for (const auto& v : kernel) {
      bool nonzero = false;
      for (std::size_t i = 0; i < r; ++i) {
        Rat acc = 0;
        for (std::size_t j = 0; j < c; ++j) acc += a(i, j) * v[j];
        CHECK(acc.is_zero());
      }
      for (const Rat& q : v) nonzero = nonzero || !q.is_zero();
      CHECK(nonzero);
    }
  }
}

TEST_CASE("determinant matches the Laplace oracle") {
  Rng rng(5551212);
  for (int iter = 0; iter < 80; ++iter) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
    const Matrix a = test_support::random_int_matrix(rng, n, n, -6, 6);
    CHECK(determinant(a) == Rat(test_support::naive_det(a)));
  }
  CHECK(determinant(Matrix::identity(5)) == 1);
  CHECK_THROWS_AS(determinant(Matrix::zero(2, 3)), DimensionError);
}

TEST_CASE("inverse") {
  Rng rng(777);
  for (int iter = 0; iter < 40; ++iter) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
    const Matrix u = test_support::random_unimodular(rng, n);
    const Matrix u_inv = inverse(u);
    CHECK(u * u_inv == Matrix::identity(n));
    CHECK(u_inv.is_integral());
  }
  CHECK_THROWS_AS(inverse(Matrix::zero(2, 2)), SingularMatrixError);
}
