#include <doctest.h>

#include <random>

#include "sd2/numerics.hpp"
#include "sd2/repmat.hpp"

using namespace sd2;

namespace {

Matrix sigma1() {
  Matrix s(2, 2);
  s << 0, 1, 1, 0;
  return s;
}

Matrix sigma3() {
  Matrix s(2, 2);
  s << 1, 0, 0, -1;
  return s;
}

}  // namespace

TEST_CASE("matmul basics") {
  Matrix m(2, 2);
  m << Complex(1, 2), Complex(0, -1), Complex(3, 0), Complex(2, 2);

  CHECK((matmul(Matrix::Identity(2, 2), m) - m).norm() == 0.0);
  CHECK((matmul(sigma1(), sigma1()) - Matrix::Identity(2, 2)).norm() == 0.0);

  // sigma1 * diag(1,-1), multiplied out by hand
  Matrix expected(2, 2);
  expected << 0, -1, 1, 0;
  CHECK((matmul(sigma1(), sigma3()) - expected).norm() == 0.0);

  CHECK_THROWS_AS(matmul(Matrix::Zero(2, 3), Matrix::Zero(2, 3)),
                  DimensionError);
}

TEST_CASE("commutator and anticommutator") {
  Matrix m(2, 2);
  m << Complex(1, 1), Complex(2, 0), Complex(0, 3), Complex(-1, 0);
  CHECK(commutator(m, m).norm() == 0.0);
  CHECK((anticommutator(sigma1(), sigma1()) - 2.0 * Matrix::Identity(2, 2))
            .norm() == 0.0);

  Matrix expected(2, 2);  // [diag(1,-1), sigma1] = 2 [[0,1],[-1,0]]
  expected << 0, 2, -2, 0;
  CHECK((commutator(sigma3(), sigma1()) - expected).norm() == 0.0);

  CHECK_THROWS_AS(commutator(Matrix::Zero(2, 2), Matrix::Zero(3, 3)),
                  DimensionError);
}

TEST_CASE("dense_eigen sorts and validates residuals") {
  Matrix d = Matrix::Zero(3, 3);
  d(0, 0) = 3.0;
  d(1, 1) = 1.0;
  d(2, 2) = 2.0;
  const auto eig = dense_eigen(d);
  REQUIRE(eig.eigenvalues.size() == 3);
  CHECK(eig.eigenvalues[0] == Complex(1.0, 0.0));
  CHECK(eig.eigenvalues[1] == Complex(2.0, 0.0));
  CHECK(eig.eigenvalues[2] == Complex(3.0, 0.0));

  const auto flip = dense_eigen(sigma1());
  CHECK(flip.eigenvalues[0].real() == doctest::Approx(-1.0));
  CHECK(flip.eigenvalues[1].real() == doctest::Approx(1.0));
}

TEST_CASE("dense_eigen matches the closed-form J2 spectrum") {
  const OscParams params(4, 0.3, 0.7);
  const Matrix j2 = build_circular(params, BasisOrdering::CircularB2).J2;
  const auto eig = dense_eigen(j2);
  // closed form: {-sqrt6, -sqrt2, 0, sqrt2, sqrt6} at zeta = 1
  const std::vector<double> expected = {-std::sqrt(6.0), -std::sqrt(2.0), 0.0,
                                        std::sqrt(2.0), std::sqrt(6.0)};
  REQUIRE(eig.eigenvalues.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(std::abs(eig.eigenvalues[i].imag()) < 1e-10);
    CHECK(eig.eigenvalues[i].real() == doctest::Approx(expected[i]).epsilon(1e-9));
  }
}

TEST_CASE("matmul associativity on random triples") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix a(4, 4), b(4, 4), c(4, 4);
    for (Eigen::Index i = 0; i < 4; ++i) {
      for (Eigen::Index j = 0; j < 4; ++j) {
        a(i, j) = Complex(dist(rng), dist(rng));
        b(i, j) = Complex(dist(rng), dist(rng));
        c(i, j) = Complex(dist(rng), dist(rng));
      }
    }
    const Matrix lhs = matmul(matmul(a, b), c);
    const Matrix rhs = matmul(a, matmul(b, c));
    CHECK((lhs - rhs).norm() / std::max(1.0, lhs.norm()) < 1e-12);
  }
}

TEST_CASE("builder-emitted matrices meet the eigensolver residual bound") {
  // dense_eigen enforces ||Mv - lambda v|| <= residual_tol ||M||_F and
  // throws otherwise, so a clean pass is the assertion.
  for (auto [mx, my] : {std::pair{0.3, 0.7}, std::pair{-0.4, 1.5}}) {
    const OscParams p(7, mx, my);
    for (auto ordering : {BasisOrdering::CartesianV, BasisOrdering::CircularB1,
                          BasisOrdering::CircularB2}) {
      const GeneratorSet gs = (ordering == BasisOrdering::CartesianV)
                                  ? build_cartesian(p)
                                  : build_circular(p, ordering);
      for (const Matrix* m :
           {&gs.J1, &gs.J2, &gs.J3, &gs.Rx, &gs.Ry, &gs.H, &gs.Casimir}) {
        CHECK_NOTHROW(dense_eigen(*m));
      }
    }
    CHECK_NOTHROW(dense_eigen(build_q(p)));
  }
}

TEST_CASE("all_finite rejects NaN") {
  Matrix m = Matrix::Zero(2, 2);
  CHECK(all_finite(m));
  m(0, 1) = Complex(std::nan(""), 0.0);
  CHECK(!all_finite(m));
}

TEST_CASE("dense_eigen input validation") {
  CHECK_THROWS_AS(dense_eigen(Matrix::Zero(2, 3)), DimensionError);
  Tolerances bad;
  bad.residual_tol = -1.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  CHECK_THROWS_AS(dense_eigen(Matrix::Identity(2, 2), bad),
                  std::invalid_argument);
}
