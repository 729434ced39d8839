#include <doctest.h>

#include "spinent/spin_algebra.hpp"

using namespace spinent;

namespace {

Vector cat_vector() {
  Vector v(4);
  v << 1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0);
  return v;
}

}  // namespace

TEST_CASE("momentum operator is the ascending magnetic diagonal") {
  Matrix sz2 = make_sz(SpinSpace(2));
  CHECK(sz2(0, 0) == Complex(-0.5));
  CHECK(sz2(1, 1) == Complex(0.5));

  Matrix sz3 = make_sz(SpinSpace(3));
  CHECK(sz3(0, 0) == Complex(-1.0));
  CHECK(sz3(1, 1) == Complex(0.0));
  CHECK(sz3(2, 2) == Complex(1.0));

  Matrix sz6 = make_sz(SpinSpace(6));
  for (int n = 1; n <= 6; ++n) CHECK(sz6(n - 1, n - 1).real() == n - 3.5);
  CHECK(sz6(0, 0) == Complex(-2.5));
  CHECK(sz6(5, 5) == Complex(2.5));
}

TEST_CASE("ladder operators carry the sqrt(n(N-n)) weights") {
  Matrix sp2 = make_s_plus(SpinSpace(2));
  CHECK(sp2(1, 0) == Complex(1.0));
  CHECK(sp2.cwiseAbs().sum() == doctest::Approx(1.0));

  Matrix sp3 = make_s_plus(SpinSpace(3));
  CHECK(sp3(1, 0).real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(sp3(2, 1).real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("lowering is exactly the adjoint of raising") {
  for (int n = 1; n <= 8; ++n) {
    SpinSpace space(n);
    Matrix diff = make_s_minus(space) - make_s_plus(space).adjoint();
    CHECK(diff.cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("commutator of the ladder pair is twice the momentum") {
  for (int n = 2; n <= 8; ++n) {
    SpinSpace space(n);
    Matrix sp = make_s_plus(space);
    Matrix sm = make_s_minus(space);
    CHECK(approx_equal(sp * sm - sm * sp, 2.0 * make_sz(space), 1e-12));
  }
}

TEST_CASE("ladder powers") {
  SpinSpace two(2);
  CHECK(approx_equal(ladder_power(two, 0, LadderSign::Plus), Matrix::Identity(2, 2)));
  CHECK(approx_equal(ladder_power(two, 2, LadderSign::Plus), Matrix::Zero(2, 2)));

  SpinSpace three(3);
  Matrix sp2 = ladder_power(three, 2, LadderSign::Plus);
  CHECK(sp2(2, 0).real() == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(sp2.cwiseAbs().sum() == doctest::Approx(2.0));

  for (int n = 2; n <= 6; ++n) {
    SpinSpace space(n);
    for (int m = 0; m <= n; ++m) {
      Matrix direct = ladder_power(space, m, LadderSign::Minus);
      Matrix folded = Matrix::Identity(n, n);
      for (int k = 0; k < m; ++k) folded = ladder_power(space, 1, LadderSign::Minus) * folded;
      CHECK(approx_equal(direct, folded, 1e-12));
    }
  }
}

TEST_CASE("operator polynomials over ladder monomials") {
  SpinSpace two(2);
  CHECK(approx_equal(operator_polynomial(two, {{{0, 0}, 1.0}}), Matrix::Identity(2, 2)));
  CHECK(approx_equal(operator_polynomial(two, {{{1, 0}, 1.0}}), make_s_plus(two)));

  Matrix half_sigma_x = operator_polynomial(two, {{{1, 0}, 0.5}, {{0, 1}, 0.5}});
  Matrix expected(2, 2);
  expected << 0.0, 0.5, 0.5, 0.0;
  CHECK(approx_equal(half_sigma_x, expected));

  CHECK_THROWS_AS(operator_polynomial(two, {{{2, 0}, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(operator_polynomial(two, {{{0, 5}, 1.0}}), std::invalid_argument);
}

TEST_CASE("identity-power combinations collapse to the diagonal members") {
  SpinSpace three(3);
  Matrix sp0 = ladder_power(three, 0, LadderSign::Plus);
  Matrix sm0 = ladder_power(three, 0, LadderSign::Minus);
  Matrix sz = make_sz(three);
  CHECK(approx_equal(sp0 * sz + sz * sm0, 2.0 * sz, 1e-15));
  CHECK(approx_equal(Complex(0, 1) * (sp0 * sz - sz * sm0), Matrix::Zero(3, 3), 1e-15));
}

TEST_CASE("paired rotations are unitary and fix the aligned superposition") {
  CHECK(approx_equal(paired_u2_rotation(0.0, 0.3, Side::A), Matrix::Identity(2, 2)));
  CHECK(approx_equal(paired_u2_rotation(0.0, 1.9, Side::B), Matrix::Identity(2, 2)));

  const Vector cat = cat_vector();
  int points = 0;
  for (int it = 0; it < 5; ++it)
    for (int ip = 0; ip < 5; ++ip) {
      const double theta = 0.11 + it * 0.61;
      const double phi = -2.9 + ip * 1.23;
      Matrix ua = paired_u2_rotation(theta, phi, Side::A);
      Matrix ub = paired_u2_rotation(theta, phi, Side::B);
      CHECK(is_unitary(ua, 1e-12));
      CHECK(is_unitary(ub, 1e-12));
      const Complex overlap = (cat.adjoint() * (kron(ua, ub) * cat))(0, 0);
      CHECK(std::abs(1.0 - std::norm(overlap)) < 1e-10);
      ++points;
    }
  CHECK(points == 25);
}
