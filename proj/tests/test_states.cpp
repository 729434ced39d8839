#include <doctest.h>

#include "oracles.hpp"
#include "spinent/states.hpp"

using namespace spinent;

namespace {

IrrepDiagonalState point_mass(const CouplingScheme& scheme, int tj, int tmj) {
  return IrrepDiagonalState(scheme, {{{half(tj), half(tmj)}, 1.0}});
}

}  // namespace

TEST_CASE("pure-state construction") {
  Vector e1 = Vector::Zero(3);
  e1(0) = 1.0;
  DensityMatrix rho = from_pure(e1);
  CHECK(rho.matrix()(0, 0) == Complex(1.0));
  CHECK(std::abs(rho.matrix().trace() - Complex(1.0)) < 1e-15);

  Vector epr(4);
  epr << 0.0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0;
  DensityMatrix singlet = from_pure(epr, BasisTag::product(2, 2));
  CHECK(std::abs(singlet.matrix().trace() - Complex(1.0)) < 1e-14);
  Eigen::VectorXd ev = hermitian_eigenvalues(singlet.matrix());
  CHECK(ev.maxCoeff() == doctest::Approx(1.0).epsilon(1e-12));  // rank 1

  Vector unnormalized(2);
  unnormalized << 2.0, 0.0;
  CHECK(from_pure(unnormalized).matrix()(0, 0).real() == doctest::Approx(1.0).epsilon(1e-15));

  CHECK_THROWS_AS(from_pure(Vector::Zero(2)), std::invalid_argument);
}

TEST_CASE("tensor products and mixtures") {
  DensityMatrix half_a(0.5 * Matrix::Identity(2, 2), BasisTag::single(2));
  DensityMatrix quarter = tensor_product(half_a, half_a);
  CHECK(approx_equal(quarter.matrix(), 0.25 * Matrix::Identity(4, 4)));
  CHECK(quarter.tag() == BasisTag::product(2, 2));

  CHECK(approx_equal(mixture({{1.0, half_a}}).matrix(), half_a.matrix()));

  Vector up(2), down(2);
  up << 0.0, 1.0;
  down << 1.0, 0.0;
  DensityMatrix up_up = tensor_product(from_pure(up), from_pure(up));
  DensityMatrix down_down = tensor_product(from_pure(down), from_pure(down));
  DensityMatrix classical = mixture({{0.5, up_up}, {0.5, down_down}});
  Matrix expected = Matrix::Zero(4, 4);
  expected(0, 0) = 0.5;
  expected(3, 3) = 0.5;
  CHECK(approx_equal(classical.matrix(), expected));

  CHECK_THROWS_AS(mixture({{0.5, up_up}, {0.6, down_down}}), std::invalid_argument);
  CHECK_THROWS_AS(mixture({{0.5, up_up}, {0.5, half_a}}), std::invalid_argument);
}

TEST_CASE("validity triple is enforced on construction") {
  Matrix bad = Matrix::Identity(2, 2);
  bad(0, 1) = Complex(0.5, 0.0);
  CHECK_THROWS_AS(DensityMatrix(bad, BasisTag::single(2)), InvalidStateError);

  CHECK_THROWS_AS(DensityMatrix(Matrix::Identity(2, 2), BasisTag::single(2)), InvalidStateError);

  Matrix indefinite = Matrix::Zero(2, 2);
  indefinite(0, 0) = 1.5;
  indefinite(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix(indefinite, BasisTag::single(2)), InvalidStateError);

  CHECK_THROWS_AS(DensityMatrix(0.5 * Matrix::Identity(2, 2), BasisTag::product(2, 2)),
                  InvalidStateError);
}

TEST_CASE("partial traces of the fixtures") {
  DensityMatrix epr = make_epr();
  CHECK(approx_equal(partial_trace(epr, Side::A).matrix(), 0.5 * Matrix::Identity(2, 2), 1e-14));
  CHECK(approx_equal(partial_trace(epr, Side::B).matrix(), 0.5 * Matrix::Identity(2, 2), 1e-14));

  std::mt19937_64 rng(71);
  DensityMatrix rho_a(oracle::random_density(3, rng), BasisTag::single(3));
  DensityMatrix rho_b(oracle::random_density(2, rng), BasisTag::single(2));
  DensityMatrix joint = tensor_product(rho_a, rho_b);
  CHECK(approx_equal(partial_trace(joint, Side::A).matrix(), rho_a.matrix(), 1e-12));
  CHECK(approx_equal(partial_trace(joint, Side::B).matrix(), rho_b.matrix(), 1e-12));

  CHECK_THROWS_AS(partial_trace(rho_a, Side::A), std::invalid_argument);
}

TEST_CASE("coupled pure state reduces to the cumulation weights") {
  CouplingScheme scheme(half(2), half(1));
  DensityMatrix full = irrep_to_full(point_mass(scheme, 1, 1));
  Matrix reduced_b = partial_trace(full, Side::B).matrix();
  CHECK(reduced_b(0, 0).real() == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(reduced_b(1, 1).real() == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(std::abs(reduced_b(0, 1)) < 1e-14);
}

TEST_CASE("reduction of the stretched state is a point mass") {
  for (int tl = 1; tl <= 4; ++tl)
    for (int ts = 0; ts <= tl; ++ts) {
      CouplingScheme scheme(half(tl), half(ts));
      auto state = point_mass(scheme, tl + ts, tl + ts);
      auto da = reduced_distribution(state, Side::A);
      auto db = reduced_distribution(state, Side::B);
      CHECK(da.prob(half(tl)) == doctest::Approx(1.0).epsilon(1e-15));
      CHECK(db.prob(half(ts)) == doctest::Approx(1.0).epsilon(1e-15));
    }
}

TEST_CASE("qutrit-qubit cumulation formulas") {
  CouplingScheme scheme(half(2), half(1));
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 50; ++trial) {
    auto state = oracle::random_irrep_state(scheme, rng);
    const auto w = [&](int tj, int tmj) { return state.weights.at({half(tj), half(tmj)}); };

    auto dist_b = reduced_distribution(state, Side::B);
    const double p_down = (2.0 / 3.0) * w(1, 1) + (1.0 / 3.0) * w(1, -1) +
                          (1.0 / 3.0) * w(3, 1) + (2.0 / 3.0) * w(3, -1) + w(3, -3);
    CHECK(dist_b.prob(half(-1)) == doctest::Approx(p_down).epsilon(1e-13));
    CHECK(dist_b.prob(half(1)) == doctest::Approx(1.0 - p_down).epsilon(1e-13));

    auto dist_a = reduced_distribution(state, Side::A);
    const double p_minus = (2.0 / 3.0) * w(1, -1) + (1.0 / 3.0) * w(3, -1) + w(3, -3);
    const double p_zero = (1.0 / 3.0) * w(1, 1) + (1.0 / 3.0) * w(1, -1) +
                          (2.0 / 3.0) * w(3, 1) + (2.0 / 3.0) * w(3, -1);
    const double p_plus = (2.0 / 3.0) * w(1, 1) + (1.0 / 3.0) * w(3, 1) + w(3, 3);
    CHECK(dist_a.prob(half(-2)) == doctest::Approx(p_minus).epsilon(1e-13));
    CHECK(dist_a.prob(half(0)) == doctest::Approx(p_zero).epsilon(1e-13));
    CHECK(dist_a.prob(half(2)) == doctest::Approx(p_plus).epsilon(1e-13));
  }
}

TEST_CASE("irrep-diagonal states expand to valid product-basis matrices") {
  CouplingScheme spins(half(1), half(1));
  DensityMatrix singlet = irrep_to_full(point_mass(spins, 0, 0));
  CHECK(approx_equal(singlet.matrix(), make_epr().matrix(), 1e-14));

  auto labels = irrep_labels(spins);
  std::map<IrrepLabel, double> uniform;
  for (const auto& label : labels) uniform[label] = 1.0 / static_cast<double>(labels.size());
  DensityMatrix mixed = irrep_to_full(IrrepDiagonalState(spins, uniform));
  CHECK(approx_equal(mixed.matrix(), 0.25 * Matrix::Identity(4, 4), 1e-14));
}

TEST_CASE("fast reduction agrees with the brute-force partial trace") {
  std::mt19937_64 rng(99);
  for (int tl = 0; tl <= 4; ++tl)
    for (int ts = 0; ts <= tl; ++ts) {
      CouplingScheme scheme(half(tl), half(ts));
      auto state = oracle::random_irrep_state(scheme, rng);
      DensityMatrix full = irrep_to_full(state);
      Matrix reduced_a = partial_trace(full, Side::A).matrix();
      Matrix reduced_b = partial_trace(full, Side::B).matrix();
      auto dist_a = reduced_distribution(state, Side::A);
      auto dist_b = reduced_distribution(state, Side::B);
      for (int i = 0; i < scheme.na(); ++i)
        CHECK(std::abs(reduced_a(i, i).real() - dist_a.probs[static_cast<std::size_t>(i)]) <
              1e-12);
      for (int i = 0; i < scheme.nb(); ++i)
        CHECK(std::abs(reduced_b(i, i).real() - dist_b.probs[static_cast<std::size_t>(i)]) <
              1e-12);
    }
}

TEST_CASE("reduced matrices of irrep-diagonal states are exactly diagonal") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    CouplingScheme scheme(half(2 + trial % 3), half(1 + trial % 2));
    DensityMatrix full = irrep_to_full(oracle::random_irrep_state(scheme, rng));
    for (Side side : {Side::A, Side::B}) {
      Matrix reduced = partial_trace(full, side).matrix();
      for (Eigen::Index r = 0; r < reduced.rows(); ++r)
        for (Eigen::Index c = 0; c < reduced.cols(); ++c)
          if (r != c) CHECK(std::abs(reduced(r, c)) < 1e-13);
    }
  }
}

TEST_CASE("both reduced spectra of a pure composite state coincide") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    const int na = 2 + trial % 3;
    const int nb = 2 + trial % 2;
    DensityMatrix rho = from_pure(oracle::random_pure(na * nb, rng), BasisTag::product(na, nb));
    Eigen::VectorXd ev_a = hermitian_eigenvalues(partial_trace(rho, Side::A).matrix());
    Eigen::VectorXd ev_b = hermitian_eigenvalues(partial_trace(rho, Side::B).matrix());
    std::vector<double> nz_a, nz_b;
    for (Eigen::Index i = 0; i < ev_a.size(); ++i)
      if (ev_a(i) > 1e-10) nz_a.push_back(ev_a(i));
    for (Eigen::Index i = 0; i < ev_b.size(); ++i)
      if (ev_b(i) > 1e-10) nz_b.push_back(ev_b(i));
    REQUIRE(nz_a.size() == nz_b.size());
    for (std::size_t i = 0; i < nz_a.size(); ++i)
      CHECK(std::abs(nz_a[i] - nz_b[i]) < 1e-10);
  }
}

TEST_CASE("irrep-diagonal state validation") {
  CouplingScheme scheme(half(2), half(1));
  CHECK_THROWS_AS(IrrepDiagonalState(scheme, {{{half(1), half(1)}, 0.5}}), InvalidStateError);
  CHECK_THROWS_AS(IrrepDiagonalState(scheme, {{{half(1), half(1)}, -0.2},
                                              {{half(1), half(-1)}, 1.2}}),
                  InvalidStateError);
  CHECK_THROWS_AS(IrrepDiagonalState(scheme, {{{half(5), half(1)}, 1.0}}), std::invalid_argument);
}

TEST_CASE("basis tags guard conversions") {
  CHECK_THROWS_AS(BasisTag::single(3).scheme(), std::invalid_argument);
  CouplingScheme scheme(half(2), half(1));
  DensityMatrix irrep_state(Matrix::Identity(6, 6) / 6.0, BasisTag::irrep(scheme));
  DensityMatrix converted = to_product_basis(irrep_state);
  CHECK(converted.tag() == BasisTag::product(scheme));
  CHECK(approx_equal(converted.matrix(), Matrix::Identity(6, 6) / 6.0, 1e-12));
  CHECK_THROWS_AS(to_product_basis(converted), std::invalid_argument);
}
