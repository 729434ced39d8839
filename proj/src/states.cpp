#include "spinent/states.hpp"

#include <cmath>

namespace spinent {

BasisTag BasisTag::product(int na, int nb) {
  if (na < 1 || nb < 1) throw std::invalid_argument("product tag needs positive dimensions");
  return {Kind::Product, na, nb};
}

BasisTag BasisTag::product(const CouplingScheme& scheme) {
  return product(scheme.na(), scheme.nb());
}

BasisTag BasisTag::irrep(const CouplingScheme& scheme) {
  return {Kind::Irrep, scheme.na(), scheme.nb()};
}

BasisTag BasisTag::single(int n) {
  if (n < 1) throw std::invalid_argument("single tag needs a positive dimension");
  return {Kind::Single, n, 1};
}

CouplingScheme BasisTag::scheme() const {
  if (!bipartite()) throw std::invalid_argument("single-space tag carries no coupling scheme");
  return CouplingScheme(half(na - 1), half(nb - 1));
}

std::string BasisTag::str() const {
  switch (kind) {
    case Kind::Product: return "product(" + std::to_string(na) + "x" + std::to_string(nb) + ")";
    case Kind::Irrep: return "irrep(" + std::to_string(na) + "x" + std::to_string(nb) + ")";
    case Kind::Single: return "single(" + std::to_string(na) + ")";
  }
  return {};
}

DensityMatrix::DensityMatrix(Matrix m, BasisTag tag, double tol)
    : matrix_(std::move(m)), tag_(tag) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() < 1)
    throw InvalidStateError("density matrix must be square and non-empty");
  if (matrix_.rows() != tag_.dim())
    throw InvalidStateError("density matrix dimension does not match its basis tag " + tag_.str());
  if (!is_hermitian(matrix_, tol))
    throw InvalidStateError("density matrix is not Hermitian within tolerance");
  if (std::abs(matrix_.trace().real() - 1.0) > tol || std::abs(matrix_.trace().imag()) > tol)
    throw InvalidStateError("density matrix trace differs from 1");
  // symmetrize before the eigenvalue check so benign asymmetry noise cannot
  // produce complex eigenvalues
  matrix_ = 0.5 * (matrix_ + matrix_.adjoint().eval());
  if (hermitian_eigenvalues(matrix_).minCoeff() < -tol)
    throw InvalidStateError("density matrix has a negative eigenvalue beyond tolerance");
}

IrrepDiagonalState::IrrepDiagonalState(CouplingScheme scheme_in,
                                       std::map<IrrepLabel, double> weights_in)
    : scheme(scheme_in), weights(std::move(weights_in)) {
  double total = 0.0;
  for (const auto& [label, w] : weights) {
    cg_table(scheme).subsystem_weight(label.j, label.mj, Side::A, scheme.l);  // range check
    if (w < 0.0) throw InvalidStateError("irrep-diagonal weight is negative");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw InvalidStateError("irrep-diagonal weights do not sum to 1");
}

double SubsystemDistribution::prob(HalfInt m) const {
  const int idx = (m.twice - twice_m_min) / 2;
  if ((m.twice - twice_m_min) % 2 != 0 || idx < 0 || idx >= static_cast<int>(probs.size()))
    throw std::invalid_argument("magnetic number outside this distribution");
  return probs[static_cast<std::size_t>(idx)];
}

DensityMatrix from_pure(const Vector& amplitudes, const BasisTag& tag) {
  const double norm = amplitudes.norm();
  if (norm < 1e-14) throw std::invalid_argument("pure state requires a nonzero amplitude vector");
  Vector v = amplitudes / norm;
  return DensityMatrix(v * v.adjoint(), tag);
}

DensityMatrix from_pure(const Vector& amplitudes) {
  return from_pure(amplitudes, BasisTag::single(static_cast<int>(amplitudes.size())));
}

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix(kron(a.matrix(), b.matrix()), BasisTag::product(a.dim(), b.dim()));
}

DensityMatrix mixture(const std::vector<std::pair<double, DensityMatrix>>& terms) {
  if (terms.empty()) throw std::invalid_argument("mixture of zero terms");
  const BasisTag tag = terms.front().second.tag();
  double total = 0.0;
  Matrix sum = Matrix::Zero(terms.front().second.dim(), terms.front().second.dim());
  for (const auto& [w, rho] : terms) {
    if (w < 0.0) throw std::invalid_argument("mixture weight is negative");
    if (!(rho.tag() == tag))
      throw std::invalid_argument("mixture requires one common basis tag, got " + tag.str() +
                                  " and " + rho.tag().str());
    total += w;
    sum += w * rho.matrix();
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw std::invalid_argument("mixture weights must sum to 1");
  return DensityMatrix(sum, tag);
}

DensityMatrix partial_trace(const DensityMatrix& rho, Side keep) {
  if (rho.tag().kind != BasisTag::Kind::Product)
    throw std::invalid_argument("partial trace requires a product-basis state, got " +
                                rho.tag().str());
  const int na = rho.tag().na;
  const int nb = rho.tag().nb;
  const Matrix& m = rho.matrix();
  if (keep == Side::A) {
    Matrix out = Matrix::Zero(na, na);
    for (int i = 0; i < na; ++i)
      for (int j = 0; j < na; ++j)
        for (int b = 0; b < nb; ++b) out(i, j) += m(i * nb + b, j * nb + b);
    return DensityMatrix(out, BasisTag::single(na));
  }
  Matrix out = Matrix::Zero(nb, nb);
  for (int a = 0; a < nb; ++a)
    for (int b = 0; b < nb; ++b)
      for (int i = 0; i < na; ++i) out(a, b) += m(i * nb + a, i * nb + b);
  return DensityMatrix(out, BasisTag::single(nb));
}

SubsystemDistribution reduced_distribution(const IrrepDiagonalState& state, Side side) {
  const CGTable& table = cg_table(state.scheme);
  const int t_kept = (side == Side::A) ? state.scheme.l.twice : state.scheme.s.twice;
  SubsystemDistribution dist;
  dist.side = side;
  dist.twice_m_min = -t_kept;
  dist.probs.assign(static_cast<std::size_t>(t_kept) + 1, 0.0);
  for (const auto& [label, w] : state.weights) {
    if (w == 0.0) continue;
    for (int tm = -t_kept; tm <= t_kept; tm += 2) {
      Rational coefficient = table.subsystem_weight(label.j, label.mj, side, half(tm));
      dist.probs[static_cast<std::size_t>((tm + t_kept) / 2)] += w * coefficient.to_double();
    }
  }
  return dist;
}

DensityMatrix irrep_to_full(const IrrepDiagonalState& state) {
  const Matrix u = coupling_unitary(state.scheme);
  const auto labels = irrep_labels(state.scheme);
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(state.scheme.dim());
  for (std::size_t r = 0; r < labels.size(); ++r) {
    auto it = state.weights.find(labels[r]);
    if (it != state.weights.end()) diag(static_cast<Eigen::Index>(r)) = it->second;
  }
  Matrix full = u.adjoint() * diag.asDiagonal() * u;
  return DensityMatrix(full, BasisTag::product(state.scheme));
}

DensityMatrix to_product_basis(const DensityMatrix& rho) {
  if (rho.tag().kind != BasisTag::Kind::Irrep)
    throw std::invalid_argument("basis conversion expects an irrep-tagged state, got " +
                                rho.tag().str());
  const Matrix u = coupling_unitary(rho.tag().scheme());
  return DensityMatrix(u.adjoint() * rho.matrix() * u, BasisTag::product(rho.tag().scheme()));
}

DensityMatrix make_epr() {
  Vector amps(4);
  amps << 0.0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0;
  return from_pure(amps, BasisTag::product(2, 2));
}

DensityMatrix make_cat() {
  Vector amps(4);
  amps << 1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0);
  return from_pure(amps, BasisTag::product(2, 2));
}

}  // namespace spinent
