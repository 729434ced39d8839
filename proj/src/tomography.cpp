#include "spinent/tomography.hpp"

#include <cmath>

namespace spinent {

namespace {

// Orthonormal basis of Hermitian N x N matrices under the Frobenius inner
// product. Index 0 is I/sqrt(N); the rest are traceless.
std::vector<Matrix> hermitian_basis(int n) {
  std::vector<Matrix> basis;
  basis.reserve(static_cast<std::size_t>(n) * n);
  basis.push_back(Matrix::Identity(n, n) / std::sqrt(static_cast<double>(n)));
  for (int d = 1; d < n; ++d) {
    Matrix m = Matrix::Zero(n, n);
    for (int k = 0; k < d; ++k) m(k, k) = 1.0;
    m(d, d) = -static_cast<double>(d);
    basis.push_back(m / std::sqrt(static_cast<double>(d) * (d + 1)));
  }
  const double r = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Matrix sym = Matrix::Zero(n, n);
      sym(i, j) = r;
      sym(j, i) = r;
      basis.push_back(sym);
      Matrix asym = Matrix::Zero(n, n);
      asym(i, j) = Complex(0.0, r);
      asym(j, i) = Complex(0.0, -r);
      basis.push_back(asym);
    }
  return basis;
}

// Real coordinates of a Hermitian matrix in the basis above.
Eigen::VectorXd hermitian_coords(const Matrix& m, const std::vector<Matrix>& basis) {
  Eigen::VectorXd coords(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t q = 0; q < basis.size(); ++q)
    coords(static_cast<Eigen::Index>(q)) = (basis[q] * m).trace().real();
  return coords;
}

Eigen::MatrixXd design_matrix(const ObservableFamily& family, const std::vector<Matrix>& basis) {
  Eigen::MatrixXd design(static_cast<Eigen::Index>(family.members.size()),
                         static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < family.members.size(); ++k)
    design.row(static_cast<Eigen::Index>(k)) = hermitian_coords(family.members[k].second, basis);
  return design;
}

int svd_rank(const Eigen::MatrixXd& m, double rel_tol) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  const double cut = rel_tol * sv(0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++rank;
  return rank;
}

bool parallel_direction(const Matrix& a, const Matrix& b) {
  const double na = a.norm();
  const double nb = b.norm();
  if (na < 1e-14 || nb < 1e-14) return false;
  return std::abs((a.adjoint() * b).trace()) / (na * nb) > 1.0 - 1e-9;
}

void push_unique(ObservableFamily& family, const std::string& label, const Matrix& m) {
  if (m.cwiseAbs().maxCoeff() < 1e-14) return;
  for (const auto& [existing_label, existing] : family.members)
    if (parallel_direction(existing, m)) return;
  family.members.emplace_back(label, m);
}

}  // namespace

DetectorSet::DetectorSet(std::vector<Matrix> projectors, std::vector<std::string> labels,
                         double tol)
    : dim_(0), projectors_(std::move(projectors)), labels_(std::move(labels)) {
  if (projectors_.empty()) throw std::invalid_argument("detector set is empty");
  dim_ = static_cast<int>(projectors_.front().rows());
  if (labels_.size() != projectors_.size())
    throw std::invalid_argument("detector set needs one label per projector");
  Matrix sum = Matrix::Zero(dim_, dim_);
  for (std::size_t k = 0; k < projectors_.size(); ++k) {
    const Matrix& d = projectors_[k];
    if (d.rows() != dim_ || d.cols() != dim_)
      throw std::invalid_argument("detector projectors must share one dimension");
    if (std::abs(d.trace().real() - 1.0) > tol || std::abs(d.trace().imag()) > tol)
      throw InvalidStateError("detector " + labels_[k] + " is not a unit-trace projector");
    for (std::size_t n = 0; n < projectors_.size(); ++n) {
      const Matrix expected = (k == n) ? d : Matrix::Zero(dim_, dim_);
      if (!approx_equal(d * projectors_[n], expected, tol))
        throw InvalidStateError("detectors " + labels_[k] + " and " + labels_[n] +
                                " violate orthogonal purity");
    }
    sum += d;
  }
  if (!approx_equal(sum, Matrix::Identity(dim_, dim_), tol))
    throw InvalidStateError("detector set does not resolve the identity");
}

std::vector<double> DetectorSet::probabilities(const DensityMatrix& rho) const {
  if (rho.dim() != dim_) throw std::invalid_argument("state dimension does not match detectors");
  std::vector<double> p;
  p.reserve(projectors_.size());
  for (const Matrix& d : projectors_) p.push_back((d * rho.matrix()).trace().real());
  return p;
}

DetectorSet detector_set_from_basis(const Matrix& columns, std::vector<std::string> labels) {
  if (columns.rows() != columns.cols())
    throw std::invalid_argument("detector basis must be a square column set");
  const int n = static_cast<int>(columns.rows());
  if (!approx_equal(columns.adjoint() * columns, Matrix::Identity(n, n), 1e-10))
    throw std::invalid_argument("detector basis columns are not orthonormal");
  std::vector<Matrix> projectors;
  projectors.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    Vector v = columns.col(k);
    projectors.push_back(v * v.adjoint());
  }
  if (labels.empty())
    for (int k = 1; k <= n; ++k) labels.push_back("d" + std::to_string(k));
  return DetectorSet(std::move(projectors), std::move(labels));
}

ValuedDetectors eigen_detectors(const Matrix& observable, double tol) {
  if (!is_hermitian(observable, tol))
    throw std::invalid_argument("eigen detectors require a Hermitian observable");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(observable);
  if (solver.info() != Eigen::Success)
    throw NumericalError("eigendecomposition failed for observable");
  DetectorSet detectors = detector_set_from_basis(solver.eigenvectors());
  std::vector<double> values(solver.eigenvalues().data(),
                             solver.eigenvalues().data() + solver.eigenvalues().size());
  return {std::move(detectors), std::move(values)};
}

Matrix observable_from_values(const DetectorSet& detectors, std::span<const double> values) {
  if (static_cast<int>(values.size()) != detectors.size())
    throw std::invalid_argument("need exactly one value per detector");
  Matrix out = Matrix::Zero(detectors.dim(), detectors.dim());
  for (int k = 0; k < detectors.size(); ++k) out += values[static_cast<std::size_t>(k)] * detectors.projector(k);
  return out;
}

ObservableFamily ladder_observable_family(const SpinSpace& space) {
  const int n = space.dim;
  ObservableFamily family;
  family.dim = n;
  const Matrix sz = make_sz(space);
  Matrix sz_pow = Matrix::Identity(n, n);
  std::vector<Matrix> sz_powers;
  for (int k = 0; k < n; ++k) {
    sz_powers.push_back(sz_pow);
    push_unique(family, "Sz^" + std::to_string(k), sz_pow);
    sz_pow = sz_pow * sz;
  }
  for (int m = 1; m < n; ++m) {
    const Matrix sp_m = ladder_power(space, m, LadderSign::Plus);
    for (int k = 0; k < n; ++k) {
      const Matrix mono = sp_m * sz_powers[static_cast<std::size_t>(k)];
      const std::string tag = "S+^" + std::to_string(m) + " Sz^" + std::to_string(k);
      push_unique(family, "re[" + tag + "]", mono + mono.adjoint());
      push_unique(family, "im[" + tag + "]", Complex(0.0, 1.0) * (mono - mono.adjoint()));
    }
  }
  return family;
}

ObservableFamily product_observable_family(const SpinSpace& a, const SpinSpace& b) {
  const ObservableFamily fa = ladder_observable_family(a);
  const ObservableFamily fb = ladder_observable_family(b);
  ObservableFamily family;
  family.dim = a.dim * b.dim;
  for (const auto& [la, ma] : fa.members)
    for (const auto& [lb, mb] : fb.members)
      family.members.emplace_back("A[" + la + "]*B[" + lb + "]", kron(ma, mb));
  return family;
}

int family_rank(const ObservableFamily& family, double rel_tol) {
  return svd_rank(design_matrix(family, hermitian_basis(family.dim)), rel_tol);
}

double expectation(const Matrix& obs, const DensityMatrix& rho) {
  if (obs.rows() != rho.dim() || obs.cols() != rho.dim())
    throw std::invalid_argument("observable dimension does not match state");
  if (!is_hermitian(obs, 1e-10))
    throw std::invalid_argument("expectation requires a Hermitian observable");
  const Complex tr = (obs * rho.matrix()).trace();
  if (std::abs(tr.imag()) > 1e-10)
    throw NumericalError("expectation value has a non-vanishing imaginary part");
  return tr.real();
}

ReconstructionResult reconstruct_state(const ObservableFamily& family,
                                       std::span<const double> averages, const BasisTag& tag,
                                       double flag_threshold) {
  const int n = family.dim;
  if (tag.dim() != n) throw std::invalid_argument("basis tag does not match family dimension");
  if (averages.size() != family.members.size())
    throw std::invalid_argument("need exactly one average per family member");

  const std::vector<Matrix> basis = hermitian_basis(n);
  const Eigen::MatrixXd design = design_matrix(family, basis);

  const int needed = n * n;
  const int rank = svd_rank(design, 1e-10);
  if (rank < needed)
    throw NumericalError("observable family spans rank " + std::to_string(rank) + " of " +
                         std::to_string(needed) + " required for dimension " + std::to_string(n));

  // Unit trace as a hard constraint: rho = I/n + traceless part, so only the
  // traceless coordinates are solved for.
  const double x0 = 1.0 / std::sqrt(static_cast<double>(n));
  Eigen::VectorXd rhs(static_cast<Eigen::Index>(averages.size()));
  for (std::size_t k = 0; k < averages.size(); ++k)
    rhs(static_cast<Eigen::Index>(k)) = averages[k] - design(static_cast<Eigen::Index>(k), 0) * x0;
  const Eigen::MatrixXd traceless = design.rightCols(design.cols() - 1);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(traceless, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(1e-10);
  const Eigen::VectorXd x = svd.solve(rhs);

  Matrix rho_ls = x0 * basis[0];
  for (Eigen::Index q = 0; q < x.size(); ++q)
    rho_ls += x(q) * basis[static_cast<std::size_t>(q) + 1];

  // Positivity repair: clip negative eigenvalues, renormalize the trace.
  Eigen::SelfAdjointEigenSolver<Matrix> eig(rho_ls);
  if (eig.info() != Eigen::Success) throw NumericalError("eigendecomposition failed in repair");
  Eigen::VectorXd ev = eig.eigenvalues().cwiseMax(0.0);
  const double total = ev.sum();
  if (total <= 0.0) throw NumericalError("positivity repair collapsed the state");
  ev /= total;
  Matrix rho_psd = eig.eigenvectors() * ev.asDiagonal() * eig.eigenvectors().adjoint();

  ReconstructionResult result{DensityMatrix(rho_psd, tag), rank,
                              (rho_psd - rho_ls).norm(), false};
  result.projection_flagged = result.projection_distance > flag_threshold;
  return result;
}

ReconstructionResult reconstruct_state(const ObservableFamily& family,
                                       std::span<const double> averages, double flag_threshold) {
  return reconstruct_state(family, averages, BasisTag::single(family.dim), flag_threshold);
}

double covariance_theoretical(const DensityMatrix& rho_sys, const Matrix& obs_a,
                              const Matrix& obs_b) {
  if (rho_sys.tag().kind != BasisTag::Kind::Product)
    throw std::invalid_argument("covariance requires a product-basis state, got " +
                                rho_sys.tag().str());
  const int na = rho_sys.tag().na;
  const int nb = rho_sys.tag().nb;
  if (obs_a.rows() != na || obs_a.cols() != na || obs_b.rows() != nb || obs_b.cols() != nb)
    throw std::invalid_argument("observable dimensions do not match the state's sides");
  const Matrix ia = Matrix::Identity(na, na);
  const Matrix ib = Matrix::Identity(nb, nb);
  const double joint = expectation(kron(obs_a, obs_b), rho_sys);
  const double mean_a = expectation(kron(obs_a, ib), rho_sys);
  const double mean_b = expectation(kron(ia, obs_b), rho_sys);
  return joint - mean_a * mean_b;
}

CovarianceMatrix covariance_empirical(const std::vector<MeasurementSeries>& grid, int na, int nb,
                                      std::vector<std::string> labels_a,
                                      std::vector<std::string> labels_b) {
  if (na < 1 || nb < 1 || grid.size() != static_cast<std::size_t>(na) * nb)
    throw std::invalid_argument("covariance grid needs one series per (a, b) cell");
  if (labels_a.empty())
    for (int k = 1; k <= na; ++k) labels_a.push_back("a_" + std::to_string(k));
  if (labels_b.empty())
    for (int m = 1; m <= nb; ++m) labels_b.push_back("b_" + std::to_string(m));

  CovarianceMatrix cov{std::move(labels_a), std::move(labels_b), Eigen::MatrixXd::Zero(na, nb)};
  for (int k = 1; k <= na; ++k)
    for (int m = 1; m <= nb; ++m) {
      const MeasurementSeries& series = grid[static_cast<std::size_t>(k - 1) * nb + (m - 1)];
      if (series.shots <= 0) throw std::invalid_argument("covariance series has no shots");
      if (series.counts.size() != static_cast<std::size_t>(na) * nb)
        throw std::invalid_argument("covariance series counts do not form an na x nb table");
      const double full = static_cast<double>(series.shots);
      double joint = 0.0, marg_a = 0.0, marg_b = 0.0;
      for (int kk = 1; kk <= na; ++kk)
        for (int mm = 1; mm <= nb; ++mm) {
          const double c =
              static_cast<double>(series.counts[static_cast<std::size_t>(kk - 1) * nb + (mm - 1)]);
          if (kk == k && mm == m) joint = c;
          if (kk == k) marg_a += c;
          if (mm == m) marg_b += c;
        }
      cov.entries(k - 1, m - 1) = joint / full - (marg_a / full) * (marg_b / full);
    }
  return cov;
}

double covariance_of_observables(const CovarianceMatrix& cov, std::span<const double> values_a,
                                 std::span<const double> values_b) {
  if (static_cast<Eigen::Index>(values_a.size()) != cov.entries.rows() ||
      static_cast<Eigen::Index>(values_b.size()) != cov.entries.cols())
    throw std::invalid_argument("observable values do not match the covariance grid");
  double total = 0.0;
  for (Eigen::Index k = 0; k < cov.entries.rows(); ++k)
    for (Eigen::Index m = 0; m < cov.entries.cols(); ++m)
      total += values_a[static_cast<std::size_t>(k)] * values_b[static_cast<std::size_t>(m)] *
               cov.entries(k, m);
  return total;
}

}  // namespace spinent
