#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "spinent/spin_algebra.hpp"
#include "spinent/states.hpp"

namespace spinent {

// Complete family of orthogonal rank-1 projectors. The three detector axioms
// (pairwise orthogonality, unit-trace projectors, resolution of identity) are
// verified on construction.
class DetectorSet {
 public:
  DetectorSet(std::vector<Matrix> projectors, std::vector<std::string> labels,
              double tol = 1e-10);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(projectors_.size()); }
  const Matrix& projector(int k) const { return projectors_.at(static_cast<std::size_t>(k)); }
  const std::vector<std::string>& labels() const { return labels_; }

  // Born probabilities p_k = tr(D_k rho).
  std::vector<double> probabilities(const DensityMatrix& rho) const;

 private:
  int dim_;
  std::vector<Matrix> projectors_;
  std::vector<std::string> labels_;
};

// Rank-1 projectors onto the columns of an orthonormal square matrix.
// Default labels are d1..dN.
DetectorSet detector_set_from_basis(const Matrix& columns,
                                    std::vector<std::string> labels = {});

// Eigenbasis detectors of a Hermitian observable together with the assigned
// eigenvalue of each detector, ascending.
struct ValuedDetectors {
  DetectorSet detectors;
  std::vector<double> values;
};
ValuedDetectors eigen_detectors(const Matrix& observable, double tol = 1e-10);

// Observable defined by assigning one value per detector: sum_k O_k D_k.
Matrix observable_from_values(const DetectorSet& detectors, std::span<const double> values);

// Labeled Hermitian observables over one space.
struct ObservableFamily {
  int dim = 0;
  std::vector<std::pair<std::string, Matrix>> members;
};

// Hermitian observables built from ladder monomials S+^m Sz^k: the symmetric
// and antisymmetric combinations of each monomial with its adjoint, plus the
// diagonal powers Sz^k. Zero and repeated directions are dropped. The family
// spans the full N^2-dimensional real space of Hermitian matrices.
ObservableFamily ladder_observable_family(const SpinSpace& space);

// All pairwise tensor products of two single-side families; spans the
// Hermitian space of the composite system.
ObservableFamily product_observable_family(const SpinSpace& a, const SpinSpace& b);

// Dimension of the real span of the family, from a rank-revealing
// decomposition of the design matrix (singular values above rel_tol times
// the largest).
int family_rank(const ObservableFamily& family, double rel_tol = 1e-10);

// tr(obs * rho). The observable must be Hermitian; the vanishing imaginary
// part of the trace is discarded.
double expectation(const Matrix& obs, const DensityMatrix& rho);

struct ReconstructionResult {
  DensityMatrix state;
  int rank = 0;
  // Frobenius distance moved by the positivity repair, and whether it
  // exceeded the caller's threshold (kept at 1e-6 for exact-input runs).
  double projection_distance = 0.0;
  bool projection_flagged = false;
};

// Solves the linear system tr(O_k rho) = average_k in the least-squares
// sense over Hermitian matrices with the unit trace built in as a hard
// constraint, then projects onto the positive cone (eigenvalue clipping and
// renormalization). Throws NumericalError with a rank diagnostic when the
// family does not span the Hermitian space.
ReconstructionResult reconstruct_state(const ObservableFamily& family,
                                       std::span<const double> averages, const BasisTag& tag,
                                       double flag_threshold = 1e-6);
ReconstructionResult reconstruct_state(const ObservableFamily& family,
                                       std::span<const double> averages,
                                       double flag_threshold = 1e-6);

// Covariance of two single-side observables on a product-basis state:
// <A (x) B> - <A><B>.
double covariance_theoretical(const DensityMatrix& rho_sys, const Matrix& obs_a,
                              const Matrix& obs_b);

// One independent series of detector counts. For composite detector sets the
// counts enumerate the (a, b) grid row-major.
struct MeasurementSeries {
  std::vector<std::string> detector_labels;
  std::vector<long long> counts;
  long long shots = 0;
  std::uint64_t seed = 0;
};

// Detector-indicator covariance grid; entry (k, m) estimates
// P(a_k & b_m) - P(a_k) P(b_m).
struct CovarianceMatrix {
  std::vector<std::string> labels_a;
  std::vector<std::string> labels_b;
  Eigen::MatrixXd entries;
};

// Empirical covariance from one series per grid cell, row-major
// (k-1)*nb + (m-1). Entry (k, m) uses only the joint table and marginals of
// its own series.
CovarianceMatrix covariance_empirical(const std::vector<MeasurementSeries>& grid, int na, int nb,
                                      std::vector<std::string> labels_a = {},
                                      std::vector<std::string> labels_b = {});

// Covariance of value-assigned observables from the indicator grid:
// sum_k sum_m a_k b_m c_{k,m}.
double covariance_of_observables(const CovarianceMatrix& cov, std::span<const double> values_a,
                                 std::span<const double> values_b);

}  // namespace spinent
