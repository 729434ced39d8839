#include "spinent/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace spinent {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform double in [0, 1) with engine-defined bits only, so sampling does
// not depend on the standard library's distribution implementation.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
  const std::uint64_t golden = 0x9e3779b97f4a7c15ULL;
  return splitmix64(splitmix64(master + golden * (a + 1)) + golden * (b + 1));
}

MeasurementSeries sample_counts(const DensityMatrix& rho, const DetectorSet& detectors,
                                long long shots, std::uint64_t seed) {
  if (shots <= 0) throw std::invalid_argument("sampling requires a positive shot count");
  std::vector<double> p = detectors.probabilities(rho);
  double total = 0.0;
  for (double& v : p) {
    if (v < -1e-9) throw InvalidStateError("detector probability is negative");
    if (v < 0.0) v = 0.0;
    total += v;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw InvalidStateError("detector probabilities do not sum to 1");

  std::vector<double> cumulative(p.size());
  double acc = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    acc += p[k];
    cumulative[k] = acc;
  }
  cumulative.back() = 1.0;

  MeasurementSeries series;
  series.detector_labels = detectors.labels();
  series.counts.assign(p.size(), 0);
  series.shots = shots;
  series.seed = seed;
  std::mt19937_64 rng(seed);
  for (long long shot = 0; shot < shots; ++shot) {
    const double u = uniform01(rng);
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    ++series.counts[static_cast<std::size_t>(it - cumulative.begin())];
  }
  return series;
}

DetectorSet composite_detectors(const DetectorSet& da, const DetectorSet& db) {
  std::vector<Matrix> projectors;
  std::vector<std::string> labels;
  projectors.reserve(static_cast<std::size_t>(da.size()) * db.size());
  for (int n = 1; n <= da.size(); ++n)
    for (int m = 1; m <= db.size(); ++m) {
      projectors.push_back(kron(da.projector(n - 1), db.projector(m - 1)));
      labels.push_back("a_" + std::to_string(n) + "&b_" + std::to_string(m));
    }
  return DetectorSet(std::move(projectors), std::move(labels));
}

CovarianceMatrix run_covariance_series(const DensityMatrix& rho_sys, const DetectorSet& da,
                                       const DetectorSet& db, long long shots_per_series,
                                       std::uint64_t seed) {
  const DetectorSet composite = composite_detectors(da, db);
  std::vector<MeasurementSeries> grid;
  grid.reserve(static_cast<std::size_t>(da.size()) * db.size());
  for (int k = 1; k <= da.size(); ++k)
    for (int m = 1; m <= db.size(); ++m)
      grid.push_back(sample_counts(rho_sys, composite, shots_per_series,
                                   derive_seed(seed, static_cast<std::uint64_t>(k),
                                               static_cast<std::uint64_t>(m))));
  return covariance_empirical(grid, da.size(), db.size(), da.labels(), db.labels());
}

PipelineResult run_pipeline(const DensityMatrix& rho_true, const PipelineConfig& config) {
  if (rho_true.tag().kind != BasisTag::Kind::Product)
    throw std::invalid_argument("pipeline requires a product-basis state, got " +
                                rho_true.tag().str());
  const SpinSpace space_a(rho_true.tag().na);
  const SpinSpace space_b(rho_true.tag().nb);
  const ObservableFamily family = product_observable_family(space_a, space_b);

  // One independent series per family member, measured in its eigenbasis.
  std::vector<double> averages;
  averages.reserve(family.members.size());
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    const ValuedDetectors vd = eigen_detectors(family.members[i].second);
    const MeasurementSeries series = sample_counts(
        rho_true, vd.detectors, config.shots, derive_seed(config.seed, 1, i));
    double avg = 0.0;
    for (std::size_t k = 0; k < vd.values.size(); ++k)
      avg += vd.values[k] * static_cast<double>(series.counts[k]);
    averages.push_back(avg / static_cast<double>(series.shots));
  }

  ReconstructionResult rec =
      reconstruct_state(family, averages, rho_true.tag(), config.flag_threshold);

  std::vector<std::string> labels_a, labels_b;
  for (int k = 1; k <= space_a.dim; ++k) labels_a.push_back("a_" + std::to_string(k));
  for (int m = 1; m <= space_b.dim; ++m) labels_b.push_back("b_" + std::to_string(m));
  const DetectorSet da =
      detector_set_from_basis(Matrix::Identity(space_a.dim, space_a.dim), labels_a);
  const DetectorSet db =
      detector_set_from_basis(Matrix::Identity(space_b.dim, space_b.dim), labels_b);
  CovarianceMatrix cov =
      run_covariance_series(rho_true, da, db, config.shots, derive_seed(config.seed, 2, 0));

  PipelineResult result{rec.state,   entropy_report(rec.state), std::move(cov),
                        config.shots, config.seed,              rec.rank,
                        rec.projection_distance};
  return result;
}

}  // namespace spinent
