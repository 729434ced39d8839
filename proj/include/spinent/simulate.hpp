#pragma once

#include <cstdint>

#include "spinent/entropy.hpp"
#include "spinent/tomography.hpp"

namespace spinent {

// Deterministic per-task seed stream: every measurement series derives its
// own seed from the master seed and its grid position, so series are
// independent and the schedule may run in any order.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b);

// Multinomial draw of `shots` detector clicks with Born probabilities
// p_k = tr(D_k rho), by inverse CDF over the cell probabilities. Identical
// (inputs, seed) give identical counts.
MeasurementSeries sample_counts(const DensityMatrix& rho, const DetectorSet& detectors,
                                long long shots, std::uint64_t seed);

// All pairwise products D_a (x) D_b with labels "a_n&b_m" and cell index
// k = (n-1)*nb + m.
DetectorSet composite_detectors(const DetectorSet& da, const DetectorSet& db);

// One independent series per covariance cell, seeded from (seed, k, m); the
// (k, m) entry is estimated from its own series only.
CovarianceMatrix run_covariance_series(const DensityMatrix& rho_sys, const DetectorSet& da,
                                       const DetectorSet& db, long long shots_per_series,
                                       std::uint64_t seed);

struct PipelineConfig {
  long long shots = 100000;
  std::uint64_t seed = 0;
  double flag_threshold = 1e-6;
};

struct PipelineResult {
  DensityMatrix reconstructed;
  EntropyReport report;
  CovarianceMatrix covariance;
  long long shots_used = 0;
  std::uint64_t seed = 0;
  int rank = 0;
  double projection_distance = 0.0;
};

// End-to-end run on a product-basis state: sample one series per member of
// the informationally complete product observable family (measured through
// composite eigenbasis detectors), reconstruct the state, reduce it, report
// entropies and the excess test, and estimate the detector covariance grid
// on the magnetic product basis.
PipelineResult run_pipeline(const DensityMatrix& rho_true, const PipelineConfig& config);

}  // namespace spinent
