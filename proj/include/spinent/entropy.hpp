#pragma once

#include <span>

#include "spinent/states.hpp"

namespace spinent {

// Entropies in bits for one composite state and its two sides, with the
// mixing lower bounds and the excess test. The excess of a side entropy over
// the whole-system entropy certifies entanglement; the converse direction is
// not promised and is deliberately not asserted anywhere.
struct EntropyReport {
  double s_sys = 0.0;
  double s_a = 0.0;
  double s_b = 0.0;
  double lower_bound_a = 0.0;
  double lower_bound_b = 0.0;
  bool witness_fired = false;
};

// -sum p log2 p with 0 log 0 := 0. Entries must be >= 0 (tiny negative noise
// above -1e-12 is clamped) and sum to 1 within 1e-9.
double shannon_entropy(std::span<const double> p);

inline double binary_entropy(double p) {
  const double q[2] = {p, 1.0 - p};
  return shannon_entropy(q);
}

// Shannon entropy of the eigenvalue spectrum; eigenvalues in [-1e-10, 0) are
// clamped to zero.
double von_neumann_entropy(const DensityMatrix& rho);

// Entropy of either reduced side of the pure coupled state (j, mj); the two
// sides agree by construction.
double entanglement_entropy_pure(const CouplingScheme& scheme, HalfInt j, HalfInt mj);

// Report for an irrep-diagonal state: system entropy from the weights, side
// entropies from the reduced magnetic distributions, mixing lower bounds
// sum_w S_pure, and the excess test at witness_tol.
EntropyReport entropy_report(const IrrepDiagonalState& state, double witness_tol = 1e-9);

// Report for a product-basis matrix: all three entropies are von Neumann
// entropies (reduced sides via partial trace). The mixing bounds need the
// coupled decomposition, so this route reports the trivial bound 0.
EntropyReport entropy_report(const DensityMatrix& rho, double witness_tol = 1e-9);

}  // namespace spinent
