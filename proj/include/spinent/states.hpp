#pragma once

#include <map>
#include <string>
#include <vector>

#include "spinent/coupling.hpp"
#include "spinent/matrix.hpp"

namespace spinent {

// Basis a density matrix is expressed in. Cross-basis arithmetic is rejected;
// conversions are explicit. For bipartite tags the side dimensions are
// (na, nb); a single-space tag uses (n, 1).
struct BasisTag {
  enum class Kind { Product, Irrep, Single };

  Kind kind = Kind::Single;
  int na = 1;
  int nb = 1;

  static BasisTag product(int na, int nb);
  static BasisTag product(const CouplingScheme& scheme);
  static BasisTag irrep(const CouplingScheme& scheme);
  static BasisTag single(int n);

  int dim() const { return na * nb; }
  bool bipartite() const { return kind != Kind::Single; }
  CouplingScheme scheme() const;  // throws for Single
  std::string str() const;
  bool operator==(const BasisTag&) const = default;
};

// Hermitian, positive-semidefinite, unit-trace matrix with its basis tag.
// The validity triple is checked on construction (tolerance 1e-10), so every
// instance in circulation is a physical state.
class DensityMatrix {
 public:
  DensityMatrix(Matrix m, BasisTag tag, double tol = 1e-10);

  const Matrix& matrix() const { return matrix_; }
  const BasisTag& tag() const { return tag_; }
  int dim() const { return static_cast<int>(matrix_.rows()); }

 private:
  Matrix matrix_;
  BasisTag tag_;
};

// Mixture that is diagonal in the coupled basis: one probability per (j, mj).
// Missing labels carry weight zero.
struct IrrepDiagonalState {
  CouplingScheme scheme;
  std::map<IrrepLabel, double> weights;

  IrrepDiagonalState(CouplingScheme scheme_in, std::map<IrrepLabel, double> weights_in);
};

// Diagonal of a reduced density matrix over the magnetic levels of one side,
// ascending m in unit steps starting at twice_m_min/2.
struct SubsystemDistribution {
  Side side = Side::A;
  int twice_m_min = 0;
  std::vector<double> probs;

  double prob(HalfInt m) const;
};

// Normalized outer product of an amplitude vector; rank 1.
DensityMatrix from_pure(const Vector& amplitudes, const BasisTag& tag);
DensityMatrix from_pure(const Vector& amplitudes);

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b);

// Convex combination. Weights must be non-negative and sum to 1 within 1e-9;
// all terms must share one basis tag.
DensityMatrix mixture(const std::vector<std::pair<double, DensityMatrix>>& terms);

// Reduced state of one side of a product-basis state, by direct index
// contraction over the other side.
DensityMatrix partial_trace(const DensityMatrix& rho, Side keep);

// Reduced magnetic distribution of an irrep-diagonal state through the exact
// coefficient sums; the fast path paired with the brute-force partial trace.
SubsystemDistribution reduced_distribution(const IrrepDiagonalState& state, Side side);

// Full product-basis matrix of an irrep-diagonal state.
DensityMatrix irrep_to_full(const IrrepDiagonalState& state);

// Explicit conversion of an irrep-tagged matrix to the product basis.
DensityMatrix to_product_basis(const DensityMatrix& rho);

// Two-qubit fixtures in the product basis: the antisymmetric singlet and the
// aligned equal superposition.
DensityMatrix make_epr();
DensityMatrix make_cat();

}  // namespace spinent
