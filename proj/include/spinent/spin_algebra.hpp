#pragma once

#include <map>
#include <utility>

#include "spinent/matrix.hpp"

namespace spinent {

// Which half of a bipartite system an operation refers to.
enum class Side { A, B };

// N-dimensional magnetic-sublevel space carrying momentum j = (N-1)/2.
// Basis index n = 1..N corresponds to magnetic number m = n - (N+1)/2,
// ascending; all matrices in the library share this ordering.
struct SpinSpace {
  int dim;

  explicit SpinSpace(int n) : dim(n) {
    if (n < 1) throw std::invalid_argument("SpinSpace dimension must be >= 1");
  }
  int twice_j() const { return dim - 1; }
  // magnetic number of the 1-based basis index n
  double magnetic(int n) const { return n - 0.5 * (dim + 1); }
};

enum class LadderSign { Plus, Minus };

// Diagonal momentum operator with entries n - (N+1)/2, n = 1..N.
Matrix make_sz(const SpinSpace& space);

// Raising operator: |n> -> sqrt(n(N-n)) |n+1>.
Matrix make_s_plus(const SpinSpace& space);

// Lowering operator: |n> -> sqrt((n-1)(N-n+1)) |n-1>; adjoint of make_s_plus.
Matrix make_s_minus(const SpinSpace& space);

// m-fold ladder power by repeated multiplication. Powers beyond N-1 are the
// zero matrix and are returned as such.
Matrix ladder_power(const SpinSpace& space, int m, LadderSign sign);

// Operator polynomial sum_{m,n} c[m,n] S+^m S-^n. Exponents must be <= N-1.
Matrix operator_polynomial(const SpinSpace& space,
                           const std::map<std::pair<int, int>, Complex>& coefficients);

// 2x2 unitary pair used by the aligned-superposition invariance property:
// side A gets (cos t, e^{i p} sin t; -e^{-i p} sin t, cos t), side B the
// phase-conjugated partner. Applying U_A (x) U_B leaves the aligned
// superposition (|00>+|11>)/sqrt(2) fixed for every (theta, phi).
Matrix paired_u2_rotation(double theta, double phi, Side side);

}  // namespace spinent
