#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace spinent {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Default absolute tolerance for entrywise matrix comparisons.
inline constexpr double kDefaultTol = 1e-12;

// A state object failed a physical-validity check (hermiticity, trace,
// positivity, probability normalization).
struct InvalidStateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A numerical procedure could not deliver its contract (rank deficiency,
// non-real expectation value, ...).
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Entrywise |a-b| <= tol. Shapes must match.
bool approx_equal(const Matrix& a, const Matrix& b, double tol = kDefaultTol);

bool is_hermitian(const Matrix& m, double tol);
bool is_unitary(const Matrix& m, double tol);

Matrix kron(const Matrix& a, const Matrix& b);

// Ascending eigenvalues of a Hermitian matrix.
Eigen::VectorXd hermitian_eigenvalues(const Matrix& m);

// Sum of |eigenvalues| of a Hermitian matrix.
double trace_norm_hermitian(const Matrix& m);

}  // namespace spinent
