#include "spinent/spin_algebra.hpp"

#include <cmath>

namespace spinent {

Matrix make_sz(const SpinSpace& space) {
  const int n = space.dim;
  Matrix sz = Matrix::Zero(n, n);
  for (int k = 1; k <= n; ++k) sz(k - 1, k - 1) = space.magnetic(k);
  return sz;
}

Matrix make_s_plus(const SpinSpace& space) {
  const int n = space.dim;
  Matrix sp = Matrix::Zero(n, n);
  for (int k = 1; k < n; ++k) sp(k, k - 1) = std::sqrt(static_cast<double>(k) * (n - k));
  return sp;
}

Matrix make_s_minus(const SpinSpace& space) {
  const int n = space.dim;
  Matrix sm = Matrix::Zero(n, n);
  for (int k = 2; k <= n; ++k) sm(k - 2, k - 1) = std::sqrt(static_cast<double>(k - 1) * (n - k + 1));
  return sm;
}

Matrix ladder_power(const SpinSpace& space, int m, LadderSign sign) {
  if (m < 0) throw std::invalid_argument("ladder power must be non-negative");
  const Matrix step = (sign == LadderSign::Plus) ? make_s_plus(space) : make_s_minus(space);
  Matrix out = Matrix::Identity(space.dim, space.dim);
  for (int k = 0; k < m; ++k) out = step * out;
  return out;
}

Matrix operator_polynomial(const SpinSpace& space,
                           const std::map<std::pair<int, int>, Complex>& coefficients) {
  Matrix out = Matrix::Zero(space.dim, space.dim);
  for (const auto& [powers, c] : coefficients) {
    const auto [m, n] = powers;
    if (m < 0 || n < 0 || m > space.dim - 1 || n > space.dim - 1)
      throw std::invalid_argument("ladder exponent out of range for this space");
    out += c * (ladder_power(space, m, LadderSign::Plus) * ladder_power(space, n, LadderSign::Minus));
  }
  return out;
}

Matrix paired_u2_rotation(double theta, double phi, Side side) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double p = (side == Side::A) ? phi : -phi;
  Matrix u(2, 2);
  u(0, 0) = c;
  u(0, 1) = std::polar(s, p);
  u(1, 0) = -std::polar(s, -p);
  u(1, 1) = c;
  return u;
}

}  // namespace spinent
