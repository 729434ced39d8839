#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace spinent {

// Exact rational number, always stored gcd-reduced with positive denominator.
// Intermediate products use 128-bit arithmetic; the reduced result must fit
// in 64 bits or construction throws.
class Rational {
 public:
  Rational() = default;
  Rational(long long value) : num_(value), den_(1) {}  // NOLINT(runtime/explicit)
  Rational(long long num, long long den);

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;

 private:
  static Rational from_wide(__int128 num, __int128 den);

  long long num_ = 0;
  long long den_ = 1;
};

// Number of the form sign * sqrt(square) with square a non-negative rational.
// This is the exact form of Clebsch-Gordan coefficients; sums are only defined
// between values whose squares differ by a perfect rational square.
class SqrtRational {
 public:
  SqrtRational() = default;  // zero
  SqrtRational(int sign, Rational square);

  static SqrtRational sqrt_of(const Rational& r) { return SqrtRational(1, r); }

  int sign() const { return sign_; }
  const Rational& square() const { return square_; }
  bool is_zero() const { return sign_ == 0; }
  double value() const;

  SqrtRational operator-() const;
  SqrtRational operator*(const SqrtRational& o) const;
  // Exact scaling by a rational factor (folds the factor's sign in).
  SqrtRational scaled_by(const Rational& factor) const;
  // Throws std::logic_error when the two square parts are incommensurable.
  SqrtRational operator+(const SqrtRational& o) const;

  bool operator==(const SqrtRational& o) const {
    return sign_ == o.sign_ && square_ == o.square_;
  }

 private:
  int sign_ = 0;
  Rational square_ = Rational(0);
};

// Floor square root; exact perfect-square detection for 64-bit integers.
long long isqrt(long long v);
bool is_perfect_square(long long v);

}  // namespace spinent
