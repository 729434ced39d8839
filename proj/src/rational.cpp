#include "spinent/rational.hpp"

#include <cmath>
#include <limits>

namespace spinent {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational Rational::from_wide(__int128 num, __int128 den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr __int128 lo = std::numeric_limits<long long>::min();
  constexpr __int128 hi = std::numeric_limits<long long>::max();
  if (num < lo || num > hi || den > hi)
    throw std::overflow_error("rational overflow");
  Rational r;
  r.num_ = static_cast<long long>(num);
  r.den_ = static_cast<long long>(den);
  return r;
}

Rational::Rational(long long num, long long den) {
  *this = from_wide(num, den);
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational Rational::operator+(const Rational& o) const {
  return from_wide(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                   static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
  return from_wide(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw std::invalid_argument("rational division by zero");
  return from_wide(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
}

bool Rational::operator<(const Rational& o) const {
  return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
}

long long isqrt(long long v) {
  if (v < 0) throw std::invalid_argument("isqrt of negative value");
  auto s = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(v))));
  while (s > 0 && s * s > v) --s;
  while ((s + 1) * (s + 1) <= v) ++s;
  return s;
}

bool is_perfect_square(long long v) {
  if (v < 0) return false;
  long long s = isqrt(v);
  return s * s == v;
}

SqrtRational::SqrtRational(int sign, Rational square) : sign_(sign), square_(square) {
  if (square_.sign() < 0) throw std::invalid_argument("sqrt of negative rational");
  if (square_.is_zero()) sign_ = 0;
  if (sign_ == 0) square_ = Rational(0);
}

double SqrtRational::value() const {
  return sign_ * std::sqrt(square_.to_double());
}

SqrtRational SqrtRational::operator-() const { return SqrtRational(-sign_, square_); }

SqrtRational SqrtRational::operator*(const SqrtRational& o) const {
  return SqrtRational(sign_ * o.sign_, square_ * o.square_);
}

SqrtRational SqrtRational::scaled_by(const Rational& factor) const {
  return SqrtRational(sign_ * factor.sign(), square_ * factor * factor);
}

SqrtRational SqrtRational::operator+(const SqrtRational& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  // this + o = o * (sign*sign' * sqrt(square/square') + 1); the ratio must be
  // a perfect rational square for the sum to stay in sqrt-rational form.
  Rational ratio = square_ / o.square_;
  if (!is_perfect_square(ratio.num()) || !is_perfect_square(ratio.den()))
    throw std::logic_error("sum of incommensurable square roots");
  Rational t(isqrt(ratio.num()), isqrt(ratio.den()));
  Rational scalar = t * Rational(sign_ * o.sign_) + Rational(1);
  return o.scaled_by(scalar);
}

}  // namespace spinent
