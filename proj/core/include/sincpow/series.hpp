#pragma once

#include <sincpow/rational.hpp>

#include <cstddef>
#include <vector>

namespace sincpow {

// Dense truncated formal power series over Rational. "Order N" keeps the
// coefficients of z^0..z^N inclusive; every binary operation truncates to
// the smaller operand order, so precision never silently inflates.
class TruncatedSeries {
 public:
  // Zero series of the given order.
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

  // coeffs[i] multiplies z^i; the list must not be empty.
  explicit TruncatedSeries(std::vector<Rational> coeffs);

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  void set(std::size_t i, Rational value);

  bool operator==(const TruncatedSeries& other) const = default;

 private:
  std::vector<Rational> coeffs_;
};

enum class Cardinal { sinc, sinhc };

// sin(z)/z or sinh(z)/z: coefficient of z^(2j) is (-1)^j/(2j+1)! for sinc
// and 1/(2j+1)! for sinhc; odd coefficients vanish.
TruncatedSeries cardinal_series(Cardinal kind, std::size_t order);

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);

// Cauchy product, truncated to min(order(a), order(b)).
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  return mul(a, b);
}

TruncatedSeries operator*(const Rational& scalar, const TruncatedSeries& s);
TruncatedSeries operator+(const TruncatedSeries& s, const Rational& constant);
TruncatedSeries operator-(const TruncatedSeries& s, const Rational& constant);

// Formal logarithm of a series with constant term 1.
TruncatedSeries log1(const TruncatedSeries& s);

// Formal exponential of a series with constant term 0.
TruncatedSeries exp1(const TruncatedSeries& s);

// s^r = exp1(r log1(s)) for a series with constant term 1; for integer
// r >= 0 this agrees with repeated multiplication.
TruncatedSeries pow_rational(const TruncatedSeries& s, const Rational& r);

// Copy of the leading coefficients; order must not exceed s.order().
TruncatedSeries truncate(const TruncatedSeries& s, std::size_t order);

}  // namespace sincpow
