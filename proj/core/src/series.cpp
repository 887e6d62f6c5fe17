#include <sincpow/series.hpp>

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace sincpow {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("TruncatedSeries: coefficient list must not be empty");
  }
}

void TruncatedSeries::set(std::size_t i, Rational value) {
  coeffs_.at(i) = std::move(value);
}

TruncatedSeries cardinal_series(Cardinal kind, std::size_t order) {
  TruncatedSeries s(order);
  for (std::size_t j = 0; 2 * j <= order; ++j) {
    Integer num = (kind == Cardinal::sinc && j % 2 == 1) ? -1 : 1;
    s.set(2 * j, make_rational(std::move(num), factorial(2 * j + 1)));
  }
  return s;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i <= r.order(); ++i) r.set(i, a[i] + b[i]);
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i <= r.order(); ++i) r.set(i, a[i] - b[i]);
  return r;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i <= r.order(); ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j <= i; ++j) acc += a[j] * b[i - j];
    r.set(i, std::move(acc));
  }
  return r;
}

TruncatedSeries operator*(const Rational& scalar, const TruncatedSeries& s) {
  TruncatedSeries r(s.order());
  for (std::size_t i = 0; i <= s.order(); ++i) r.set(i, scalar * s[i]);
  return r;
}

TruncatedSeries operator+(const TruncatedSeries& s, const Rational& constant) {
  TruncatedSeries r = s;
  r.set(0, s[0] + constant);
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& s, const Rational& constant) {
  TruncatedSeries r = s;
  r.set(0, s[0] - constant);
  return r;
}

TruncatedSeries log1(const TruncatedSeries& s) {
  if (s[0] != 1) {
    throw std::domain_error("log1: constant term must be 1");
  }
  // n L_n = n s_n - sum_{k=1..n-1} k L_k s_{n-k}
  TruncatedSeries out(s.order());
  for (std::size_t n = 1; n <= s.order(); ++n) {
    Rational acc = Rational(n) * s[n];
    for (std::size_t k = 1; k < n; ++k) acc -= Rational(k) * out[k] * s[n - k];
    out.set(n, acc / Rational(n));
  }
  return out;
}

TruncatedSeries exp1(const TruncatedSeries& s) {
  if (s[0] != 0) {
    throw std::domain_error("exp1: constant term must be 0");
  }
  // n E_n = sum_{k=1..n} k s_k E_{n-k}
  TruncatedSeries out(s.order());
  out.set(0, 1);
  for (std::size_t n = 1; n <= s.order(); ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc += Rational(k) * s[k] * out[n - k];
    out.set(n, acc / Rational(n));
  }
  return out;
}

TruncatedSeries pow_rational(const TruncatedSeries& s, const Rational& r) {
  if (s[0] != 1) {
    throw std::domain_error("pow_rational: constant term must be 1");
  }
  return exp1(r * log1(s));
}

TruncatedSeries truncate(const TruncatedSeries& s, std::size_t order) {
  if (order > s.order()) {
    throw std::invalid_argument("truncate: cannot extend a series");
  }
  std::vector<Rational> coeffs(s.coeffs().begin(), s.coeffs().begin() + static_cast<std::ptrdiff_t>(order) + 1);
  return TruncatedSeries(std::move(coeffs));
}

}  // namespace sincpow
