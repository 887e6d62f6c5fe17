#include <sincpow/expansions.hpp>

#include <sincpow/triangles.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace sincpow {

namespace {

Integer binom_uu(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rational t_ratio(unsigned long n, unsigned long ell, ExpansionMethod method) {
  return method == ExpansionMethod::cfn
             ? central_factorial_ratio(n, ell)
             : central_factorial_ratio_stirling(n, ell);
}

// (2z)^(2j)/(2j)! folded into a plain z^(2j) coefficient.
Rational scaled_basis(unsigned long j) {
  return make_rational(Integer(1) << (2 * j), factorial(2 * j));
}

// sum_{k=1..2q} ((-r)_k / k!) sum_{j=1..k} (-1)^j C(k,j) T(2q+j,j)/C(2q+j,j)
Rational real_power_inner_sum(const Rational& r, unsigned long q,
                              ExpansionMethod method) {
  Rational acc = 0;
  Rational rising = 1;  // (-r)_k, updated incrementally
  for (unsigned long k = 1; k <= 2 * q; ++k) {
    rising *= -r + Rational(k) - 1;
    if (rising == 0) break;  // nonnegative integer r: all later terms vanish
    Rational jsum = 0;
    for (unsigned long j = 1; j <= k; ++j) {
      Rational term = Rational(binom_uu(k, j)) * t_ratio(2 * q + j, j, method);
      if (j % 2 == 0) {
        jsum += term;
      } else {
        jsum -= term;
      }
    }
    acc += rising / Rational(factorial(k)) * jsum;
  }
  return acc;
}

void reject_oracle(ExpansionMethod method, const char* where) {
  if (method == ExpansionMethod::oracle) {
    throw std::invalid_argument(std::string(where) +
                                ": oracle is not a closed-form method; use expand()");
  }
}

}  // namespace

TruncatedSeries sinc_pow_int(unsigned long ell, std::size_t order,
                             ExpansionMethod method) {
  reject_oracle(method, "sinc_pow_int");
  if (method == ExpansionMethod::stirling && ell == 0) {
    throw std::domain_error("sinc_pow_int: the Stirling form needs ell >= 1");
  }
  TruncatedSeries out(order);
  out.set(0, 1);
  if (method == ExpansionMethod::cfn) {
    for (unsigned long j = 1; 2 * j <= order; ++j) {
      Rational c = central_factorial_ratio(ell + 2 * j, ell) * scaled_basis(j);
      if (j % 2 == 1) c = -c;
      out.set(2 * j, std::move(c));
    }
    return out;
  }
  // (-1)^j [sum_{k=0..2j} (-1)^k C(2j,k) (2/l)^k S(k+l,l)/C(k+l,l)] (lz)^(2j)/(2j)!
  const Rational two_over_ell = make_rational(2, ell);
  for (unsigned long j = 1; 2 * j <= order; ++j) {
    Rational sum = 0;
    Rational weight = 1;  // (2/l)^k
    for (unsigned long k = 0; k <= 2 * j; ++k) {
      Rational term = Rational(binom_uu(2 * j, k)) * weight *
                      Rational(stirling2(k + ell, ell)) /
                      Rational(binom_uu(k + ell, ell));
      if (k % 2 == 0) {
        sum += term;
      } else {
        sum -= term;
      }
      weight *= two_over_ell;
    }
    Rational c = sum * make_rational(pow(Integer(ell), 2 * j), factorial(2 * j));
    if (j % 2 == 1) c = -c;
    out.set(2 * j, std::move(c));
  }
  return out;
}

TruncatedSeries sinhc_pow_int(unsigned long ell, std::size_t order) {
  TruncatedSeries out(order);
  out.set(0, 1);
  for (unsigned long j = 1; 2 * j <= order; ++j) {
    out.set(2 * j, central_factorial_ratio(2 * j + ell, ell) * scaled_basis(j));
  }
  return out;
}

TruncatedSeries sinc_pow_real(const Rational& r, std::size_t order,
                              ExpansionMethod method) {
  reject_oracle(method, "sinc_pow_real");
  TruncatedSeries out(order);
  out.set(0, 1);
  for (unsigned long q = 1; 2 * q <= order; ++q) {
    Rational c = real_power_inner_sum(r, q, method) * scaled_basis(q);
    if (q % 2 == 1) c = -c;
    out.set(2 * q, std::move(c));
  }
  return out;
}

TruncatedSeries sinhc_pow_real(const Rational& r, std::size_t order,
                               ExpansionMethod method) {
  reject_oracle(method, "sinhc_pow_real");
  TruncatedSeries out(order);
  out.set(0, 1);
  for (unsigned long q = 1; 2 * q <= order; ++q) {
    out.set(2 * q, real_power_inner_sum(r, q, method) * scaled_basis(q));
  }
  return out;
}

TruncatedSeries expand(const ExpansionRequest& request) {
  if (request.method == ExpansionMethod::oracle) {
    return pow_rational(cardinal_series(request.function, request.order),
                        request.exponent);
  }
  const bool integer_power = is_integer(request.exponent) &&
                             request.exponent >= 0 &&
                             request.exponent.get_num().fits_ulong_p();
  if (request.function == Cardinal::sinc) {
    if (integer_power) {
      return sinc_pow_int(request.exponent.get_num().get_ui(), request.order,
                          request.method);
    }
    return sinc_pow_real(request.exponent, request.order, request.method);
  }
  if (integer_power && request.method == ExpansionMethod::cfn) {
    return sinhc_pow_int(request.exponent.get_num().get_ui(), request.order);
  }
  return sinhc_pow_real(request.exponent, request.order, request.method);
}

double sin_pow_finite_cosine(unsigned long ell, double z) {
  if (ell < 1) {
    throw std::domain_error("sin_pow_finite_cosine: requires ell >= 1");
  }
  const double half_pi_ell =
      static_cast<double>(ell) * std::numbers::pi / 2.0;
  double acc = 0.0;
  for (unsigned long q = 0; q <= ell; ++q) {
    const double weight = binom_uu(ell, q).get_d();
    const double angle = (2.0 * static_cast<double>(q) - static_cast<double>(ell)) * z - half_pi_ell;
    const double term = weight * std::cos(angle);
    acc += (q % 2 == 0) ? term : -term;
  }
  const double scale = std::ldexp(1.0, -static_cast<int>(ell));
  return (ell % 2 == 0) ? scale * acc : -scale * acc;
}

}  // namespace sincpow
