#include <sincpow/bell.hpp>

#include <sincpow/triangles.hpp>

#include <stdexcept>
#include <utility>

namespace sincpow {

namespace {

Integer binom_uu(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rational t_ratio(unsigned long n, unsigned long ell, BellMethod method) {
  return method == BellMethod::cfn ? central_factorial_ratio(n, ell)
                                   : central_factorial_ratio_stirling(n, ell);
}

}  // namespace

Rational bell_partial(unsigned long n, unsigned long k, const BellArgs& args) {
  if (k > n) {
    throw std::invalid_argument("bell_partial: requires k <= n");
  }
  if (n >= 1 && args.size() < n - k + 1) {
    throw std::invalid_argument("bell_partial: argument list too short");
  }
  // Cells with m - j > n - k never feed the target and would index past the
  // provided arguments, so the table is filled on the diagonal band only.
  const unsigned long band = n - k;
  std::vector<std::vector<Rational>> table(n + 1, std::vector<Rational>(k + 1));
  table[0][0] = 1;
  for (unsigned long m = 1; m <= n; ++m) {
    for (unsigned long j = 1; j <= k && j <= m; ++j) {
      if (m - j > band) continue;
      Rational acc = 0;
      for (unsigned long i = 1; i <= m - j + 1; ++i) {
        const Rational& x = args[i - 1];
        if (x == 0) continue;
        acc += Rational(binom_uu(m - 1, i - 1)) * x * table[m - i][j - 1];
      }
      table[m][j] = std::move(acc);
    }
  }
  return table[n][k];
}

BellArgs sinc_derivative_args(std::size_t count) {
  BellArgs args(count);
  for (std::size_t j = 1; j <= count; ++j) {
    if (j % 2 == 0) {
      Integer num = (j / 2) % 2 == 0 ? 1 : -1;
      args[j - 1] = make_rational(std::move(num), j + 1);
    }
  }
  return args;
}

Rational bell_sinc_closed(unsigned long n, unsigned long k, BellMethod method) {
  if (k < 1 || k > n) {
    throw std::invalid_argument("bell_sinc_closed: requires 1 <= k <= n");
  }
  if (n % 2 == 1) return 0;

  const unsigned long m = n / 2;
  Rational acc = 0;
  for (unsigned long j = 1; j <= k; ++j) {
    Rational term = Rational(binom_uu(k, j)) * t_ratio(n + j, j, method);
    if (j % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  Rational scale = make_rational(Integer(1) << n, factorial(k));
  if ((m + k) % 2 == 1) scale = -scale;
  return scale * acc;
}

TruncatedSeries exp_sinc_series(std::size_t order, BellMethod method) {
  TruncatedSeries out(order);
  out.set(0, 1);
  for (unsigned long k = 1; 2 * k <= order; ++k) {
    // sum_{j=1..2k} ((-1)^j/j!) sum_{l=1..j} (-1)^l C(j,l) T(2k+l,l)/C(2k+l,l)
    Rational inner = 0;
    for (unsigned long j = 1; j <= 2 * k; ++j) {
      Rational jsum = 0;
      for (unsigned long ell = 1; ell <= j; ++ell) {
        Rational term = Rational(binom_uu(j, ell)) * t_ratio(2 * k + ell, ell, method);
        if (ell % 2 == 0) {
          jsum += term;
        } else {
          jsum -= term;
        }
      }
      jsum /= Rational(factorial(j));
      if (j % 2 == 0) {
        inner += jsum;
      } else {
        inner -= jsum;
      }
    }
    Rational coeff = inner * make_rational(Integer(1) << (2 * k), factorial(2 * k));
    if (k % 2 == 1) coeff = -coeff;
    out.set(2 * k, std::move(coeff));
  }
  return out;
}

Rational inv_quadratic_derivative(unsigned long k, const Rational& r,
                                  const Rational& x) {
  if (k >= 1 && x == 0) {
    throw std::domain_error("inv_quadratic_derivative: x must be nonzero for k >= 1");
  }
  const Rational u = 1 + x * x;
  const auto u_pow = exact_pow(u, -r);  // (1+x^2)^(-r)
  if (!u_pow) {
    throw std::domain_error("inv_quadratic_derivative: (1+x^2)^(-r) is irrational");
  }
  if (k == 0) return *u_pow;

  Rational sum = 0;
  for (unsigned long j = (k + 1) / 2; j <= k; ++j) {
    Rational term = falling_factorial(-r, j) *
                    make_rational(Integer(1) << (2 * j), factorial(j)) *
                    Rational(binom_uu(j, k - j)) * pow(x, static_cast<long>(2 * j)) /
                    pow(u, static_cast<long>(j));
    sum += term;
  }
  Rational prefactor = Rational(factorial(k)) /
                       (Rational(Integer(1) << k) * pow(x, static_cast<long>(k)));
  return prefactor * *u_pow * sum;
}

}  // namespace sincpow
