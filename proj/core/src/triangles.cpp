#include <sincpow/triangles.hpp>

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace sincpow {

namespace {

Integer binom_uu(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

struct TriangleCache {
  std::mutex mutex;
  bool enabled = true;
  std::map<std::pair<unsigned long, unsigned long>, Integer> stirling;
  std::map<std::pair<unsigned long, unsigned long>, Rational> central;
};

TriangleCache& cache() {
  static TriangleCache instance;
  return instance;
}

Integer stirling2_direct(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Integer acc = 0;
  Integer power;
  for (unsigned long j = 0; j <= k; ++j) {
    mpz_ui_pow_ui(power.get_mpz_t(), j, n);  // 0^0 == 1
    Integer term = binom_uu(k, j) * power;
    if ((k - j) % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  Integer result;
  Integer kfac = factorial(k);
  mpz_divexact(result.get_mpz_t(), acc.get_mpz_t(), kfac.get_mpz_t());
  return result;
}

// Integer core of T(n,k): sum_{j=0..k} (-1)^j C(k,j) (k-2j)^n. Dividing by
// k! 2^n gives T exactly.
Integer central_numerator(unsigned long n, unsigned long k) {
  Integer acc = 0;
  Integer power;
  for (unsigned long j = 0; j <= k; ++j) {
    Integer base = Integer(k) - 2 * Integer(j);
    mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), n);
    Integer term = binom_uu(k, j) * power;
    if (j % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

Rational central_factorial_direct(unsigned long n, unsigned long k) {
  Integer den = factorial(k);
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), n);
  return make_rational(central_numerator(n, k), std::move(den));
}

}  // namespace

Integer binomial(const Integer& n, const Integer& k) {
  if (n < 0) {
    throw std::domain_error("binomial: n must be nonnegative");
  }
  if (k < 0 || k > n) return 0;
  if (!k.fits_ulong_p()) {
    throw std::overflow_error("binomial: k does not fit in an unsigned long");
  }
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k.get_ui());
  return r;
}

Rational rising_factorial(const Rational& r, unsigned long k) {
  Rational acc = 1;
  Rational term = r;
  for (unsigned long i = 0; i < k; ++i) {
    acc *= term;
    term += 1;
  }
  return acc;
}

Rational falling_factorial(const Rational& r, unsigned long k) {
  Rational acc = 1;
  Rational term = r;
  for (unsigned long i = 0; i < k; ++i) {
    acc *= term;
    term -= 1;
  }
  return acc;
}

Integer stirling2(unsigned long n, unsigned long k) {
  TriangleCache& c = cache();
  std::lock_guard<std::mutex> lock(c.mutex);
  if (!c.enabled) return stirling2_direct(n, k);
  auto [it, inserted] = c.stirling.try_emplace({n, k});
  if (inserted) it->second = stirling2_direct(n, k);
  return it->second;
}

Rational weighted_stirling(unsigned long n, unsigned long k, const Rational& r) {
  Rational acc = 0;
  for (unsigned long j = 0; j <= k; ++j) {
    Rational base = r + Rational(j);
    Rational term = Rational(binom_uu(k, j)) * pow(base, static_cast<long>(n));
    if ((k - j) % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc / Rational(factorial(k));
}

Rational central_factorial_T(unsigned long n, unsigned long k) {
  TriangleCache& c = cache();
  std::lock_guard<std::mutex> lock(c.mutex);
  if (!c.enabled) return central_factorial_direct(n, k);
  auto [it, inserted] = c.central.try_emplace({n, k});
  if (inserted) it->second = central_factorial_direct(n, k);
  return it->second;
}

Integer scaled_T(unsigned long n, unsigned long k) {
  if (k > n) {
    throw std::invalid_argument("scaled_T: requires n >= k");
  }
  Integer shift = Integer(1) << (n - k);
  Rational scaled = Rational(std::move(shift)) * central_factorial_T(n, k);
  if (!is_integer(scaled)) {
    throw std::logic_error("scaled_T: 2^(n-k) T(n,k) came out non-integral");
  }
  return scaled.get_num();
}

Rational central_factorial_ratio(unsigned long n, unsigned long ell) {
  if (ell > n) {
    throw std::invalid_argument("central_factorial_ratio: requires n >= ell");
  }
  return central_factorial_T(n, ell) / Rational(binom_uu(n, ell));
}

Rational central_factorial_ratio_stirling(unsigned long n, unsigned long ell) {
  if (ell > n) {
    throw std::invalid_argument(
        "central_factorial_ratio_stirling: requires n >= ell");
  }
  const unsigned long width = n - ell;
  const Rational half_ell = make_rational(ell, 2);
  Rational weight = 1;  // (ell/2)^m
  Rational acc = 0;
  for (unsigned long m = 0; m <= width; ++m) {
    Rational term = Rational(binom_uu(width, m)) * weight *
                    Rational(stirling2(n - m, ell)) / Rational(binom_uu(n - m, ell));
    if (m % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
    weight *= half_ell;
  }
  return acc;
}

Rational triangle_entry(const TriangleKind& kind, unsigned long n, unsigned long k) {
  switch (kind.family) {
    case TriangleFamily::stirling2:
      return Rational(stirling2(n, k));
    case TriangleFamily::weighted_stirling:
      return weighted_stirling(n, k, kind.weight);
    case TriangleFamily::central_factorial:
      return central_factorial_T(n, k);
    case TriangleFamily::scaled_central_factorial:
      return Rational(scaled_T(n, k));
  }
  throw std::invalid_argument("triangle_entry: unknown triangle kind");
}

void set_triangle_cache_enabled(bool enabled) {
  TriangleCache& c = cache();
  std::lock_guard<std::mutex> lock(c.mutex);
  c.enabled = enabled;
  c.stirling.clear();
  c.central.clear();
}

bool triangle_cache_enabled() {
  TriangleCache& c = cache();
  std::lock_guard<std::mutex> lock(c.mutex);
  return c.enabled;
}

}  // namespace sincpow
