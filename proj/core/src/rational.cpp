#include <sincpow/rational.hpp>

#include <cctype>
#include <stdexcept>
#include <utility>

namespace sincpow {

Rational make_rational(Integer num, Integer den) {
  if (den == 0) {
    throw std::domain_error("make_rational: zero denominator");
  }
  Rational q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer pow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rational pow(const Rational& base, long exp) {
  if (exp < 0) {
    if (base == 0) {
      throw std::domain_error("pow: zero base with negative exponent");
    }
    Rational inv;
    mpq_inv(inv.get_mpq_t(), base.get_mpq_t());
    return pow(inv, -exp);
  }
  // Powers of a canonical fraction stay canonical.
  Rational r;
  const auto e = static_cast<unsigned long>(exp);
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), e);
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), e);
  return r;
}

std::optional<Rational> exact_pow(const Rational& base, const Rational& exp) {
  if (base == 0) {
    if (exp == 0) return Rational(1);
    if (exp < 0) {
      throw std::domain_error("exact_pow: zero base with negative exponent");
    }
    return Rational(0);
  }
  const Integer& p = exp.get_num();
  const Integer& q = exp.get_den();
  if (!q.fits_ulong_p() || !p.fits_slong_p()) return std::nullopt;
  const unsigned long root = q.get_ui();
  if (base < 0 && root % 2 == 0) return std::nullopt;

  Integer root_num;
  Integer root_den;
  const bool exact_num =
      mpz_root(root_num.get_mpz_t(), base.get_num().get_mpz_t(), root) != 0;
  const bool exact_den =
      mpz_root(root_den.get_mpz_t(), base.get_den().get_mpz_t(), root) != 0;
  if (!exact_num || !exact_den) return std::nullopt;

  return pow(make_rational(root_num, root_den), p.get_si());
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

std::optional<Rational> parse_rational(std::string_view text) {
  const auto is_int_literal = [](std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (const char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };

  std::string_view num = text;
  std::string_view den;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!is_int_literal(den) || den.front() == '-') return std::nullopt;
  }
  if (!is_int_literal(num)) return std::nullopt;

  Integer n(std::string(num), 10);
  Integer d = den.empty() ? Integer(1) : Integer(std::string(den), 10);
  if (d == 0) return std::nullopt;
  return make_rational(std::move(n), std::move(d));
}

double to_double(const Rational& q) { return mpq_get_d(q.get_mpq_t()); }

}  // namespace sincpow
