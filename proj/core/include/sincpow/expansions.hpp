#pragma once

#include <sincpow/rational.hpp>
#include <sincpow/series.hpp>

#include <cstddef>

namespace sincpow {

enum class ExpansionMethod { cfn, stirling, oracle };

struct ExpansionRequest {
  Cardinal function = Cardinal::sinc;
  Rational exponent = Rational(1);
  std::size_t order = 0;
  ExpansionMethod method = ExpansionMethod::cfn;
};

// sinc^l as 1 + sum_j (-1)^j [T(l+2j,l)/C(l+2j,l)] (2z)^(2j)/(2j)!, or the
// equivalent Stirling-number double sum. The Stirling route is undefined
// for l = 0 (its weights carry 2/l).
TruncatedSeries sinc_pow_int(unsigned long ell, std::size_t order,
                             ExpansionMethod method = ExpansionMethod::cfn);

// sinhc^l = 1 + sum_j [T(2j+l,l)/C(2j+l,l)] (2z)^(2j)/(2j)!.
TruncatedSeries sinhc_pow_int(unsigned long ell, std::size_t order);

// sinc^r for rational r, through the rising-factorial sums over T (cfn) or
// over Stirling numbers (stirling).
TruncatedSeries sinc_pow_real(const Rational& r, std::size_t order,
                              ExpansionMethod method = ExpansionMethod::cfn);

// Same sums without the alternating sign.
TruncatedSeries sinhc_pow_real(const Rational& r, std::size_t order,
                               ExpansionMethod method = ExpansionMethod::cfn);

// Dispatch on the request: integer exponents >= 0 take the integer-power
// path, everything else the real-power path; ExpansionMethod::oracle builds
// the series by pow_rational on the cardinal series instead.
TruncatedSeries expand(const ExpansionRequest& request);

// sin^l z as the finite cosine sum
// ((-1)^l/2^l) sum_{q=0..l} (-1)^q C(l,q) cos[(2q-l)z - l pi/2],
// evaluated in double precision.
double sin_pow_finite_cosine(unsigned long ell, double z);

}  // namespace sincpow
