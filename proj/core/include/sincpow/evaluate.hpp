#pragma once

#include <sincpow/rational.hpp>
#include <sincpow/series.hpp>

#include <cstddef>
#include <vector>

namespace sincpow {

struct ConvergenceRecord {
  double z = 0.0;
  double exponent = 0.0;
  std::size_t order = 0;
  double partial_sum = 0.0;
  double reference = 0.0;
  double abs_error = 0.0;
};

// Horner evaluation of the truncated polynomial in double precision.
double eval_series_at(const TruncatedSeries& s, double z);

// (sin z / z)^r or (sinh z / z)^r directly, with the removable-singularity
// value 1 at z = 0. A non-positive base with a non-integer exponent is
// rejected.
double reference_power_eval(Cardinal function, double r, double z);

// Partial sums of the closed-form expansion at even orders 2..max_order
// against the direct evaluation. Negative exponents of sinc require
// |z| < pi.
std::vector<ConvergenceRecord> convergence_report(Cardinal function,
                                                  const Rational& r, double z,
                                                  std::size_t max_order);

}  // namespace sincpow
