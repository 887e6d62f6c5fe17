#include <sincpow/evaluate.hpp>

#include <sincpow/expansions.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sincpow {

double eval_series_at(const TruncatedSeries& s, double z) {
  double acc = 0.0;
  for (std::size_t i = s.order() + 1; i-- > 0;) {
    acc = acc * z + to_double(s[i]);
  }
  return acc;
}

double reference_power_eval(Cardinal function, double r, double z) {
  double base = 1.0;
  if (z != 0.0) {
    base = (function == Cardinal::sinc ? std::sin(z) : std::sinh(z)) / z;
  }
  if (base <= 0.0 && r != std::nearbyint(r)) {
    throw std::domain_error(
        "reference_power_eval: non-positive base with non-integer exponent");
  }
  return std::pow(base, r);
}

std::vector<ConvergenceRecord> convergence_report(Cardinal function,
                                                  const Rational& r, double z,
                                                  std::size_t max_order) {
  if (function == Cardinal::sinc && r < 0 &&
      std::abs(z) >= std::numbers::pi) {
    throw std::domain_error(
        "convergence_report: negative powers of sinc need |z| < pi");
  }
  const TruncatedSeries series = function == Cardinal::sinc
                                     ? sinc_pow_real(r, max_order)
                                     : sinhc_pow_real(r, max_order);
  const double reference = reference_power_eval(function, to_double(r), z);

  std::vector<ConvergenceRecord> records;
  for (std::size_t order = 2; order <= max_order; order += 2) {
    const double partial = eval_series_at(truncate(series, order), z);
    records.push_back({z, to_double(r), order, partial, reference,
                       std::abs(partial - reference)});
  }
  return records;
}

}  // namespace sincpow
