#include <doctest.h>

#include <sincpow/evaluate.hpp>
#include <sincpow/expansions.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

using namespace sincpow;

TEST_CASE("Horner evaluation of truncated series") {
  const TruncatedSeries s(std::vector<Rational>{Rational(1), Rational(0),
                                                make_rational(-1, 6)});
  CHECK(eval_series_at(s, 0.0) == 1.0);
  CHECK(eval_series_at(s, 2.0) == doctest::Approx(1.0 - 4.0 / 6.0));
  CHECK(eval_series_at(TruncatedSeries(std::vector<Rational>{Rational(1)}), 17.5) == 1.0);
  CHECK(eval_series_at(cardinal_series(Cardinal::sinc, 20), 1.0) ==
        doctest::Approx(std::sin(1.0)).epsilon(1e-14));
}

TEST_CASE("direct reference evaluation") {
  CHECK(reference_power_eval(Cardinal::sinc, -1.0, 1.0) ==
        doctest::Approx(1.0 / std::sin(1.0)).epsilon(1e-15));
  CHECK(reference_power_eval(Cardinal::sinc, 2.0, std::numbers::pi / 2) ==
        doctest::Approx(4.0 / (std::numbers::pi * std::numbers::pi)).epsilon(1e-15));
  CHECK(reference_power_eval(Cardinal::sinc, -7.5, 0.0) == 1.0);
  CHECK(reference_power_eval(Cardinal::sinhc, 2.0, 1.5) ==
        doctest::Approx(std::pow(std::sinh(1.5) / 1.5, 2.0)).epsilon(1e-15));
  // sinc(4) < 0: fractional powers have no principal value there.
  CHECK_THROWS_AS(reference_power_eval(Cardinal::sinc, 0.5, 4.0),
                  std::domain_error);
  CHECK(reference_power_eval(Cardinal::sinc, 2.0, 4.0) ==
        doctest::Approx(std::pow(std::sin(4.0) / 4.0, 2.0)));
}

TEST_CASE("convergence report shape and edge cases") {
  const auto records = convergence_report(Cardinal::sinc, Rational(-1), 1.0, 24);
  CHECK(records.size() == 12);
  CHECK(records.front().order == 2);
  CHECK(records.back().order == 24);
  for (const auto& record : records) {
    CHECK(record.abs_error ==
          doctest::Approx(std::abs(record.partial_sum - record.reference)));
    CHECK(record.z == 1.0);
    CHECK(record.exponent == -1.0);
  }

  // z = 0: every partial sum is exactly the reference 1.
  for (const auto& record :
       convergence_report(Cardinal::sinc, make_rational(-3, 2), 0.0, 12)) {
    CHECK(record.abs_error == 0.0);
  }

  CHECK_THROWS_AS(convergence_report(Cardinal::sinc, Rational(-1), 3.5, 10),
                  std::domain_error);
  CHECK(convergence_report(Cardinal::sinc, Rational(2), 3.5, 10).size() == 5);
}

TEST_CASE("stated convergence targets") {
  CHECK(convergence_report(Cardinal::sinc, Rational(-1), 1.0, 24).back().abs_error <
        1e-10);
  CHECK(convergence_report(Cardinal::sinc, Rational(1), 2.0, 24).back().abs_error <
        1e-12);
  CHECK(convergence_report(Cardinal::sinc, make_rational(-1, 2), 2.0, 30)
            .back()
            .abs_error < 1e-6);
}

// The geometric convergence rate is (z/pi)^2, so the reachable error at a
// fixed order degrades as z approaches pi; the bounds below are what that
// rate actually delivers at order 30.
TEST_CASE("error decay of partial sums inside |z| < pi") {
  const std::vector<Rational> exponents = {Rational(-2), Rational(-1),
                                           make_rational(-1, 2),
                                           make_rational(1, 2), Rational(2)};
  for (const Rational& r : exponents) {
    for (const double z : {0.5, 1.0}) {
      CAPTURE(to_string(r));
      CAPTURE(z);
      CHECK(convergence_report(Cardinal::sinc, r, z, 30).back().abs_error < 1e-8);
    }
  }
  CHECK(convergence_report(Cardinal::sinc, Rational(-2), 2.0, 30).back().abs_error < 1e-3);
  CHECK(convergence_report(Cardinal::sinc, Rational(-1), 2.0, 30).back().abs_error < 1e-4);
  CHECK(convergence_report(Cardinal::sinc, make_rational(-1, 2), 2.0, 30)
            .back().abs_error < 1e-6);
  CHECK(convergence_report(Cardinal::sinc, make_rational(1, 2), 2.0, 30)
            .back().abs_error < 1e-8);
  // Integer exponents are entire: factorial decay everywhere.
  for (const double z : {0.5, 1.0, 2.0, 3.0}) {
    CHECK(convergence_report(Cardinal::sinc, Rational(2), z, 30).back().abs_error < 1e-8);
  }
  // Near the radius the series still converges, just slowly.
  for (const Rational& r : exponents) {
    const auto records = convergence_report(Cardinal::sinc, r, 3.0, 30);
    CHECK(records[14].abs_error < records[9].abs_error);
    CHECK(records[9].abs_error < records[4].abs_error);
  }
}

TEST_CASE("error decay is monotone above the rounding floor") {
  const std::vector<Rational> exponents = {Rational(-2), Rational(-1),
                                           make_rational(-1, 2),
                                           make_rational(1, 2), Rational(2)};
  for (const Rational& r : exponents) {
    for (const double z : {0.5, 1.0, 2.0, 3.0}) {
      const auto records = convergence_report(Cardinal::sinc, r, z, 30);
      for (std::size_t i = 5; i < records.size(); ++i) {
        if (records[i - 1].abs_error <= 1e-13) break;
        CAPTURE(to_string(r));
        CAPTURE(z);
        CAPTURE(records[i].order);
        CHECK(records[i].abs_error <= records[i - 1].abs_error);
      }
    }
  }
}

TEST_CASE("finite cosine form agrees with the series route") {
  for (unsigned long ell = 1; ell <= 5; ++ell) {
    const TruncatedSeries series = sinc_pow_int(ell, 40);
    for (const double z : {-2.0, -0.9, 0.4, 1.3, 2.0}) {
      const double via_series =
          eval_series_at(series, z) * std::pow(z, static_cast<double>(ell));
      CAPTURE(ell);
      CAPTURE(z);
      CHECK(std::abs(sin_pow_finite_cosine(ell, z) - via_series) < 1e-10);
    }
  }
}
