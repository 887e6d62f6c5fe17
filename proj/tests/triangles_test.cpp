#include <doctest.h>

#include <sincpow/triangles.hpp>

#include "support.hpp"

#include <future>
#include <stdexcept>
#include <vector>

using namespace sincpow;

TEST_CASE("binomial boundary behaviour") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(9, 0) == 1);
  CHECK(binomial(7, 9) == 0);
  CHECK(binomial(7, -1) == 0);
  CHECK_THROWS_AS(binomial(-1, 0), std::domain_error);
}

TEST_CASE("rising and falling factorials") {
  CHECK(rising_factorial(make_rational(1, 2), 3) == make_rational(15, 8));
  CHECK(rising_factorial(make_rational(5, 7), 0) == 1);
  CHECK(rising_factorial(Rational(-2), 3) == 0);

  CHECK(falling_factorial(Rational(3), 2) == 6);
  CHECK(falling_factorial(make_rational(9, 4), 0) == 1);
  CHECK(falling_factorial(make_rational(1, 2), 2) == make_rational(-1, 4));

  // falling(r, k) = (-1)^k rising(-r, k)
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 20; ++trial) {
    const Rational r = testsupport::random_rational(rng);
    for (unsigned long k = 0; k <= 10; ++k) {
      Rational expected = rising_factorial(-r, k);
      if (k % 2 == 1) expected = -expected;
      CHECK(falling_factorial(r, k) == expected);
    }
  }
}

TEST_CASE("stirling2 against brute-force partition counts") {
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(6, 6) == 1);
  CHECK(stirling2(5, 1) == 1);
  CHECK(stirling2(3, 5) == 0);

  for (unsigned n = 0; n <= 9; ++n) {
    std::vector<unsigned long> counts(n + 2, 0);
    testsupport::for_each_partition(
        n, [&](const std::vector<std::vector<unsigned>>& blocks) {
          ++counts[blocks.size()];
        });
    for (unsigned long k = 0; k <= n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(stirling2(n, k) == Integer(counts[k]));
    }
  }
}

TEST_CASE("weighted Stirling numbers") {
  for (const Rational& r :
       {Rational(0), Rational(1), make_rational(-1, 2)}) {
    CHECK(weighted_stirling(2, 1, r) == 2 * r + 1);
  }
  CHECK(weighted_stirling(0, 0, make_rational(9, 5)) == 1);
  for (unsigned long n = 0; n <= 10; ++n) {
    for (unsigned long k = 0; k <= n; ++k) {
      CHECK(weighted_stirling(n, k, Rational(0)) == Rational(stirling2(n, k)));
    }
  }
}

TEST_CASE("central factorial numbers of the second kind") {
  CHECK(central_factorial_T(0, 0) == 1);
  CHECK(central_factorial_T(4, 0) == 0);
  CHECK(central_factorial_T(4, 1) == 0);
  CHECK(central_factorial_T(3, 1) == make_rational(1, 4));
  CHECK(central_factorial_T(6, 4) == 5);
  CHECK(central_factorial_T(2, 5) == 0);

  // Even-index recurrence T(2n,2k) = T(2n-2,2k-2) + k^2 T(2n-2,2k).
  for (unsigned long n = 1; n <= 12; ++n) {
    for (unsigned long k = 1; k <= n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(central_factorial_T(2 * n, 2 * k) ==
            central_factorial_T(2 * n - 2, 2 * k - 2) +
                Rational(k * k) * central_factorial_T(2 * n - 2, 2 * k));
    }
  }
}

TEST_CASE("weighted Stirling at r = -k/2 reproduces T") {
  for (unsigned long n = 0; n <= 40; ++n) {
    for (unsigned long k = 0; k <= n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(weighted_stirling(n, k, make_rational(-static_cast<long>(k), 2)) ==
            central_factorial_T(n, k));
    }
  }
}

TEST_CASE("scaled central triangle is integral and counts odd-block partitions") {
  CHECK(scaled_T(5, 3) == 10);
  CHECK(scaled_T(4, 2) == 4);
  CHECK(scaled_T(9, 9) == 1);
  CHECK(scaled_T(0, 0) == 1);
  CHECK_THROWS_AS(scaled_T(2, 3), std::invalid_argument);

  for (unsigned long n = 0; n <= 40; ++n) {
    for (unsigned long k = 0; k <= n; ++k) {
      // Throws if 2^(n-k) T(n,k) is not an integer.
      CHECK_NOTHROW(scaled_T(n, k));
    }
  }

  for (unsigned n = 0; n <= 10; ++n) {
    std::vector<unsigned long> counts(n + 1, 0);
    testsupport::for_each_partition(
        n, [&](const std::vector<std::vector<unsigned>>& blocks) {
          for (const auto& block : blocks) {
            if (block.size() % 2 == 0) return;
          }
          ++counts[blocks.size()];
        });
    for (unsigned long k = 0; k <= n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(scaled_T(n, k) == Integer(counts[k]));
    }
  }
}

TEST_CASE("parity identity T(2j+l+1, l) = 0") {
  for (unsigned long j = 0; j <= 20; ++j) {
    for (unsigned long ell = 0; ell <= 20; ++ell) {
      CHECK(central_factorial_T(2 * j + ell + 1, ell) == 0);
    }
  }
}

TEST_CASE("boundary values T(2j-1,2l-1) and T(2j,2l)") {
  for (unsigned long ell = 1; ell <= 12; ++ell) {
    for (unsigned long j = 1; j <= ell; ++j) {
      const Rational expected = j == ell ? 1 : 0;
      CHECK(central_factorial_T(2 * j - 1, 2 * ell - 1) == expected);
      CHECK(central_factorial_T(2 * j, 2 * ell) == expected);
    }
  }
}

TEST_CASE("central factorial ratio via Stirling numbers") {
  CHECK(central_factorial_ratio(4, 2) == make_rational(1, 6));
  CHECK(central_factorial_ratio_stirling(4, 2) == make_rational(1, 6));
  for (unsigned long ell = 0; ell <= 10; ++ell) {
    for (unsigned long n = ell; n <= ell + 10; ++n) {
      CAPTURE(n);
      CAPTURE(ell);
      CHECK(central_factorial_ratio(n, ell) ==
            central_factorial_ratio_stirling(n, ell));
    }
  }
}

TEST_CASE("entries stay exact at n = 200") {
  CHECK(stirling2(200, 200) == 1);
  CHECK(stirling2(200, 1) == 1);
  // S(200,2) = 2^199 - 1
  CHECK(stirling2(200, 2) == pow(Integer(2), 199) - 1);
  CHECK(weighted_stirling(200, 100, make_rational(-100, 2)) ==
        central_factorial_T(200, 100));
  CHECK_NOTHROW(scaled_T(200, 100));
  CHECK(binomial(200, 100) % 2 == 0);
}

TEST_CASE("triangle_entry dispatches on kind") {
  CHECK(triangle_entry({TriangleFamily::stirling2, Rational(0)}, 4, 2) == 7);
  CHECK(triangle_entry({TriangleFamily::weighted_stirling, make_rational(-1, 2)},
                       2, 1) == 0);
  CHECK(triangle_entry({TriangleFamily::central_factorial, Rational(0)}, 3, 1) ==
        make_rational(1, 4));
  CHECK(triangle_entry({TriangleFamily::scaled_central_factorial, Rational(0)},
                       5, 3) == 10);
}

TEST_CASE("results do not depend on the memo cache") {
  std::vector<Rational> with_cache;
  std::vector<Integer> stirling_with_cache;
  set_triangle_cache_enabled(true);
  for (unsigned long n = 0; n <= 16; ++n) {
    for (unsigned long k = 0; k <= n; ++k) {
      with_cache.push_back(central_factorial_T(n, k));
      stirling_with_cache.push_back(stirling2(n, k));
    }
  }
  set_triangle_cache_enabled(false);
  CHECK_FALSE(triangle_cache_enabled());
  std::size_t i = 0;
  for (unsigned long n = 0; n <= 16; ++n) {
    for (unsigned long k = 0; k <= n; ++k, ++i) {
      CHECK(central_factorial_T(n, k) == with_cache[i]);
      CHECK(stirling2(n, k) == stirling_with_cache[i]);
    }
  }
  set_triangle_cache_enabled(true);
  CHECK(triangle_cache_enabled());
}

TEST_CASE("concurrent triangle lookups agree with sequential results") {
  set_triangle_cache_enabled(true);
  auto worker = [] {
    Rational acc = 0;
    for (unsigned long n = 0; n <= 30; ++n) {
      for (unsigned long k = 0; k <= n; ++k) {
        acc += central_factorial_T(n, k) + Rational(stirling2(n, k));
      }
    }
    return acc;
  };
  std::vector<std::future<Rational>> futures;
  for (int i = 0; i < 4; ++i) {
    futures.push_back(std::async(std::launch::async, worker));
  }
  const Rational expected = worker();
  for (auto& f : futures) CHECK(f.get() == expected);
}
