#include <sincpow/identities.hpp>

#include <sincpow/triangles.hpp>

#include <stdexcept>
#include <utility>

namespace sincpow {

namespace {

constexpr unsigned long kEnumerationCap = 12;  // Bell(12) ~ 4.2M partitions

Integer binom_uu(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Visits the block-size multiset of every set partition of `remaining`
// further elements: each element joins an existing block or opens a new one,
// which is exactly the restricted-growth-string order.
template <typename Fn>
void walk_block_sizes(unsigned long remaining, std::vector<unsigned long>& sizes,
                      Fn&& fn) {
  if (remaining == 0) {
    fn(sizes);
    return;
  }
  for (std::size_t b = 0; b < sizes.size(); ++b) {
    ++sizes[b];
    walk_block_sizes(remaining - 1, sizes, fn);
    --sizes[b];
  }
  sizes.push_back(1);
  walk_block_sizes(remaining - 1, sizes, fn);
  sizes.pop_back();
}

void record(IdentityReport& report, std::vector<long> indices, Rational lhs,
            Rational rhs) {
  ++report.checked;
  if (lhs != rhs) {
    report.counterexamples.push_back(
        {std::move(indices), std::move(lhs), std::move(rhs)});
  }
}

}  // namespace

IdentityReport check_parity_vanishing(unsigned long max_j, unsigned long max_ell) {
  IdentityReport report;
  report.identity_id = "parity";
  report.ranges = "T(2j+l+1,l)=0 for 0<=j<=" + std::to_string(max_j) +
                  ", 0<=l<=" + std::to_string(max_ell) +
                  "; boundary T(2j-1,2l-1), T(2j,2l) for 1<=j<=l<=" +
                  std::to_string(max_ell);
  for (unsigned long j = 0; j <= max_j; ++j) {
    for (unsigned long ell = 0; ell <= max_ell; ++ell) {
      record(report, {static_cast<long>(2 * j + ell + 1), static_cast<long>(ell)},
             central_factorial_T(2 * j + ell + 1, ell), Rational(0));
    }
  }
  for (unsigned long ell = 1; ell <= max_ell; ++ell) {
    for (unsigned long j = 1; j <= ell; ++j) {
      const Rational expected = j == ell ? 1 : 0;
      record(report,
             {static_cast<long>(2 * j - 1), static_cast<long>(2 * ell - 1)},
             central_factorial_T(2 * j - 1, 2 * ell - 1), expected);
      record(report, {static_cast<long>(2 * j), static_cast<long>(2 * ell)},
             central_factorial_T(2 * j, 2 * ell), expected);
    }
  }
  return report;
}

IdentityReport check_T_S_relations(unsigned long max_j, unsigned long max_ell) {
  IdentityReport report;
  report.identity_id = "ts-relations";
  report.ranges = "T-from-S (even and all-index forms) and the odd alternating "
                  "S-sum, 0<=j<=" + std::to_string(max_j) +
                  ", 1<=l<=" + std::to_string(max_ell);
  for (unsigned long ell = 1; ell <= max_ell; ++ell) {
    for (unsigned long j = 0; j <= max_j; ++j) {
      // T-from-S at even offsets n = l + 2j.
      record(report, {static_cast<long>(ell + 2 * j), static_cast<long>(ell)},
             central_factorial_ratio(ell + 2 * j, ell),
             central_factorial_ratio_stirling(ell + 2 * j, ell));
      // T-from-S at every offset n = l + j.
      record(report, {static_cast<long>(ell + j), static_cast<long>(ell)},
             central_factorial_ratio(ell + j, ell),
             central_factorial_ratio_stirling(ell + j, ell));
      // Odd alternating S-sum vanishes.
      const Rational two_over_ell = make_rational(2, ell);
      Rational weight = 1;
      Rational sum = 0;
      for (unsigned long k = 0; k <= 2 * j + 1; ++k) {
        Rational term = Rational(binom_uu(2 * j + 1, k)) * weight *
                        Rational(stirling2(k + ell, ell)) /
                        Rational(binom_uu(k + ell, ell));
        if (k % 2 == 0) {
          sum += term;
        } else {
          sum -= term;
        }
        weight *= two_over_ell;
      }
      record(report, {static_cast<long>(2 * j + 1), static_cast<long>(ell)},
             std::move(sum), Rational(0));
    }
  }
  return report;
}

IdentityReport check_alternating_T_sum(unsigned long max_k) {
  if (max_k < 2) {
    throw std::invalid_argument("check_alternating_T_sum: requires max_k >= 2");
  }
  IdentityReport report;
  report.identity_id = "alt-sum";
  report.ranges = "1 <= l < k <= " + std::to_string(max_k);
  for (unsigned long k = 2; k <= max_k; ++k) {
    for (unsigned long ell = 1; ell < k; ++ell) {
      Rational t_sum = 0;
      Rational scaled_sum = 0;
      for (unsigned long j = 1; j <= k; ++j) {
        Rational t_term =
            Rational(binom_uu(k, j)) * central_factorial_ratio(2 * ell + j, j);
        Rational s_term = Rational(binom_uu(2 * ell + k, 2 * ell + j)) *
                          Rational(scaled_T(2 * ell + j, j));
        const bool negate_t = j % 2 == 1;
        const bool negate_s = (k - j) % 2 == 1;
        if (negate_t) {
          t_sum -= t_term;
        } else {
          t_sum += t_term;
        }
        if (negate_s) {
          scaled_sum -= s_term;
        } else {
          scaled_sum += s_term;
        }
      }
      record(report, {static_cast<long>(k), static_cast<long>(ell)},
             std::move(t_sum), Rational(0));
      record(report, {static_cast<long>(k), static_cast<long>(ell)},
             std::move(scaled_sum), Rational(0));
    }
  }
  return report;
}

IdentityReport check_odd_block_counts(unsigned long max_n) {
  if (max_n > kEnumerationCap) {
    throw std::invalid_argument("check_odd_block_counts: enumeration is capped at n <= 12");
  }
  IdentityReport report;
  report.identity_id = "odd-blocks";
  report.ranges = "0 <= k <= n <= " + std::to_string(max_n);
  for (unsigned long n = 0; n <= max_n; ++n) {
    std::vector<unsigned long> counts(n + 1, 0);
    std::vector<unsigned long> sizes;
    walk_block_sizes(n, sizes, [&](const std::vector<unsigned long>& blocks) {
      for (const unsigned long s : blocks) {
        if (s % 2 == 0) return;
      }
      ++counts[blocks.size()];
    });
    for (unsigned long k = 0; k <= n; ++k) {
      record(report, {static_cast<long>(n), static_cast<long>(k)},
             Rational(scaled_T(n, k)), Rational(Integer(counts[k])));
    }
  }
  return report;
}

IdentityReport check_symmetric_function(unsigned long max_n,
                                        const std::vector<Rational>& weights) {
  IdentityReport report;
  report.identity_id = "symfun";
  report.ranges = "R(n,k,r) = h_{n-k}(r..r+k), 0 <= k <= n <= " +
                  std::to_string(max_n) + ", " + std::to_string(weights.size()) +
                  " weights";
  for (std::size_t w = 0; w < weights.size(); ++w) {
    const Rational& r = weights[w];
    for (unsigned long n = 0; n <= max_n; ++n) {
      for (unsigned long k = 0; k <= n; ++k) {
        std::vector<Rational> vars(k + 1);
        for (unsigned long i = 0; i <= k; ++i) vars[i] = r + Rational(i);
        record(report,
               {static_cast<long>(n), static_cast<long>(k), static_cast<long>(w)},
               weighted_stirling(n, k, r), complete_homogeneous(n - k, vars));
      }
    }
  }
  return report;
}

Integer count_odd_block_partitions(unsigned long n, unsigned long k) {
  if (n > kEnumerationCap) {
    throw std::invalid_argument("count_odd_block_partitions: enumeration is capped at n <= 12");
  }
  unsigned long count = 0;
  std::vector<unsigned long> sizes;
  walk_block_sizes(n, sizes, [&](const std::vector<unsigned long>& blocks) {
    if (blocks.size() != k) return;
    for (const unsigned long s : blocks) {
      if (s % 2 == 0) return;
    }
    ++count;
  });
  return Integer(count);
}

Rational complete_homogeneous(unsigned long m, const std::vector<Rational>& vars) {
  std::vector<Rational> h(m + 1);
  h[0] = 1;
  for (const Rational& x : vars) {
    for (unsigned long d = 1; d <= m; ++d) h[d] += x * h[d - 1];
  }
  return h[m];
}

}  // namespace sincpow
