#pragma once

#include <sincpow/rational.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace sincpow {

struct Counterexample {
  std::vector<long> indices;
  Rational lhs;
  Rational rhs;
};

// Outcome of sweeping one identity over a finite index box. Index tuples
// outside the identity's stated range are skipped, never counted against
// it; empty counterexamples means verified over the swept range.
struct IdentityReport {
  std::string identity_id;
  std::string ranges;
  std::size_t checked = 0;
  std::vector<Counterexample> counterexamples;

  bool verified() const { return counterexamples.empty(); }
};

// T(2j+l+1, l) = 0 for all j, l up to the bounds, plus the boundary table
// T(2j-1, 2l-1) and T(2j, 2l): 0 below the diagonal, 1 on it.
IdentityReport check_parity_vanishing(unsigned long max_j, unsigned long max_ell);

// The T-from-S corollaries (even-index and all-index forms) and the
// vanishing of the odd alternating Stirling sum.
IdentityReport check_T_S_relations(unsigned long max_j, unsigned long max_ell);

// sum_{j=1..k} (-1)^j C(k,j) T(2l+j,j)/C(2l+j,j) = 0 for 1 <= l < k, and
// the equivalent binomial-weighted form over the scaled triangle.
IdentityReport check_alternating_T_sum(unsigned long max_k);

// scaled_T(n,k) against the enumeration count, 0 <= k <= n <= max_n (<= 12).
IdentityReport check_odd_block_counts(unsigned long max_n);

// R(n,k,r) = h_{n-k}(r, r+1, ..., r+k) for each weight r in the list.
IdentityReport check_symmetric_function(unsigned long max_n,
                                        const std::vector<Rational>& weights);

// Brute-force count of set partitions of an n-set into k odd-sized blocks,
// by restricted-growth-string enumeration; capped at n <= 12.
Integer count_odd_block_partitions(unsigned long n, unsigned long k);

// Complete homogeneous symmetric function h_m over the given variables.
Rational complete_homogeneous(unsigned long m, const std::vector<Rational>& vars);

}  // namespace sincpow
