#pragma once

#include <sincpow/rational.hpp>

namespace sincpow {

// C(n, k). Zero outside 0 <= k <= n so identity sums can run with uniform
// bounds; negative n is rejected.
Integer binomial(const Integer& n, const Integer& k);

// r(r+1)...(r+k-1), with the empty product equal to 1.
Rational rising_factorial(const Rational& r, unsigned long k);

// r(r-1)...(r-k+1); equals (-1)^k rising_factorial(-r, k).
Rational falling_factorial(const Rational& r, unsigned long k);

// Stirling numbers of the second kind,
// S(n,k) = (1/k!) sum_{j=0..k} (-1)^(k-j) C(k,j) j^n.
Integer stirling2(unsigned long n, unsigned long k);

// Carlitz weighted Stirling numbers of the second kind,
// R(n,k,r) = (1/k!) sum_{j=0..k} (-1)^(k-j) C(k,j) (r+j)^n.
// R(n,k,0) = S(n,k) and R(n,k,-k/2) = T(n,k).
Rational weighted_stirling(unsigned long n, unsigned long k, const Rational& r);

// Central factorial numbers of the second kind,
// T(n,k) = (1/k!) sum_{j=0..k} (-1)^j C(k,j) (k/2 - j)^n,
// with T(0,0) = 1 and T(n,0) = 0 for n >= 1.
Rational central_factorial_T(unsigned long n, unsigned long k);

// 2^(n-k) T(n,k). Integral for all n >= k >= 0; counts set partitions of n
// elements into k odd-sized blocks.
Integer scaled_T(unsigned long n, unsigned long k);

// T(n,l)/C(n,l) -- the building block of every series coefficient here.
Rational central_factorial_ratio(unsigned long n, unsigned long ell);

// The same value through Stirling numbers:
// sum_{m=0..n-l} (-1)^m C(n-l,m) (l/2)^m S(n-m,l)/C(n-m,l).
Rational central_factorial_ratio_stirling(unsigned long n, unsigned long ell);

enum class TriangleFamily {
  stirling2,
  weighted_stirling,
  central_factorial,
  scaled_central_factorial,
};

struct TriangleKind {
  TriangleFamily family = TriangleFamily::stirling2;
  Rational weight;  // only read for weighted_stirling
};

Rational triangle_entry(const TriangleKind& kind, unsigned long n, unsigned long k);

// S/T entries are memoized internally; results are identical with the cache
// off. Toggling clears the cache.
void set_triangle_cache_enabled(bool enabled);
bool triangle_cache_enabled();

}  // namespace sincpow
