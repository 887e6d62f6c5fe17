#pragma once

#include <sincpow/rational.hpp>
#include <sincpow/series.hpp>

#include <cstddef>
#include <vector>

namespace sincpow {

// x_1, x_2, ... fed to B_{n,k}; at least n-k+1 entries are required.
using BellArgs = std::vector<Rational>;

enum class BellMethod { cfn, stirling };

// Partial Bell polynomial B_{n,k}(x_1..x_{n-k+1}) by the recurrence
// B_{n,k} = sum_i C(n-1, i-1) x_i B_{n-i,k-1}.
Rational bell_partial(unsigned long n, unsigned long k, const BellArgs& args);

// Derivatives of sinc at 0 as an argument sequence: x_j = 0 for odd j and
// (-1)^(j/2)/(j+1) for even j.
BellArgs sinc_derivative_args(std::size_t count);

// B_{n,k} at the sinc-derivative sequence in closed form: 0 for odd n, and
// (-1)^(m+k) (2^(2m)/k!) sum_{j=1..k} (-1)^j C(k,j) T(2m+j,j)/C(2m+j,j)
// for n = 2m. BellMethod::stirling routes the inner ratio through Stirling
// numbers instead of T.
Rational bell_sinc_closed(unsigned long n, unsigned long k,
                          BellMethod method = BellMethod::cfn);

// Taylor series of exp(sinc z - 1), assembled from the closed form above.
TruncatedSeries exp_sinc_series(std::size_t order,
                                BellMethod method = BellMethod::cfn);

// Exact d^k/dx^k (1+x^2)^(-r) at x, via the B_{n,k}(x,1,0,...,0) closed
// form. x = 0 with k >= 1 is rejected (the formula carries x^-k), as are
// arguments whose value is irrational.
Rational inv_quadratic_derivative(unsigned long k, const Rational& r,
                                  const Rational& x);

}  // namespace sincpow
