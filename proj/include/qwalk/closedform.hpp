#pragma once

#include "qwalk/series.hpp"

#include <utility>

namespace qwalk {

// Explicit count formulas for the catalog models, all evaluated in exact
// arithmetic.  Every function here is required to agree with the dynamic
// programming oracle on its whole range; the tests enforce that.

// Kreweras walks of length 3n + 2i ending at (i, 0):
// 4^n (2i+1) / ((n+i+1)(2n+2i+1)) * C(2i,i) * C(3n+2i,n).
BigInt kreweras_axis_count(long i, long n);

// Kreweras walks with p West, q South and r North-East steps (ending at
// (r-p, r-q)), by two different double sums that must agree; returns the
// pair.  The endpoint must lie in the quadrant.
std::pair<BigInt, BigInt> kreweras_full_count(long p, long q, long r);

// Square-lattice walks of length n ending at (i, j):
// (i+1)(j+1) / ((n+1)(n+2)) * C(n+2, (n+i-j+2)/2) * C(n+2, (n-i-j)/2),
// zero whenever a binomial argument is not an integer.
BigInt square_count(long i, long j, long n);
// All square-lattice walks of length n: C(n, floor(n/2)) * C(n+1, ceil(n/2)).
BigInt square_total(long n);
// The same total as a sum over shuffles of two nonnegative prefixes:
// sum over m+k=n of C(n,m) C(m, floor(m/2)) C(k, floor(k/2)).
BigInt square_total_shuffle(long n);

// Diagonal-lattice walks of length n ending at (i, j):
// (i+1)(j+1) / (n+1)^2 * C(n+1, (n-i)/2) * C(n+1, (n-j)/2).
BigInt diagonal_count(long i, long j, long n);
// C(n, floor(n/2))^2.
BigInt diagonal_total(long n);

// Exact solution of the quadratic equation for the Kreweras axis series:
// X with X = t(2 + X^3); Q(0,0;t) = (X/2t)(1 - X^3/4); Q(x,0;t) assembled
// coefficientwise from [x^i]Q(x,0) = X^(2i+1)/(2*4^i t) (C_i - C_{i+1}X^3/4)
// and cross-checked against the closed sqrt form.
struct KrewerasSolution {
    TSeries x;    // the algebraic parameter X(t)
    TSeries q00;  // walks returning to the origin
    TSeries qx0;  // walks ending on the x-axis, by endpoint
    int order = 0;
};
KrewerasSolution solve_kreweras(int order);

// Expansions of the square-lattice kernel root and axis series as double
// sums (the inverse-function expansion of Y0 and the positive part of the
// mirror difference); both must match the series computed by Newton
// iteration and from the table.
struct SquareExpansions {
    TSeries y0;
    TSeries r;  // t x Q(x,0)
};
SquareExpansions square_kernel_expansions(int order);

}  // namespace qwalk
