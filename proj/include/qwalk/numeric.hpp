#pragma once

#include <gmpxx.h>
#include <stdexcept>

// Exact scalar arithmetic for the whole library.  Every count and every
// series coefficient is either a BigInt or a Rat; there is no floating
// point anywhere on the exact side.  Rats are kept canonical (lowest
// terms, positive denominator) by GMP.
namespace qwalk {

using BigInt = mpz_class;
using Rat = mpq_class;

// Grows the shared factorial cache so that factorial(n) is available for
// all n <= bound without further allocation.  Thread-safe.
void reserve_factorials(unsigned long bound);

// n! by cache lookup (the cache grows on demand).
BigInt factorial(unsigned long n);

// C(n, k).  Zero when k < 0, k > n or n < 0, matching the usual
// convention for out-of-range binomial coefficients.
BigInt binomial(long n, long k);

// (p+q+r)! / (p! q! r!) when p, q, r >= 0, zero otherwise.
BigInt multinomial(long p, long q, long r);

// i-th Catalan number C(2i, i)/(i+1).  Negative i is rejected.
BigInt catalan(long i);

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Numerator of an integral rational; throws if q has a denominator.
inline BigInt to_integer(const Rat& q) {
    if (!is_integer(q))
        throw std::domain_error("to_integer: rational is not an integer");
    return q.get_num();
}

// Exact quotient a/b; throws unless b divides a.
BigInt divide_exact(const BigInt& a, const BigInt& b);

}  // namespace qwalk
