#include "qwalk/numeric.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>

namespace qwalk {

namespace {

// Deque so that growth never moves existing entries; readers holding a
// shared lock may copy them while another thread extends the tail.
std::deque<BigInt> g_factorials{BigInt(1)};
std::shared_mutex g_factorials_mutex;

void grow_locked(unsigned long bound) {
    while (g_factorials.size() <= bound) {
        const auto n = g_factorials.size();
        g_factorials.push_back(g_factorials.back() * BigInt(static_cast<unsigned long>(n)));
    }
}

}  // namespace

void reserve_factorials(unsigned long bound) {
    std::unique_lock lock(g_factorials_mutex);
    grow_locked(bound);
}

BigInt factorial(unsigned long n) {
    {
        std::shared_lock lock(g_factorials_mutex);
        if (n < g_factorials.size()) return g_factorials[n];
    }
    std::unique_lock lock(g_factorials_mutex);
    grow_locked(n);
    return g_factorials[n];
}

BigInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return BigInt(0);
    const auto un = static_cast<unsigned long>(n);
    const auto uk = static_cast<unsigned long>(k);
    {
        std::shared_lock lock(g_factorials_mutex);
        if (un < g_factorials.size()) {
            BigInt r = g_factorials[un] / (g_factorials[uk] * g_factorials[un - uk]);
            return r;
        }
    }
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), un, uk);
    return r;
}

BigInt multinomial(long p, long q, long r) {
    if (p < 0 || q < 0 || r < 0) return BigInt(0);
    // (p+q+r)! / (p! q! r!) = C(p+q+r, p) * C(q+r, q)
    return binomial(p + q + r, p) * binomial(q + r, q);
}

BigInt catalan(long i) {
    if (i < 0) throw std::domain_error("catalan: negative index");
    return divide_exact(binomial(2 * i, i), BigInt(i + 1));
}

BigInt divide_exact(const BigInt& a, const BigInt& b) {
    if (b == 0) throw std::domain_error("divide_exact: zero divisor");
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::domain_error("divide_exact: quotient is not exact");
    return q;
}

}  // namespace qwalk
