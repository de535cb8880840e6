#include "qwalk/closedform.hpp"

#include <stdexcept>

namespace qwalk {

BigInt kreweras_axis_count(long i, long n) {
    if (i < 0 || n < 0) throw std::invalid_argument("kreweras_axis_count: negative argument");
    BigInt num;
    mpz_ui_pow_ui(num.get_mpz_t(), 4, static_cast<unsigned long>(n));
    num *= BigInt(2 * i + 1);
    num *= binomial(2 * i, i);
    num *= binomial(3 * n + 2 * i, n);
    return divide_exact(num, BigInt(n + i + 1) * BigInt(2 * n + 2 * i + 1));
}

std::pair<BigInt, BigInt> kreweras_full_count(long p, long q, long r) {
    if (p < 0 || q < 0 || r < 0)
        throw std::invalid_argument("kreweras_full_count: negative step count");
    if (r < p || r < q)
        throw std::invalid_argument("kreweras_full_count: endpoint outside the quadrant");

    // Kreweras' own double sum.
    Rat first = Rat(multinomial(p, q, r)) * (Rat(1) - Rat(p + q) / Rat(r + 1));
    for (long h = 1; h <= p; ++h)
        for (long k = 1; k <= q; ++k) {
            const long s = h + k;
            Rat term = Rat(binomial(s, h) * binomial(2 * s - 2, 2 * h - 1) *
                           multinomial(p - h, q - k, r + s)) /
                       Rat(s * (s - 1));
            if (s % 2 != 0) term = -term;
            first += term;
        }

    // Complement form: all words minus the walks that leave the quadrant,
    // resolved by the point where they first cross an axis.
    BigInt second = multinomial(p, q, r);
    for (long n = 0; n <= p; ++n)
        for (long i = 0; i <= r; ++i) {
            const BigInt tri = multinomial(p - n, q - n - i - 1, r - n - i) +
                               multinomial(p - n - i - 1, q - n, r - n - i);
            if (tri == 0) continue;
            second -= kreweras_axis_count(i, n) * tri;
        }

    return {to_integer(first), second};
}

BigInt square_count(long i, long j, long n) {
    if (i < 0 || j < 0 || n < 0) throw std::invalid_argument("square_count: negative argument");
    if ((n + i + j) % 2 != 0) return BigInt(0);  // half-integer binomial arguments
    const BigInt b = binomial(n + 2, (n + i - j + 2) / 2) * binomial(n + 2, (n - i - j) / 2);
    if (b == 0) return b;
    return divide_exact(BigInt(i + 1) * BigInt(j + 1) * b, BigInt(n + 1) * BigInt(n + 2));
}

BigInt square_total(long n) {
    if (n < 0) throw std::invalid_argument("square_total: negative length");
    return binomial(n, n / 2) * binomial(n + 1, (n + 1) / 2);
}

BigInt square_total_shuffle(long n) {
    if (n < 0) throw std::invalid_argument("square_total_shuffle: negative length");
    BigInt sum(0);
    for (long m = 0; m <= n; ++m)
        sum += binomial(n, m) * binomial(m, m / 2) * binomial(n - m, (n - m) / 2);
    return sum;
}

BigInt diagonal_count(long i, long j, long n) {
    if (i < 0 || j < 0 || n < 0) throw std::invalid_argument("diagonal_count: negative argument");
    if ((n - i) % 2 != 0 || (n - j) % 2 != 0) return BigInt(0);
    const BigInt b = binomial(n + 1, (n - i) / 2) * binomial(n + 1, (n - j) / 2);
    if (b == 0) return b;
    return divide_exact(BigInt(i + 1) * BigInt(j + 1) * b, BigInt(n + 1) * BigInt(n + 1));
}

BigInt diagonal_total(long n) {
    if (n < 0) throw std::invalid_argument("diagonal_total: negative length");
    const BigInt b = binomial(n, n / 2);
    return b * b;
}

KrewerasSolution solve_kreweras(int order) {
    if (order < 1) throw std::invalid_argument("solve_kreweras: order must be >= 1");
    const int w = order + 4;

    // X = t (2 + X^3), i.e. the vanishing root of u - t(2 + u^3).
    SeriesPoly p;
    p.coeffs.push_back(TSeries::term(LaurentPoly::constant(Rat(-2)), 1, w));
    p.coeffs.push_back(TSeries::one(w));
    p.coeffs.push_back(TSeries::zero(Vars::X, w));
    p.coeffs.push_back(TSeries::term(LaurentPoly::constant(Rat(-1)), 1, w));
    const TSeries xt = newton_root(p, LaurentPoly(Vars::X), w);

    const Rat half(1, 2), quarter(1, 4);
    const TSeries x3 = xt.pow(3);
    const TSeries q00 =
        ((xt * (TSeries::one(w) - x3 * quarter)) * half).shifted_t(-1).truncated(order);

    // [x^i] Q(x,0) = X^(2i+1) / (2 * 4^i * t) * (C_i - C_{i+1} X^3 / 4)
    TSeries qx0 = TSeries::zero(Vars::X, order);
    for (int i = 0; 2 * i <= order; ++i) {
        const Rat scale = half / Rat(BigInt(1) << (2 * i));
        const TSeries coeff =
            (xt.pow(static_cast<unsigned>(2 * i + 1)) *
             (TSeries::one(w) * Rat(catalan(i)) - x3 * (Rat(catalan(i + 1)) * quarter)) * scale)
                .shifted_t(-1);
        qx0 = qx0 + (coeff * LaurentPoly::monomial(Rat(1), i)).truncated(order);
    }

    // Cross-check against the closed sqrt form:
    // Q(x,0) = 1/(tx) (1/(2t) - 1/x - (1/X - 1/x) sqrt(1 - x X^2)).
    {
        const LaurentPoly xv = LaurentPoly::var_x();
        const LaurentPoly xbar = LaurentPoly::monomial(Rat(1), -1);
        const TSeries root = sqrt_series(TSeries::one(w) - xt.pow(2) * xv);
        const TSeries x_inv = xt.reciprocal();  // order w - 2
        const int common = w - 2;
        const TSeries inner = TSeries::term(LaurentPoly::constant(half), -1, common) -
                              TSeries::from_poly(xbar, common) -
                              (x_inv - TSeries::from_poly(xbar, common)) * root;
        const TSeries alt = (inner * xbar).shifted_t(-1);
        if (!equal_through(qx0, alt, std::min(order, alt.order())))
            throw SeriesError("solve_kreweras: sqrt-form cross-check failed");
    }

    return KrewerasSolution{xt.truncated(order), q00, qx0, order};
}

SquareExpansions square_kernel_expansions(int order) {
    if (order < 1) throw std::invalid_argument("square_kernel_expansions: order must be >= 1");
    std::vector<LaurentPoly> y0(static_cast<std::size_t>(order) + 1, LaurentPoly(Vars::X));
    std::vector<LaurentPoly> r(static_cast<std::size_t>(order) + 1, LaurentPoly(Vars::X));

    for (long m = 0;; ++m) {
        if (2 * m + 1 > order) break;
        for (long a = 0; 2 * m + a + 1 <= order; ++a) {
            const long n = 2 * m + a + 1;
            const Rat c = Rat(binomial(n, m + a) * binomial(n, m)) / Rat(n);
            y0[static_cast<std::size_t>(n)].add_term(static_cast<int>(a), 0, c);
            if (a > 0) y0[static_cast<std::size_t>(n)].add_term(static_cast<int>(-a), 0, c);

            const Rat cr = Rat((a + 1) * binomial(n + 1, m + a + 1) * binomial(n + 1, m)) /
                           (Rat(n) * Rat(n + 1));
            r[static_cast<std::size_t>(n)].add_term(static_cast<int>(a + 1), 0, cr);
        }
    }
    return SquareExpansions{TSeries::from_coeffs(Vars::X, 0, order, std::move(y0)),
                            TSeries::from_coeffs(Vars::X, 0, order, std::move(r))};
}

}  // namespace qwalk
