#pragma once

#include "qwalk/laurent.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qwalk {

struct SeriesError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a coefficient beyond the guaranteed order is requested, or
// when an identity check would need more terms than are available.
struct TruncationError : SeriesError {
    using SeriesError::SeriesError;
};

// Truncated Laurent series in t with LaurentPoly coefficients.
//
// A TSeries knows its coefficients of t^n for val() <= n <= order() and
// guarantees nothing beyond t^order().  val() is a certified lower bound
// on the valuation: all coefficients below it are exactly zero.  Every
// arithmetic operation propagates the tightest guaranteed order it can
// prove (sums keep the minimum order, products shift by valuations);
// there is no silent order loss, and reading past order() throws
// TruncationError.
class TSeries {
public:
    TSeries() : vars_(Vars::X), val_(1), order_(0) {}

    static TSeries zero(Vars v, int order);
    // p * t^tpow, known exactly through t^order.
    static TSeries term(const LaurentPoly& p, int tpow, int order);
    static TSeries from_poly(const LaurentPoly& p, int order) { return term(p, 0, order); }
    static TSeries one(int order, Vars v = Vars::X) { return from_poly(LaurentPoly::one(v), order); }
    static TSeries from_coeffs(Vars v, int val, int order, std::vector<LaurentPoly> coeffs);

    Vars vars() const { return vars_; }
    int valuation() const { return val_; }
    int order() const { return order_; }
    // True when every known coefficient is zero (the series may still
    // have terms beyond the guaranteed order).
    bool known_zero() const { return coeffs_.empty(); }

    // Coefficient of t^n; zero below the valuation, TruncationError above
    // the guaranteed order.
    LaurentPoly coeff_poly(int n) const;
    Rat coeff(int n, int ex, int ey = 0) const { return coeff_poly(n).coeff(ex, ey); }

    TSeries operator-() const;
    TSeries operator+(const TSeries& o) const;
    TSeries operator-(const TSeries& o) const;
    TSeries operator*(const TSeries& o) const;
    TSeries operator*(const LaurentPoly& p) const;
    TSeries operator*(const Rat& c) const;

    // Multiplies by t^k.
    TSeries shifted_t(int k) const;
    // Caps the guaranteed order (never raises it).
    TSeries truncated(int new_order) const;
    TSeries mirror_x() const;
    TSeries pow(unsigned k) const;
    // Multiplicative inverse.  Requires the leading coefficient to be a
    // monomial (a unit of the Laurent polynomial ring); the result is
    // guaranteed through order() - 2*valuation().
    TSeries reciprocal() const;

    int max_x_exponent() const;  // over all stored coefficients; 0 if none
    int min_x_exponent() const;

    std::string to_string() const;

private:
    Vars vars_;
    int val_;    // exponent of coeffs_[0]; certified lower bound of the valuation
    int order_;  // guaranteed order; invariant: order_ >= val_ - 1
    std::vector<LaurentPoly> coeffs_;  // size order_ - val_ + 1

    void normalize();
    friend TSeries newton_root(const struct SeriesPoly&, const LaurentPoly&, int);
};

// True when a and b agree coefficientwise through t^through.  Throws
// TruncationError if either series is not guaranteed that far.
bool equal_through(const TSeries& a, const TSeries& b, int through);

// Keeps the monomials with nonnegative x-exponent in every coefficient
// (exponent 0 included).  Univariate input with valuation >= 0 only.
TSeries positive_part(const TSeries& s);

// Keeps the x-exponent-0 part of every coefficient.  The input must have
// no positive x-exponents (coefficients polynomial in 1/x).
TSeries constant_term_xbar(const TSeries& s);

// Square root of a series with constant term 1; r * r == s through the
// guaranteed order of s.
TSeries sqrt_series(const TSeries& s);

// Polynomial in one unknown u with TSeries coefficients: sum coeffs[k] u^k.
struct SeriesPoly {
    std::vector<TSeries> coeffs;
};

TSeries eval_series_poly(const SeriesPoly& p, const TSeries& u);
SeriesPoly derivative(const SeriesPoly& p);

// Unique series root u of p with u == u0 (mod t), found by Newton
// iteration with doubling working precision and validated by a final
// residual check.  Requires p(u0) == 0 (mod t) and dp/du(u0) invertible
// at t = 0 (a simple root); every coefficient series of p must carry
// guaranteed order >= order.
TSeries newton_root(const SeriesPoly& p, const LaurentPoly& u0, int order);

// Per-t-order bound on the x-degree of a series being substituted into.
using DegreeBound = std::function<long(long)>;

// Replaces x by target in s.  s must be univariate with nonnegative
// x-exponents, and max_xdeg(n) must bound the x-degree of its t^n
// coefficient for every n (including the unknown tail); the bound is what
// makes the result's guaranteed order computable when target has negative
// valuation.  The computed order is carried by the result; if it would be
// negative, a SeriesError is thrown.
TSeries substitute(const TSeries& s, const TSeries& target, const DegreeBound& max_xdeg);

}  // namespace qwalk
