#pragma once

#include "qwalk/numeric.hpp"

#include <map>
#include <string>

namespace qwalk {

// Which auxiliary variables a polynomial (or series coefficient) may use.
// X is the univariate case; XY adds the second endpoint variable.
enum class Vars : unsigned char { X, XY };

struct Mono {
    int ex = 0;
    int ey = 0;
    friend auto operator<=>(const Mono&, const Mono&) = default;
};

// Laurent polynomial in x (and optionally y) with exact rational
// coefficients.  Exponents may be negative; stored coefficients are
// always nonzero and the exponent bounds are kept tight by normalize().
// Univariate polynomials promote implicitly to bivariate ones when mixed
// in arithmetic.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(Vars v) : vars_(v) {}

    static LaurentPoly constant(const Rat& c, Vars v = Vars::X);
    static LaurentPoly monomial(const Rat& c, int ex, int ey = 0, Vars v = Vars::X);
    static LaurentPoly one(Vars v = Vars::X) { return constant(Rat(1), v); }
    static LaurentPoly var_x(Vars v = Vars::X) { return monomial(Rat(1), 1, 0, v); }
    static LaurentPoly var_y() { return monomial(Rat(1), 0, 1, Vars::XY); }

    Vars vars() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_one() const;
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Mono, Rat>& terms() const { return terms_; }

    Rat coeff(int ex, int ey = 0) const;
    // Accumulates c * x^ex y^ey; a cancelled term is erased.
    void add_term(int ex, int ey, const Rat& c);

    // Tight exponent bounds; all zero for the zero polynomial.
    int min_ex() const { return min_ex_; }
    int max_ex() const { return max_ex_; }
    int min_ey() const { return min_ey_; }
    int max_ey() const { return max_ey_; }

    LaurentPoly promoted(Vars v) const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator*(const Rat& c) const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    // Multiplies by x^dx y^dy.
    LaurentPoly shifted(int dx, int dy = 0) const;
    // x -> 1/x.
    LaurentPoly mirror_x() const;
    // Swaps the roles of x and y (bivariate only).
    LaurentPoly swap_xy() const;
    // Keeps the terms with x-exponent >= 0 (exponent 0 included).
    LaurentPoly keep_x_nonneg() const;
    // Keeps the terms with x-exponent == 0.
    LaurentPoly keep_x_zero() const;
    // Coefficient of y^j as a univariate polynomial in x.
    LaurentPoly coeff_of_y(int j) const;
    // Coefficient of x^i as a polynomial in y (returned with Vars::XY).
    LaurentPoly coeff_of_x(int i) const;
    // Sets y = 0: keeps the y^0 part, which must be the lowest y-exponent
    // present; returns a univariate polynomial.
    LaurentPoly at_y_zero() const;
    // Sum of all coefficients, i.e. the value at x = y = 1.
    Rat eval_one() const;

    // Mathematical equality; a univariate polynomial equals its
    // bivariate promotion.
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

    std::string to_string() const;

private:
    Vars vars_ = Vars::X;
    std::map<Mono, Rat> terms_;
    int min_ex_ = 0, max_ex_ = 0, min_ey_ = 0, max_ey_ = 0;

    void normalize();
    static Vars join(Vars a, Vars b) { return (a == Vars::XY || b == Vars::XY) ? Vars::XY : Vars::X; }
};

}  // namespace qwalk
