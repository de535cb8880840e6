#pragma once

#include "qwalk/numeric.hpp"

#include <mpfr.h>

#include <string>

namespace qwalk {

// Thin RAII wrapper over an mpfr_t at 256-bit precision (roughly 77
// significant decimal digits).  Logarithms of the huge exact counts are
// taken at this precision so that the differences used by the asymptotic
// fits keep far more accuracy than the fits themselves need.
class Real {
public:
    static constexpr mpfr_prec_t kPrecision = 256;

    Real() { mpfr_init2(v_, kPrecision); mpfr_set_zero(v_, 1); }
    Real(long n) : Real() { mpfr_set_si(v_, n, MPFR_RNDN); }
    Real(double d) : Real() { mpfr_set_d(v_, d, MPFR_RNDN); }
    explicit Real(const BigInt& z) : Real() { mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN); }
    explicit Real(const Rat& q) : Real() { mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }

    Real(const Real& o) : Real() { mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept : Real() { mpfr_swap(v_, o.v_); }
    Real& operator=(Real o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    friend Real operator+(const Real& a, const Real& b) {
        Real r;
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator-(const Real& a, const Real& b) {
        Real r;
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator*(const Real& a, const Real& b) {
        Real r;
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator/(const Real& a, const Real& b) {
        Real r;
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    Real operator-() const {
        Real r = *this;
        mpfr_neg(r.v_, r.v_, MPFR_RNDN);
        return r;
    }

    Real log() const {
        Real r;
        mpfr_log(r.v_, v_, MPFR_RNDN);
        return r;
    }
    Real exp() const {
        Real r;
        mpfr_exp(r.v_, v_, MPFR_RNDN);
        return r;
    }
    Real abs() const {
        Real r;
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }
    // k-th root, k >= 1.
    Real root(unsigned long k) const {
        Real r;
        mpfr_rootn_ui(r.v_, v_, k, MPFR_RNDN);
        return r;
    }
    static Real log2() { return Real(2L).log(); }
    static Real from_string(const std::string& s) {
        Real r;
        mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN);
        return r;
    }

    int compare(const Real& o) const { return mpfr_cmp(v_, o.v_); }
    friend bool operator<(const Real& a, const Real& b) { return a.compare(b) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return a.compare(b) > 0; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    BigInt floor_to_int() const {
        BigInt z;
        mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDD);
        return z;
    }
    std::string to_string(int digits = 20) const;

private:
    mpfr_t v_;
};

}  // namespace qwalk
