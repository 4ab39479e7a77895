// Controlled-precision complex floating point on top of MPFR.
//
// Every value records its precision_bits at creation; binary operations
// refuse to mix precisions rather than silently coercing. MPFR operations
// are correctly rounded, so each arithmetic op contributes at most one ulp
// of rounding error at the stated precision.
#pragma once

#include <mpfr.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "cyclohodge/rational.hpp"

namespace cyclohodge {

// Minimal RAII real number at a fixed MPFR precision.
class Real {
public:
    explicit Real(unsigned precision_bits) : prec_(precision_bits) {
        if (precision_bits < 2) throw std::invalid_argument("Real: precision too small");
        mpfr_init2(v_, static_cast<mpfr_prec_t>(precision_bits));
        mpfr_set_zero(v_, 1);
    }
    Real(const Real& o) : prec_(o.prec_) {
        mpfr_init2(v_, static_cast<mpfr_prec_t>(prec_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept : prec_(o.prec_) {
        mpfr_init2(v_, static_cast<mpfr_prec_t>(prec_));
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(Real o) {
        std::swap(prec_, o.prec_);
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    unsigned precision_bits() const { return prec_; }

    static Real from_rational(const Rational& q, unsigned prec) {
        Real r(prec);
        mpfr_set_q(r.v_, q.mpq().get_mpq_t(), MPFR_RNDN);
        return r;
    }
    static Real from_double(double d, unsigned prec) {
        Real r(prec);
        mpfr_set_d(r.v_, d, MPFR_RNDN);
        return r;
    }
    static Real pi(unsigned prec) {
        Real r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

    Real& operator+=(const Real& o) { check(o); mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { check(o); mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { check(o); mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& o) { check(o); mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
    friend Real operator+(Real a, const Real& b) { return a += b; }
    friend Real operator-(Real a, const Real& b) { return a -= b; }
    friend Real operator*(Real a, const Real& b) { return a *= b; }
    friend Real operator/(Real a, const Real& b) { return a /= b; }
    Real operator-() const { Real r(*this); mpfr_neg(r.v_, r.v_, MPFR_RNDN); return r; }

    Real& add_rational(const Rational& q) { mpfr_add_q(v_, v_, q.mpq().get_mpq_t(), MPFR_RNDN); return *this; }
    Real& mul_rational(const Rational& q) { mpfr_mul_q(v_, v_, q.mpq().get_mpq_t(), MPFR_RNDN); return *this; }
    Real& set_inverse_of(unsigned long n) {
        mpfr_set_ui(v_, n, MPFR_RNDN);
        mpfr_ui_div(v_, 1, v_, MPFR_RNDN);
        return *this;
    }

    // cos/sin of 2*pi*k/m at this value's precision.
    static Real cos_2pi(long k, unsigned long m, unsigned prec) {
        Real a = angle(k, m, prec);
        mpfr_cos(a.v_, a.v_, MPFR_RNDN);
        return a;
    }
    static Real sin_2pi(long k, unsigned long m, unsigned prec) {
        Real a = angle(k, m, prec);
        mpfr_sin(a.v_, a.v_, MPFR_RNDN);
        return a;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    Real abs() const { Real r(*this); mpfr_abs(r.v_, r.v_, MPFR_RNDN); return r; }
    bool operator<(const Real& o) const { check(o); return mpfr_cmp(v_, o.v_) < 0; }

private:
    static Real angle(long k, unsigned long m, unsigned prec) {
        Real a = pi(prec);
        mpfr_mul_si(a.v_, a.v_, 2 * k, MPFR_RNDN);
        mpfr_div_ui(a.v_, a.v_, m, MPFR_RNDN);
        return a;
    }
    void check(const Real& o) const {
        if (prec_ != o.prec_)
            throw std::invalid_argument("Real: mixing precisions " + std::to_string(prec_) +
                                        " and " + std::to_string(o.prec_));
    }
    unsigned prec_;
    mpfr_t v_;
};

struct ComplexApprox {
    Real re;
    Real im;

    explicit ComplexApprox(unsigned prec) : re(prec), im(prec) {}
    ComplexApprox(Real r, Real i) : re(std::move(r)), im(std::move(i)) {
        if (re.precision_bits() != im.precision_bits())
            throw std::invalid_argument("ComplexApprox: mixed precisions");
    }

    unsigned precision_bits() const { return re.precision_bits(); }

    ComplexApprox& operator+=(const ComplexApprox& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    ComplexApprox& operator-=(const ComplexApprox& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend ComplexApprox operator+(ComplexApprox a, const ComplexApprox& b) { return a += b; }
    friend ComplexApprox operator-(ComplexApprox a, const ComplexApprox& b) { return a -= b; }
    friend ComplexApprox operator*(const ComplexApprox& a, const ComplexApprox& b) {
        ComplexApprox r(a.precision_bits());
        r.re = a.re * b.re - a.im * b.im;
        r.im = a.re * b.im + a.im * b.re;
        return r;
    }

    Real abs2() const { return re * re + im * im; }
    double abs() const;

    std::string to_string() const;
};

}  // namespace cyclohodge
