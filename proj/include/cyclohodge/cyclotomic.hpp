// Exact arithmetic in the cyclotomic fields Q(zeta_m).
//
// Elements are stored in the power basis 1, zeta, ..., zeta^{phi(m)-1} as
// dense Rational coefficient vectors, reduced modulo the m-th cyclotomic
// polynomial Phi_m. The representation is unique, so equality is
// coefficient-vector equality. Mixed-modulus arithmetic is rejected; use
// lift_to() for the canonical embedding zeta_d = zeta_m^{m/d}.
//
// Per-modulus reduction tables (Phi_m plus the expansions of zeta^k for
// phi(m) <= k < m) live in a process-wide read-only cache, populated under a
// writer lock before first use. If CYCLOHODGE_CACHE_DIR is set, Phi_m
// coefficient vectors are persisted there and reloaded across runs.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <vector>

#include "cyclohodge/complex_approx.hpp"
#include "cyclohodge/rational.hpp"

namespace cyclohodge {

// Coefficients of Phi_m, constant term first; monic of degree phi(m).
std::vector<mpz_class> cyclotomic_poly(unsigned m);

namespace detail {
struct CycloTable;
std::shared_ptr<const CycloTable> cyclo_table(unsigned m);
}  // namespace detail

class CycloElement {
public:
    // The zero element of Q(zeta_m).
    explicit CycloElement(unsigned m);

    static CycloElement zero(unsigned m) { return CycloElement(m); }
    static CycloElement one(unsigned m) { return from_rational(m, Rational(1)); }
    static CycloElement from_rational(unsigned m, const Rational& c);
    // zeta_m^k, any integer exponent (reduced mod m, then into the basis).
    static CycloElement root_power(unsigned m, std::int64_t k);
    static CycloElement root(unsigned m) { return root_power(m, 1); }
    // sum over k of weights[k] * zeta_m^k, weights indexed by exponent 0..m-1.
    static CycloElement from_root_powers(unsigned m, const std::vector<Rational>& weights);

    unsigned modulus() const;
    unsigned degree() const;  // phi(m)
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    // The element lies in Q iff all coefficients above the constant vanish.
    bool is_rational() const;
    Rational rational_value() const;  // throws if not rational

    CycloElement operator-() const;
    CycloElement& operator+=(const CycloElement& o);
    CycloElement& operator-=(const CycloElement& o);
    friend CycloElement operator+(CycloElement a, const CycloElement& b) { return a += b; }
    friend CycloElement operator-(CycloElement a, const CycloElement& b) { return a -= b; }
    friend CycloElement operator*(const CycloElement& a, const CycloElement& b);

    CycloElement scaled(const Rational& c) const;
    CycloElement inverse() const;  // throws on zero

    // The automorphism zeta -> zeta^a of Q(zeta_m); requires gcd(a, m) = 1.
    CycloElement galois_image(std::uint64_t a) const;
    // galois_image(m - 1), i.e. complex conjugation.
    CycloElement conjugated() const;

    friend bool operator==(const CycloElement& a, const CycloElement& b);
    friend bool operator!=(const CycloElement& a, const CycloElement& b) { return !(a == b); }

    std::string to_string() const;

private:
    std::shared_ptr<const detail::CycloTable> table_;
    std::vector<Rational> coeffs_;  // length phi(m)
};

// Canonical embedding of Q(zeta_d) into Q(zeta_m) for d | m.
CycloElement lift_to(const CycloElement& x, unsigned m);

// Trace from Q(zeta_m) down to Q(zeta_d), d | m; result expressed mod d.
CycloElement trace_down(const CycloElement& x, unsigned d);

// Numeric evaluation at zeta_m = e^{2*pi*i/m}. Each coefficient contributes
// a constant number of correctly rounded MPFR operations, so the absolute
// error is below 2^{-precision_bits + c} with c <= log2(3 * phi(m)) + 2 for
// elements with coefficients of magnitude <= 2^precision_bits.
ComplexApprox embed(const CycloElement& x, unsigned precision_bits);

}  // namespace cyclohodge
