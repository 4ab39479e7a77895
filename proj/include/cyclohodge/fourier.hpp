// Character sums and exact identities on (Z/qZ)^x: the odd function
// h(a) = (n-1)/2 - [na/q], its character coefficients s(h,chi), the weighted
// sums S_q(chi), Gauss and Ramanujan sums, the closed-form coefficient
// identity, imprimitive reduction, L(1,chi), and the class-number identities.
//
// Everything is exact except L1_numeric, which is the deliberate numeric
// cross-check of the analytic chain. Gauss and Ramanujan sums are computed
// in the single ambient field Q(zeta_L), L = lcm(q, order(chi)).
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cyclohodge/characters.hpp"
#include "cyclohodge/complex_approx.hpp"
#include "cyclohodge/cyclotomic.hpp"
#include "cyclohodge/rational.hpp"

namespace cyclohodge {

// Q-valued odd function on (Z/qZ)^x:  f(q - a) = -f(a) for every unit a.
// For q = 2 the only such function is 0.
class OddFunction {
public:
    // values[a] for 0 <= a < q; must vanish off the units and satisfy the
    // oddness relation (checked).
    OddFunction(std::uint64_t q, std::vector<Rational> values);

    static OddFunction zero(std::uint64_t q);

    std::uint64_t q() const { return q_; }
    std::uint64_t p() const { return p_; }
    bool is_unit(std::uint64_t a) const { return a % q_ != 0 && a % p_ != 0; }

    const Rational& at(std::uint64_t a) const { return values_[a % q_]; }
    bool is_zero() const;

    OddFunction& operator+=(const OddFunction& o);
    OddFunction scaled(const Rational& c) const;
    // The translate s.f : a -> f(s^{-1} a); stays odd.
    OddFunction translated(std::uint64_t s) const;

    friend bool operator==(const OddFunction& a, const OddFunction& b) {
        return a.q_ == b.q_ && a.values_ == b.values_;
    }

private:
    std::uint64_t q_;
    std::uint64_t p_;
    std::vector<Rational> values_;
};

// h(a) = (n-1)/2 - [na/q] on the units of Z/qZ; requires q = p^r and p∤n.
// Identically zero iff q = 2 or n = 1.
OddFunction h_function(std::uint64_t n, std::uint64_t q);

// s(h, chi) = sum over units of h(a) * conj(chi(a)), exact in Q(zeta_ord).
// The normalized coefficient <h, chi> is this divided by phi(q).
CycloElement fourier_coeff(const OddFunction& h, const DirichletCharacter& chi);

// S_q(chi) = sum_{a=0}^{q-1} a chi(a) in Q(zeta_ord).
CycloElement S_sum(const DirichletCharacter& chi);

struct GaussSumRecord {
    DirichletCharacter chi;
    CycloElement value;    // tau_q(chi) in Q(zeta_lcm(q, ord))
    Rational norm_check;   // value * conj(value); equals q exactly iff chi primitive
};

// tau_q(chi) = sum_{a=0}^{q-1} e(a/q) chi(a).
GaussSumRecord gauss_sum(const DirichletCharacter& chi);

// c_chi(m) = sum_{a=0}^{q-1} e(ma/q) chi(a).
CycloElement ramanujan_sum(const DirichletCharacter& chi, std::int64_t m);

// ---- identity checks (exact; a nonzero residual carries its witness) ----

struct IdentityCheck {
    std::string name;
    std::string witness;  // character label and parameters
    bool ok;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    bool all_ok() const {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
    std::vector<std::string> failures() const {
        std::vector<std::string> out;
        for (const auto& c : checks)
            if (!c.ok) out.push_back(c.name + " " + c.witness);
        return out;
    }
};

// s(h_n, chi) == (chi(n) - n) S_q(conj chi) / q for every odd chi mod q.
IdentityReport verify_coefficient_identity(std::uint64_t n, std::uint64_t q);

// fourier_coeff(h_n, chi) != 0 for every odd chi mod q. A false entry would
// falsify the generation theorem; its witness is the vanishing character.
IdentityReport verify_nonvanishing(std::uint64_t n, std::uint64_t q);

// For odd chi of conductor d < q with primitive restriction chi*:
//   (i)   S_q(conj chi) == (q/d) S_d(conj chi*)
//   (ii)  sum_a [na/q] conj(chi)(a) == sum_b [nb/d] conj(chi*)(b)
//   (iii) phi(q) <h_q,chi> == phi(d) <h_d,chi*>
IdentityReport verify_imprimitive_reduction(const DirichletCharacter& chi, std::uint64_t n);

// Algebraic factor A with L(1,chi) = pi * i * A, namely
// A = tau_q(chi) S_q(conj chi) / q^2, exact in Q(zeta_L).
// Requires chi odd, primitive, q > 2.
CycloElement L1_closed_form(const DirichletCharacter& chi);

// Partial sum of sum_{m>=1} chi(m)/m over full periods of q terms,
// via per-residue harmonic sums at the stated precision. Truncation error
// is O(q/terms) (tail periods telescope); rounding error is far below it.
ComplexApprox L1_numeric(const DirichletCharacter& chi, std::uint64_t terms,
                         unsigned precision_bits);

// Class number of Q(sqrt(-p)) for p = 3 mod 4, by counting reduced
// primitive binary quadratic forms of discriminant -p. Shares no code with
// the character sums, so it can serve as their oracle.
unsigned class_number_bqf(std::uint64_t p);

// For prime p = 3 mod 4, p > 3, p∤n:
//   sum_a h(a) (a/p) == (n - (n/p)) h_p   and   S_p(legendre) == -p h_p.
// p = 3 is rejected: S_3(legendre) = -1 != -3 h_3 (the extra units of
// Q(sqrt(-3)) break the classical identity there).
IdentityReport verify_class_identity(std::uint64_t p, std::uint64_t n);

}  // namespace cyclohodge
