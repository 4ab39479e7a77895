#include "cyclohodge/fourier.hpp"

#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cyclohodge/arith.hpp"

namespace cyclohodge {

namespace {

std::shared_ptr<const ResidueGroup> group_for(std::uint64_t q) {
    auto pr = factor_prime_power(q);
    if (!pr) throw std::invalid_argument("modulus " + std::to_string(q) + " is not a prime power");
    return std::make_shared<ResidueGroup>(ResidueGroup::build(pr->first, pr->second));
}

std::string params(std::uint64_t n, std::uint64_t q) {
    return "n=" + std::to_string(n) + " q=" + std::to_string(q);
}

}  // namespace

OddFunction::OddFunction(std::uint64_t q, std::vector<Rational> values)
    : q_(q), values_(std::move(values)) {
    auto pr = factor_prime_power(q);
    if (!pr) throw std::invalid_argument("OddFunction: modulus must be a prime power");
    p_ = pr->first;
    if (values_.size() != q_) throw std::invalid_argument("OddFunction: need q values");
    for (std::uint64_t a = 0; a < q_; ++a) {
        if (!is_unit(a)) {
            if (!values_[a].is_zero())
                throw std::invalid_argument("OddFunction: nonzero value at non-unit " +
                                            std::to_string(a));
        } else if (values_[a] != -values_[(q_ - a) % q_]) {
            throw std::invalid_argument("OddFunction: f(q-a) != -f(a) at a=" + std::to_string(a));
        }
    }
}

OddFunction OddFunction::zero(std::uint64_t q) {
    return OddFunction(q, std::vector<Rational>(q, Rational(0)));
}

bool OddFunction::is_zero() const {
    for (const auto& v : values_)
        if (!v.is_zero()) return false;
    return true;
}

OddFunction& OddFunction::operator+=(const OddFunction& o) {
    if (q_ != o.q_) throw std::invalid_argument("OddFunction: modulus mismatch");
    for (std::uint64_t a = 0; a < q_; ++a) values_[a] += o.values_[a];
    return *this;
}

OddFunction OddFunction::scaled(const Rational& c) const {
    std::vector<Rational> v(values_);
    for (auto& x : v) x *= c;
    return OddFunction(q_, std::move(v));
}

OddFunction OddFunction::translated(std::uint64_t s) const {
    s %= q_;
    if (!is_unit(s)) throw std::invalid_argument("OddFunction: translate by non-unit");
    std::uint64_t sinv = inv_mod(s, q_);
    std::vector<Rational> v(q_, Rational(0));
    for (std::uint64_t a = 0; a < q_; ++a)
        if (is_unit(a)) v[a] = values_[sinv * a % q_];
    return OddFunction(q_, std::move(v));
}

OddFunction h_function(std::uint64_t n, std::uint64_t q) {
    auto pr = factor_prime_power(q);
    if (!pr) throw std::invalid_argument("h_function: q must be a prime power");
    if (n == 0 || n % pr->first == 0)
        throw std::invalid_argument("h_function: n must be positive and coprime to p");
    std::vector<Rational> v(q, Rational(0));
    for (std::uint64_t a = 1; a < q; ++a) {
        if (a % pr->first == 0) continue;
        // (n-1)/2 - [na/q]
        v[a] = Rational(static_cast<long>(n - 1), 2) - Rational(static_cast<long>(n * a / q));
    }
    return OddFunction(q, std::move(v));
}

CycloElement fourier_coeff(const OddFunction& h, const DirichletCharacter& chi) {
    if (chi.modulus() != h.q()) throw std::invalid_argument("fourier_coeff: modulus mismatch");
    const unsigned ord = static_cast<unsigned>(chi.order());
    std::vector<Rational> weights(ord, Rational(0));
    for (std::uint64_t a = 1; a < h.q(); ++a) {
        if (!h.is_unit(a) || h.at(a).is_zero()) continue;
        std::uint64_t k = chi.value_exponent(a).value();
        weights[(ord - k) % ord] += h.at(a);  // conj(chi(a)) = zeta^{-k}
    }
    return CycloElement::from_root_powers(ord, weights);
}

CycloElement S_sum(const DirichletCharacter& chi) {
    const unsigned ord = static_cast<unsigned>(chi.order());
    const std::uint64_t q = chi.modulus();
    std::vector<Rational> weights(ord, Rational(0));
    for (std::uint64_t a = 1; a < q; ++a) {
        auto k = chi.value_exponent(a);
        if (!k) continue;
        weights[*k % ord] += Rational(static_cast<long>(a));
    }
    return CycloElement::from_root_powers(ord, weights);
}

GaussSumRecord gauss_sum(const DirichletCharacter& chi) {
    const std::uint64_t q = chi.modulus();
    const std::uint64_t L = std::lcm(q, chi.order());
    const unsigned Lm = static_cast<unsigned>(L);
    std::vector<Rational> weights(Lm, Rational(0));
    for (std::uint64_t a = 1; a < q; ++a) {
        auto k = chi.value_exponent(a);
        if (!k) continue;
        // e(a/q) chi(a) = zeta_L^{a L/q + k L/ord}
        std::uint64_t e = (a * (L / q) + *k * (L / chi.order())) % L;
        weights[e] += Rational(1);
    }
    if (q == 1) weights[0] += Rational(1);  // the a = 0 term of the modulus-1 character
    CycloElement value = CycloElement::from_root_powers(Lm, weights);
    CycloElement norm = value * value.conjugated();
    return GaussSumRecord{chi, value, norm.rational_value()};
}

CycloElement ramanujan_sum(const DirichletCharacter& chi, std::int64_t m) {
    const std::uint64_t q = chi.modulus();
    const std::uint64_t L = std::lcm(q, chi.order());
    const unsigned Lm = static_cast<unsigned>(L);
    std::int64_t mr = m % static_cast<std::int64_t>(q);
    if (mr < 0) mr += q;
    std::vector<Rational> weights(Lm, Rational(0));
    for (std::uint64_t a = 1; a < q; ++a) {
        auto k = chi.value_exponent(a);
        if (!k) continue;
        std::uint64_t e = (static_cast<std::uint64_t>(mr) * a % q * (L / q) +
                           *k * (L / chi.order())) % L;
        weights[e] += Rational(1);
    }
    if (q == 1) weights[0] += Rational(1);
    return CycloElement::from_root_powers(Lm, weights);
}

IdentityReport verify_coefficient_identity(std::uint64_t n, std::uint64_t q) {
    auto group = group_for(q);
    if (q <= 2) throw std::invalid_argument("verify_coefficient_identity: q must exceed 2");
    if (n % group->p() == 0) throw std::invalid_argument("verify_coefficient_identity: p divides n");
    OddFunction h = h_function(n, q);
    IdentityReport report;
    for (const auto& chi : all_characters(group)) {
        if (!chi.is_odd()) continue;
        const unsigned ord = static_cast<unsigned>(chi.order());
        CycloElement lhs = fourier_coeff(h, chi);
        CycloElement chi_n = chi.eval(n);
        CycloElement rhs =
            (chi_n - CycloElement::from_rational(ord, Rational(static_cast<long>(n)))) *
            S_sum(chi.conjugate_char());
        rhs = rhs.scaled(Rational(1, static_cast<long>(q)));
        CycloElement residual = lhs - rhs;
        std::string who = chi.label() + " " + params(n, q);
        if (!residual.is_zero()) who += " residual=" + residual.to_string();
        report.checks.push_back({"coefficient_identity", who, residual.is_zero()});
    }
    return report;
}

IdentityReport verify_nonvanishing(std::uint64_t n, std::uint64_t q) {
    auto group = group_for(q);
    if (q <= 2) throw std::invalid_argument("verify_nonvanishing: q must exceed 2");
    if (n < 2) throw std::invalid_argument("verify_nonvanishing: n must be at least 2");
    if (n % group->p() == 0) throw std::invalid_argument("verify_nonvanishing: p divides n");
    OddFunction h = h_function(n, q);
    IdentityReport report;
    for (const auto& chi : all_characters(group)) {
        if (!chi.is_odd()) continue;
        bool nonzero = !fourier_coeff(h, chi).is_zero();
        report.checks.push_back({"nonvanishing", chi.label() + " " + params(n, q), nonzero});
    }
    return report;
}

IdentityReport verify_imprimitive_reduction(const DirichletCharacter& chi, std::uint64_t n) {
    const std::uint64_t q = chi.modulus();
    const std::uint64_t d = chi.conductor();
    if (d == q) throw std::invalid_argument("verify_imprimitive_reduction: character is primitive");
    if (!chi.is_odd()) throw std::invalid_argument("verify_imprimitive_reduction: character must be odd");
    DirichletCharacter star = chi.restrict_to_conductor();
    DirichletCharacter chibar = chi.conjugate_char();
    DirichletCharacter starbar = star.conjugate_char();
    IdentityReport report;
    std::string who = chi.label() + " d=" + std::to_string(d) + " " + params(n, q);

    auto check_equal = [&](const std::string& name, const CycloElement& lhs,
                           const CycloElement& rhs) {
        CycloElement residual = lhs - rhs;
        std::string label = who;
        if (!residual.is_zero()) label += " residual=" + residual.to_string();
        report.checks.push_back({name, label, residual.is_zero()});
    };

    // (i) S_q(conj chi) = (q/d) S_d(conj chi*)
    check_equal("imprimitive.S", S_sum(chibar),
                S_sum(starbar).scaled(Rational(static_cast<long>(q / d))));

    // (ii) floor sums against the conjugate characters at both levels
    auto floor_sum = [&](const DirichletCharacter& c, std::uint64_t mod) {
        const unsigned o = static_cast<unsigned>(c.order());
        std::vector<Rational> w(o, Rational(0));
        for (std::uint64_t a = 1; a < mod; ++a) {
            auto k = c.value_exponent(a);
            if (!k) continue;
            w[*k % o] += Rational(static_cast<long>(n * a / mod));
        }
        return CycloElement::from_root_powers(o, w);
    };
    check_equal("imprimitive.floor", floor_sum(chibar, q), floor_sum(starbar, d));

    // (iii) phi(q) c_chi = phi(d) c_chi*, i.e. s(h_q, chi) = s(h_d, chi*)
    check_equal("imprimitive.coeff", fourier_coeff(h_function(n, q), chi),
                fourier_coeff(h_function(n, d), star));
    return report;
}

CycloElement L1_closed_form(const DirichletCharacter& chi) {
    const std::uint64_t q = chi.modulus();
    if (q <= 2 || !chi.is_odd()) throw std::invalid_argument("L1_closed_form: character must be odd");
    if (!chi.is_primitive()) throw std::invalid_argument("L1_closed_form: character must be primitive");
    const std::uint64_t L = std::lcm(q, chi.order());
    const unsigned Lm = static_cast<unsigned>(L);
    CycloElement tau = gauss_sum(chi).value;
    CycloElement s = lift_to(S_sum(chi.conjugate_char()), Lm);
    return (tau * s).scaled(Rational(1, static_cast<long>(q * q)));
}

namespace {

// Sweeps call L1_numeric once per character with identical (q, terms, prec);
// keep the latest per-residue harmonic table so the O(terms) pass runs once
// per modulus rather than once per character.
struct HarmonicCache {
    std::mutex mutex;
    std::uint64_t q = 0, terms = 0;
    unsigned prec = 0;
    std::vector<Real> h;
};
HarmonicCache g_harmonic;

std::vector<Real> residue_harmonics(std::uint64_t q, std::uint64_t terms, unsigned prec) {
    std::lock_guard<std::mutex> lock(g_harmonic.mutex);
    if (g_harmonic.q == q && g_harmonic.terms == terms && g_harmonic.prec == prec)
        return g_harmonic.h;
    std::vector<Real> h(q, Real(prec));
    Real t(prec);
    for (std::uint64_t m = 1; m <= terms; ++m) {
        t.set_inverse_of(m);
        h[m % q] += t;
    }
    g_harmonic.q = q;
    g_harmonic.terms = terms;
    g_harmonic.prec = prec;
    g_harmonic.h = h;
    return h;
}

}  // namespace

ComplexApprox L1_numeric(const DirichletCharacter& chi, std::uint64_t terms,
                         unsigned precision_bits) {
    const std::uint64_t q = chi.modulus();
    if (terms < q) throw std::invalid_argument("L1_numeric: need at least q terms");
    const std::uint64_t full = terms / q * q;  // truncate to whole periods
    std::vector<Real> h = residue_harmonics(q, full, precision_bits);
    ComplexApprox acc(precision_bits);
    for (std::uint64_t a = 1; a < q; ++a) {
        auto k = chi.value_exponent(a);
        if (!k) continue;
        ComplexApprox term(Real::cos_2pi(static_cast<long>(*k), chi.order(), precision_bits),
                           Real::sin_2pi(static_cast<long>(*k), chi.order(), precision_bits));
        term.re *= h[a % q];
        term.im *= h[a % q];
        acc += term;
    }
    return acc;
}

unsigned class_number_bqf(std::uint64_t p) {
    if (!is_prime(p) || p % 4 != 3)
        throw std::invalid_argument("class_number_bqf: p must be a prime = 3 mod 4");
    // Reduced forms (a,b,c), b^2 - 4ac = -p, |b| <= a <= c, with b >= 0
    // when |b| = a or a = c. Primitivity is automatic for prime p.
    unsigned h = 0;
    for (std::int64_t a = 1; 4 * a * a <= static_cast<std::int64_t>(p) + a * a; ++a) {
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            std::int64_t num = b * b + static_cast<std::int64_t>(p);
            if (num % (4 * a) != 0) continue;
            std::int64_t c = num / (4 * a);
            if (c < a) continue;
            if ((b < 0) && (c == a)) continue;  // |b| = a excluded by b > -a already
            ++h;
        }
    }
    return h;
}

IdentityReport verify_class_identity(std::uint64_t p, std::uint64_t n) {
    if (!is_prime(p) || p % 4 != 3 || p <= 3)
        throw std::invalid_argument("verify_class_identity: p must be a prime = 3 mod 4, p > 3");
    if (n % p == 0) throw std::invalid_argument("verify_class_identity: p divides n");
    const long hp = static_cast<long>(class_number_bqf(p));
    IdentityReport report;
    std::string who = params(n, p);

    OddFunction h = h_function(n, p);
    Rational lhs(0);
    for (std::uint64_t a = 1; a < p; ++a)
        lhs += h.at(a) * Rational(legendre_symbol(a, p));
    Rational rhs = Rational(static_cast<long>(n) - legendre_symbol(n, p)) * Rational(hp);
    report.checks.push_back({"class.weighted_sum", who + " h_p=" + std::to_string(hp), lhs == rhs});

    auto group = group_for(p);
    CycloElement s = S_sum(legendre_character(group));
    bool s_matches = s.is_rational() && s.rational_value() == Rational(-static_cast<long>(p) * hp);
    report.checks.push_back({"class.s_sum", "p=" + std::to_string(p) + " h_p=" + std::to_string(hp), s_matches});
    return report;
}

}  // namespace cyclohodge
