#include "cyclohodge/galmod.hpp"

#include <numeric>
#include <stdexcept>

#include "cyclohodge/arith.hpp"
#include "cyclohodge/linalg.hpp"

namespace cyclohodge {

TranslateMatrix translate_matrix(const OddFunction& h) {
    const std::uint64_t q = h.q();
    TranslateMatrix m;
    m.q = q;
    for (std::uint64_t a = 1; a < q; ++a)
        if (h.is_unit(a)) m.units.push_back(a);
    if (q == 2) m.units = {1};
    m.entries.resize(m.units.size());
    for (std::size_t i = 0; i < m.units.size(); ++i) {
        std::uint64_t sinv = inv_mod(m.units[i], q);
        m.entries[i].reserve(m.units.size());
        for (std::size_t j = 0; j < m.units.size(); ++j)
            m.entries[i].push_back(h.at(sinv * m.units[j] % q));
    }
    return m;
}

unsigned translates_rank(const OddFunction& h) {
    const std::uint64_t q = h.q();
    if (q == 2) return 0;  // V_Q is {0}: oddness forces h(1) = 0
    // Half-system: one representative of each pair {a, q-a}.
    std::vector<std::uint64_t> half;
    for (std::uint64_t a = 1; a < q; ++a)
        if (h.is_unit(a) && 2 * a < q) half.push_back(a);
    // Common denominator so Bareiss runs over Z.
    mpz_class den = 1;
    for (auto a : half) {
        mpz_class d = h.at(a).den();
        den = den / gcd(den, d) * d;
    }
    const std::size_t k = half.size();
    std::vector<std::vector<mpz_class>> mat(k, std::vector<mpz_class>(k));
    for (std::size_t i = 0; i < k; ++i) {
        std::uint64_t sinv = inv_mod(half[i], q);
        for (std::size_t j = 0; j < k; ++j) {
            const Rational& v = h.at(sinv * half[j] % q);
            mat[i][j] = v.num() * (den / v.den());
        }
    }
    return bareiss_rank(std::move(mat));
}

unsigned odd_space_dim(std::uint64_t q) {
    if (q <= 2) return 0;
    return static_cast<unsigned>(euler_phi(q) / 2);
}

bool generates_V(const OddFunction& h) {
    return translates_rank(h) == odd_space_dim(h.q());
}

GenerationCheck generation_via_characters(const OddFunction& h) {
    const std::uint64_t q = h.q();
    if (q <= 2) throw std::invalid_argument("generation_via_characters: q must exceed 2");
    auto pr = factor_prime_power(q);
    auto group = std::make_shared<ResidueGroup>(ResidueGroup::build(pr->first, pr->second));
    GenerationCheck out;
    out.generates = true;
    const Rational inv_phi(1, static_cast<long>(group->phi()));
    for (const auto& chi : all_characters(group)) {
        if (!chi.is_odd()) continue;
        CycloElement c = fourier_coeff(h, chi).scaled(inv_phi);
        if (c.is_zero()) out.generates = false;
        out.coefficients.emplace_back(chi, std::move(c));
    }
    return out;
}

TowerFunction::TowerFunction(std::uint64_t n, std::uint64_t p, unsigned r)
    : p_(p), r_(r), n_(n) {
    if (!is_prime(p)) throw std::invalid_argument("TowerFunction: p must be prime");
    if (r < 1) throw std::invalid_argument("TowerFunction: r must be positive");
    if (n % p == 0) throw std::invalid_argument("TowerFunction: p divides n");
    std::uint64_t pj = 1;
    for (unsigned j = 1; j <= r; ++j) {
        pj *= p;
        levels_.push_back(h_function(n, pj));
    }
}

const OddFunction& TowerFunction::level(unsigned j) const {
    if (j < 1 || j > r_) throw std::invalid_argument("TowerFunction: level out of range");
    return levels_[j - 1];
}

IdentityReport tower_check(const TowerFunction& t) {
    IdentityReport report;
    const OddFunction& top = t.level(t.r());
    auto group = ResidueGroup::build(t.p(), t.r());
    const std::string tag = "p=" + std::to_string(t.p()) + " r=" + std::to_string(t.r()) +
                            " n=" + std::to_string(t.n());
    for (unsigned j = 1; j < t.r(); ++j) {
        const OddFunction& hj = t.level(j);
        auto gj = group.subgroup_mod_level(j);
        bool level_ok = true;
        for (auto a : group.elements()) {
            Rational sum(0);
            for (auto b : gj) sum += top.at(a * b % group.q());
            if (sum != hj.at(a % hj.q())) {
                level_ok = false;
                report.checks.push_back(
                    {"tower.trace", tag + " j=" + std::to_string(j) + " a=" + std::to_string(a),
                     false});
            }
        }
        report.checks.push_back({"tower.trace", tag + " j=" + std::to_string(j), level_ok});
    }
    if (t.r() == 1) report.checks.push_back({"tower.trace", tag + " (vacuous at r=1)", true});
    return report;
}

TowerCenter tower_center_dim(const TowerFunction& t) {
    if (!tower_check(t).all_ok())
        throw std::logic_error("tower_center_dim: trace relation fails down the tower");
    TowerCenter out{};
    out.tower_dim = translates_rank(t.level(t.r()));
    out.ambient_dim = 0;
    std::uint64_t pj = 1;
    for (unsigned j = 1; j <= t.r(); ++j) {
        pj *= t.p();
        out.ambient_dim += odd_space_dim(pj);
    }
    return out;
}

unsigned max_simple_dim(std::uint64_t q) {
    if (q <= 2) throw std::invalid_argument("max_simple_dim: q must exceed 2");
    auto pr = factor_prime_power(q);
    if (!pr) throw std::invalid_argument("max_simple_dim: q must be a prime power");
    auto group = std::make_shared<ResidueGroup>(ResidueGroup::build(pr->first, pr->second));
    std::uint64_t best = 0;
    for (const auto& chi : all_characters(group)) {
        if (!chi.is_odd()) continue;
        best = std::max(best, euler_phi(chi.order()));
    }
    return static_cast<unsigned>(best);
}

OddFunction random_odd_function(std::uint64_t q, std::mt19937_64& rng) {
    if (q <= 2) return OddFunction::zero(q);
    auto pr = factor_prime_power(q);
    if (!pr) throw std::invalid_argument("random_odd_function: q must be a prime power");
    std::uniform_int_distribution<long> dist(-10, 10);
    std::vector<Rational> v(q, Rational(0));
    for (std::uint64_t a = 1; 2 * a < q; ++a) {
        if (a % pr->first == 0) continue;
        long x = dist(rng);
        v[a] = Rational(x);
        v[q - a] = Rational(-x);
    }
    return OddFunction(q, std::move(v));
}

}  // namespace cyclohodge
