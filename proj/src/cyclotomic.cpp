#include "cyclohodge/cyclotomic.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

#include "cyclohodge/arith.hpp"
#include "cyclohodge/linalg.hpp"

namespace cyclohodge {

namespace {

// ---- dense integer polynomials, constant term first ----

using ZPoly = std::vector<mpz_class>;

ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b) {
    ZPoly c(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

// Exact division by a monic divisor.
ZPoly zpoly_div_monic(ZPoly num, const ZPoly& den) {
    if (den.empty() || den.back() != 1)
        throw std::logic_error("zpoly_div_monic: divisor not monic");
    if (num.size() < den.size()) throw std::logic_error("zpoly_div_monic: degree underflow");
    ZPoly quot(num.size() - den.size() + 1, mpz_class(0));
    for (std::size_t k = quot.size(); k-- > 0;) {
        mpz_class c = num[k + den.size() - 1];
        quot[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
    }
    for (const auto& c : num)
        if (c != 0) throw std::logic_error("zpoly_div_monic: division not exact");
    return quot;
}

ZPoly load_cached_phi(unsigned m) {
    const char* dir = std::getenv("CYCLOHODGE_CACHE_DIR");
    if (!dir) return {};
    std::ifstream in(std::string(dir) + "/phi_" + std::to_string(m) + ".txt");
    if (!in) return {};
    std::string tag;
    unsigned ver = 0, fm = 0;
    std::size_t deg = 0;
    in >> tag >> ver >> fm >> deg;
    if (tag != "cyclohodge-phi" || ver != 1 || fm != m || deg != euler_phi(m)) return {};
    ZPoly poly(deg + 1);
    for (auto& c : poly) {
        std::string s;
        if (!(in >> s)) return {};
        c = mpz_class(s);
    }
    if (poly.back() != 1) return {};
    return poly;
}

void store_cached_phi(unsigned m, const ZPoly& poly) {
    const char* dir = std::getenv("CYCLOHODGE_CACHE_DIR");
    if (!dir) return;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) return;
    std::string path = std::string(dir) + "/phi_" + std::to_string(m) + ".txt";
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << "cyclohodge-phi 1 " << m << " " << (poly.size() - 1) << "\n";
        for (const auto& c : poly) out << c.get_str() << "\n";
    }
    std::filesystem::rename(tmp, path, ec);
}

std::mutex g_phi_mutex;
std::map<unsigned, ZPoly> g_phi_cache;

ZPoly cyclotomic_poly_locked(unsigned m) {
    auto it = g_phi_cache.find(m);
    if (it != g_phi_cache.end()) return it->second;
    ZPoly result = load_cached_phi(m);
    if (result.empty()) {
        // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d.
        ZPoly num(m + 1, mpz_class(0));
        num[0] = -1;
        num[m] = 1;
        ZPoly den{mpz_class(1)};
        for (auto d : divisors(m))
            if (d < m) den = zpoly_mul(den, cyclotomic_poly_locked(static_cast<unsigned>(d)));
        result = zpoly_div_monic(std::move(num), den);
        store_cached_phi(m, result);
    }
    g_phi_cache.emplace(m, result);
    return result;
}

// ---- dense rational polynomials (for inversion only) ----

using QPoly = std::vector<Rational>;

void qpoly_trim(QPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

}  // namespace

std::vector<mpz_class> cyclotomic_poly(unsigned m) {
    if (m < 1) throw std::invalid_argument("cyclotomic_poly: m must be positive");
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    return cyclotomic_poly_locked(m);
}

namespace detail {

struct CycloTable {
    unsigned m;
    unsigned phi;
    ZPoly poly;  // Phi_m
    // pow_rows[k - phi] = coefficients of zeta^k in the power basis,
    // for phi <= k < m. Integer entries since Phi_m is monic over Z.
    std::vector<std::vector<mpz_class>> pow_rows;
};

namespace {
std::shared_mutex g_table_mutex;
std::map<unsigned, std::shared_ptr<const CycloTable>> g_table_cache;

std::shared_ptr<const CycloTable> build_table(unsigned m) {
    auto t = std::make_shared<CycloTable>();
    t->m = m;
    t->phi = static_cast<unsigned>(euler_phi(m));
    t->poly = cyclotomic_poly(m);
    const unsigned phi = t->phi;
    if (m > phi) {
        t->pow_rows.resize(m - phi);
        // zeta^phi = -(c_0 + c_1 zeta + ... + c_{phi-1} zeta^{phi-1})
        auto& first = t->pow_rows[0];
        first.resize(phi);
        for (unsigned i = 0; i < phi; ++i) first[i] = -t->poly[i];
        for (unsigned k = phi + 1; k < m; ++k) {
            const auto& prev = t->pow_rows[k - phi - 1];
            auto& row = t->pow_rows[k - phi];
            row.assign(phi, mpz_class(0));
            // multiply by zeta, then fold the overflow term via row(phi)
            const mpz_class& top = prev[phi - 1];
            for (unsigned i = 1; i < phi; ++i) row[i] = prev[i - 1];
            if (top != 0)
                for (unsigned i = 0; i < phi; ++i) row[i] += top * first[i];
        }
    }
    return t;
}
}  // namespace

std::shared_ptr<const CycloTable> cyclo_table(unsigned m) {
    if (m < 1) throw std::invalid_argument("cyclotomic modulus must be positive");
    {
        std::shared_lock lock(g_table_mutex);
        auto it = g_table_cache.find(m);
        if (it != g_table_cache.end()) return it->second;
    }
    std::unique_lock lock(g_table_mutex);
    auto it = g_table_cache.find(m);
    if (it != g_table_cache.end()) return it->second;
    auto t = build_table(m);
    g_table_cache.emplace(m, t);
    return t;
}

}  // namespace detail

CycloElement::CycloElement(unsigned m)
    : table_(detail::cyclo_table(m)), coeffs_(table_->phi, Rational(0)) {}

CycloElement CycloElement::from_rational(unsigned m, const Rational& c) {
    CycloElement x(m);
    x.coeffs_[0] = c;
    return x;
}

CycloElement CycloElement::root_power(unsigned m, std::int64_t k) {
    CycloElement x(m);
    std::int64_t kk = k % static_cast<std::int64_t>(m);
    if (kk < 0) kk += m;
    const unsigned phi = x.table_->phi;
    if (static_cast<unsigned>(kk) < phi) {
        x.coeffs_[static_cast<std::size_t>(kk)] = Rational(1);
    } else {
        const auto& row = x.table_->pow_rows[static_cast<std::size_t>(kk) - phi];
        for (unsigned i = 0; i < phi; ++i) x.coeffs_[i] = Rational(row[i]);
    }
    return x;
}

CycloElement CycloElement::from_root_powers(unsigned m, const std::vector<Rational>& weights) {
    if (weights.size() > m)
        throw std::invalid_argument("from_root_powers: more weights than exponents");
    CycloElement x(m);
    const unsigned phi = x.table_->phi;
    for (std::size_t k = 0; k < weights.size(); ++k) {
        if (weights[k].is_zero()) continue;
        if (k < phi) {
            x.coeffs_[k] += weights[k];
        } else {
            const auto& row = x.table_->pow_rows[k - phi];
            for (unsigned i = 0; i < phi; ++i)
                if (row[i] != 0) x.coeffs_[i] += weights[k] * Rational(row[i]);
        }
    }
    return x;
}

unsigned CycloElement::modulus() const { return table_->m; }
unsigned CycloElement::degree() const { return table_->phi; }

bool CycloElement::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool CycloElement::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return false;
    return true;
}

Rational CycloElement::rational_value() const {
    if (!is_rational()) throw std::domain_error("CycloElement: value is not rational");
    return coeffs_[0];
}

CycloElement CycloElement::operator-() const {
    CycloElement r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

namespace {
void require_same_modulus(const CycloElement& a, const CycloElement& b) {
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("CycloElement: modulus mismatch (" +
                                    std::to_string(a.modulus()) + " vs " +
                                    std::to_string(b.modulus()) + "); lift explicitly");
}
}  // namespace

CycloElement& CycloElement::operator+=(const CycloElement& o) {
    require_same_modulus(*this, o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

CycloElement& CycloElement::operator-=(const CycloElement& o) {
    require_same_modulus(*this, o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

CycloElement operator*(const CycloElement& a, const CycloElement& b) {
    require_same_modulus(a, b);
    const unsigned m = a.modulus();
    const unsigned phi = a.degree();
    // Convolve, folding exponents >= m back by zeta^m = 1; exponents never
    // reach 2m since both factors have degree < phi <= m.
    std::vector<Rational> conv(std::min<std::size_t>(2 * phi - 1, m), Rational(0));
    for (unsigned i = 0; i < phi; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (unsigned j = 0; j < phi; ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            unsigned k = i + j;
            if (k >= m) k -= m;
            conv[k] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return CycloElement::from_root_powers(m, conv);
}

CycloElement CycloElement::scaled(const Rational& c) const {
    CycloElement r(*this);
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

CycloElement CycloElement::inverse() const {
    if (is_zero()) throw std::domain_error("CycloElement: inverse of zero");
    const unsigned phi = table_->phi;
    // Extended Euclid in Q[x] against Phi_m: track u with u*self = gcd mod Phi.
    QPoly r0(table_->poly.size());
    for (std::size_t i = 0; i < r0.size(); ++i) r0[i] = Rational(table_->poly[i]);
    QPoly r1(coeffs_);
    qpoly_trim(r1);
    QPoly u0{Rational(0)}, u1{Rational(1)};
    while (true) {
        qpoly_trim(r1);
        if (r1.size() == 1) break;  // nonzero constant: Phi_m is irreducible
        // (quotient, remainder) of r0 by r1, applied to the u's as well
        QPoly rem = r0;
        QPoly usub = u0;
        while (rem.size() >= r1.size()) {
            Rational c = rem.back() / r1.back();
            std::size_t off = rem.size() - r1.size();
            for (std::size_t j = 0; j < r1.size(); ++j) rem[off + j] -= c * r1[j];
            if (usub.size() < off + u1.size()) usub.resize(off + u1.size(), Rational(0));
            for (std::size_t j = 0; j < u1.size(); ++j) usub[off + j] -= c * u1[j];
            rem.pop_back();
            qpoly_trim(rem);
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(usub);
    }
    Rational inv_c = Rational(1) / r1[0];
    CycloElement result(table_->m);
    for (std::size_t i = 0; i < u1.size() && i < phi; ++i) result.coeffs_[i] = u1[i] * inv_c;
    if (u1.size() > phi) {
        // Reduce high-degree cofactor terms (possible after the final step).
        std::vector<Rational> weights(u1.size(), Rational(0));
        for (std::size_t i = 0; i < u1.size(); ++i) weights[i] = u1[i] * inv_c;
        result = from_root_powers(table_->m, weights);
    }
    return result;
}

CycloElement CycloElement::galois_image(std::uint64_t a) const {
    const unsigned m = table_->m;
    a %= m;
    if (std::gcd<std::uint64_t>(a, m) != 1)
        throw std::invalid_argument("galois_image: exponent not coprime to modulus");
    std::vector<Rational> weights(m, Rational(0));
    for (unsigned i = 0; i < table_->phi; ++i) {
        if (coeffs_[i].is_zero()) continue;
        weights[static_cast<std::size_t>(a * i % m)] += coeffs_[i];
    }
    return from_root_powers(m, weights);
}

CycloElement CycloElement::conjugated() const {
    const unsigned m = table_->m;
    if (m <= 2) return *this;
    return galois_image(m - 1);
}

bool operator==(const CycloElement& a, const CycloElement& b) {
    return a.modulus() == b.modulus() && a.coeffs_ == b.coeffs_;
}

std::string CycloElement::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << coeffs_[i].to_string();
        if (i > 0) os << "*z" << table_->m << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

CycloElement lift_to(const CycloElement& x, unsigned m) {
    const unsigned d = x.modulus();
    if (m % d != 0) throw std::invalid_argument("lift_to: target modulus not a multiple");
    if (m == d) return x;
    const unsigned step = m / d;
    std::vector<Rational> weights(m, Rational(0));
    const auto& c = x.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero()) weights[i * step] += c[i];
    return CycloElement::from_root_powers(m, weights);
}

CycloElement trace_down(const CycloElement& x, unsigned d) {
    const unsigned m = x.modulus();
    if (d < 1 || m % d != 0) throw std::invalid_argument("trace_down: target must divide modulus");
    if (d == m) return x;
    // Sum over Gal(Q(zeta_m)/Q(zeta_d)) = {a mod m : gcd(a,m)=1, a = 1 mod d}.
    CycloElement acc = CycloElement::zero(m);
    for (unsigned a = 1; a < m; a += d)
        if (std::gcd(a, m) == 1) acc += x.galois_image(a);
    if (d == 1 || d == 2) {
        // phi(d) = 1: the trace is a rational constant.
        return CycloElement::from_rational(d, acc.rational_value());
    }
    // Express acc in the power basis of Q(zeta_d) inside Q(zeta_m).
    const unsigned phi_d = static_cast<unsigned>(euler_phi(d));
    std::vector<std::vector<Rational>> cols(phi_d);
    for (unsigned j = 0; j < phi_d; ++j)
        cols[j] = lift_to(CycloElement::root_power(d, j), m).coeffs();
    auto sol = solve_rational(cols, acc.coeffs());
    if (!sol) throw std::logic_error("trace_down: trace does not lie in the subfield");
    CycloElement r(d);
    std::vector<Rational> w = *sol;
    w.resize(phi_d, Rational(0));
    return CycloElement::from_root_powers(d, w);
}

ComplexApprox embed(const CycloElement& x, unsigned precision_bits) {
    if (precision_bits < 53) throw std::invalid_argument("embed: precision_bits must be >= 53");
    ComplexApprox acc(precision_bits);
    const unsigned m = x.modulus();
    const auto& c = x.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k].is_zero()) continue;
        Real re = Real::cos_2pi(static_cast<long>(k), m, precision_bits);
        Real im = Real::sin_2pi(static_cast<long>(k), m, precision_bits);
        re.mul_rational(c[k]);
        im.mul_rational(c[k]);
        acc.re += re;
        acc.im += im;
    }
    return acc;
}

}  // namespace cyclohodge
