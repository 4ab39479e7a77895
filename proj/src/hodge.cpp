#include "cyclohodge/hodge.hpp"

#include <sstream>

#include "cyclohodge/arith.hpp"
#include "cyclohodge/galmod.hpp"

namespace cyclohodge {

OddFunction CMTypeRecord::derived_h() const {
    std::vector<Rational> v(q, Rational(0));
    for (const auto& [a, na] : n_sigma)
        v[a] = Rational(static_cast<long>(d), 2) - Rational(static_cast<long>(na));
    return OddFunction(q, std::move(v));
}

CMTypeRecord cm_type(std::uint64_t n, std::uint64_t q) {
    auto pr = factor_prime_power(q);
    if (!pr) throw std::invalid_argument("cm_type: q must be a prime power");
    if (n < 2) throw std::invalid_argument("cm_type: n must be at least 2");
    if (n % pr->first == 0) throw std::invalid_argument("cm_type: p divides n");
    CMTypeRecord rec;
    rec.q = q;
    rec.n = n;
    rec.d = n - 1;
    for (std::uint64_t a = 1; a < q; ++a) {
        if (a % pr->first == 0) continue;
        rec.n_sigma[a] = n * a / q;
    }
    for (const auto& [a, na] : rec.n_sigma) {
        if (na > rec.d)
            throw std::logic_error("cm_type: multiplicity exceeds d at a=" + std::to_string(a));
        if (na + rec.n_sigma.at(q - a) != rec.d)
            throw std::logic_error("cm_type: conjugate multiplicities do not pair at a=" +
                                   std::to_string(a));
    }
    return rec;
}

CenterReport center_report(std::uint64_t n, std::uint64_t p, unsigned r,
                           bool assume_large_galois) {
    if (n < 2) throw std::invalid_argument("center_report: n must be at least 2");
    if (n % p == 0) throw std::invalid_argument("center_report: p divides n");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < r; ++i) q *= p;
    if (q <= 2) throw std::invalid_argument("center_report: p^r must exceed 2");

    TowerFunction tower(n, p, r);
    CenterReport rep;
    rep.p = p;
    rep.r = r;
    rep.n = n;
    rep.assume_large_galois = assume_large_galois;

    std::ostringstream err;
    std::uint64_t pj = 1;
    for (unsigned j = 1; j <= r; ++j) {
        pj *= p;
        unsigned rank = translates_rank(tower.level(j));
        rep.level_dims.push_back(rank);
        if (rank != odd_space_dim(pj))
            err << "level " << j << ": rank " << rank << " != " << odd_space_dim(pj) << "; ";
    }
    auto tc = tower_check(tower);
    if (!tc.all_ok()) {
        err << "trace relation fails:";
        for (const auto& f : tc.failures()) err << " " << f;
        err << "; ";
    }
    rep.tower_dim = rep.level_dims.back();
    rep.predicted = odd_space_dim(q);
    rep.ambient_dim = 0;
    pj = 1;
    for (unsigned j = 1; j <= r; ++j) {
        pj *= p;
        rep.ambient_dim += odd_space_dim(pj);
    }
    rep.exotic_gap = rep.ambient_dim > rep.tower_dim;
    const bool gap_predicted = (p != 2 && r >= 2) || (p == 2 && r >= 3);
    if (rep.tower_dim != rep.predicted)
        err << "tower_dim " << rep.tower_dim << " != predicted " << rep.predicted << "; ";
    if (rep.exotic_gap != gap_predicted)
        err << "exotic_gap " << rep.exotic_gap << " != predicted " << gap_predicted << "; ";

    rep.subvariety_bound = (p == 2 && r < 3) ? 0 : subvariety_bound(p, r);
    rep.jacobian_dim = jacobian_dim(n, q);

    if (!err.str().empty()) {
        std::ostringstream what;
        what << "center_report(n=" << n << ", p=" << p << ", r=" << r << "): " << err.str();
        throw theorem_violation(what.str());
    }
    return rep;
}

unsigned subvariety_bound(std::uint64_t p, unsigned r) {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < r; ++i) q *= p;
    if (q <= 2) throw std::invalid_argument("subvariety_bound: p^r must exceed 2");
    if (p == 2) {
        if (r < 3) throw std::invalid_argument("subvariety_bound: p = 2 requires r >= 3");
        return 1u << (r - 3);
    }
    return static_cast<unsigned>(euler_phi((p - 1) * (q / p)));
}

bool elliptic_split_check(std::uint64_t d) {
    for (auto q : divisors(d))
        if ((q >= 5 && is_prime(q)) || q == 9 || q == 16) return true;
    return false;
}

bool elliptic_split_check_statement(std::uint64_t d) {
    return d >= 5 && d != 6 && d != 8 && d != 12 && d != 24;
}

std::uint64_t jacobian_dim(std::uint64_t n, std::uint64_t q) {
    auto pr = factor_prime_power(q);
    if (!pr) throw std::invalid_argument("jacobian_dim: q must be a prime power");
    if (n < 2) throw std::invalid_argument("jacobian_dim: n must be at least 2");
    if (n % pr->first == 0) throw std::invalid_argument("jacobian_dim: p divides n");
    std::uint64_t prod = (n - 1) * (q - 1);
    if (prod % 2 != 0) throw std::logic_error("jacobian_dim: (n-1)(q-1) is odd");
    return prod / 2;
}

}  // namespace cyclohodge
