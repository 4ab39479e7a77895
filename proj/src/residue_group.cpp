#include "cyclohodge/residue_group.hpp"

#include <stdexcept>

#include "cyclohodge/arith.hpp"

namespace cyclohodge {

namespace {

// Multiplicative order of a mod m (m small; brute force).
std::uint64_t order_mod(std::uint64_t a, std::uint64_t m) {
    std::uint64_t x = a % m, ord = 1;
    while (x != 1) {
        x = mul_mod(x, a, m);
        ++ord;
        if (ord > m) throw std::logic_error("order_mod: not a unit");
    }
    return ord;
}

std::uint64_t smallest_primitive_root(std::uint64_t p) {
    const std::uint64_t target = p - 1;
    for (std::uint64_t g = 2; g < p; ++g) {
        if (order_mod(g, p) == target) return g;
    }
    throw std::logic_error("no primitive root found");
}

}  // namespace

ResidueGroup ResidueGroup::build(std::uint64_t p, unsigned r) {
    if (!is_prime(p)) throw std::invalid_argument("ResidueGroup: p must be prime");
    if (r < 1) throw std::invalid_argument("ResidueGroup: r must be positive");

    ResidueGroup g;
    g.p_ = p;
    g.r_ = r;
    g.q_ = 1;
    for (unsigned i = 0; i < r; ++i) g.q_ *= p;
    const std::uint64_t q = g.q_;

    for (std::uint64_t a = 1; a < q; ++a)
        if (a % p != 0) g.elements_.push_back(a);

    if (q == 2) {
        // trivial group
    } else if (p == 2 && r == 2) {
        g.generators_.push_back({3, 2});  // -1 mod 4
    } else if (p == 2) {
        g.generators_.push_back({q - 1, 2});
        g.generators_.push_back({5, q / 4});  // order 2^{r-2}
    } else {
        std::uint64_t root = smallest_primitive_root(p);
        if (r > 1 && pow_mod(root, p - 1, p * p) == 1) root += p;
        g.generators_.push_back({root % q, static_cast<std::uint64_t>(euler_phi(q))});
    }

    // Fill the dlog table by walking all generator-power products
    // (odometer over exponent tuples, product maintained incrementally).
    g.dlog_.resize(q);
    std::vector<char> seen(q, 0);
    const std::size_t ngen = g.generators_.size();
    std::vector<std::uint64_t> exps(ngen, 0);
    std::uint64_t value = 1;
    std::uint64_t count = 0;
    while (true) {
        if (seen[value])
            throw std::logic_error("ResidueGroup: generators do not give unique products");
        seen[value] = 1;
        g.dlog_[value] = exps;
        ++count;
        bool done = true;
        for (std::size_t i = ngen; i-- > 0;) {
            ++exps[i];
            value = mul_mod(value, g.generators_[i].residue, q);
            if (exps[i] < g.generators_[i].order) {
                done = false;
                break;
            }
            // digit wraps: residue^order == 1, so value is already back
            exps[i] = 0;
        }
        if (done) break;
    }
    if (count != g.phi())
        throw std::logic_error("ResidueGroup: dlog table does not cover the group");
    return g;
}

const std::vector<std::uint64_t>& ResidueGroup::dlog(std::uint64_t a) const {
    a %= q_;
    if (!is_unit(a)) throw std::invalid_argument("dlog: not a unit mod " + std::to_string(q_));
    return dlog_[a];
}

std::uint64_t ResidueGroup::inv(std::uint64_t a) const {
    return inv_mod(a % q_, q_);
}

std::vector<std::uint64_t> ResidueGroup::subgroup_mod_level(unsigned j) const {
    if (j < 1 || j > r_) throw std::invalid_argument("subgroup_mod_level: level out of range");
    std::uint64_t pj = 1;
    for (unsigned i = 0; i < j; ++i) pj *= p_;
    std::vector<std::uint64_t> out;
    for (std::uint64_t a = 1; a < q_; a += pj)
        if (a % p_ != 0) out.push_back(a);
    if (out.empty()) out.push_back(1);  // j == r and q == pj: the trivial subgroup
    return out;
}

}  // namespace cyclohodge
