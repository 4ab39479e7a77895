// Structure of the unit group (Z/qZ)^x for q = p^r: enumeration, canonical
// generators, discrete-log tables, and the kernels of reduction mod p^j.
//
// Generator conventions (deterministic, so identical across runs):
//   odd p      one generator, the smallest primitive root mod p, bumped by
//              +p when its order mod p^2 drops (then it generates mod p^r
//              for every r)
//   q = 2      trivial group
//   q = 4      generator -1 (== 3), order 2
//   q = 2^r,   generators -1 (order 2) and 5 (order 2^{r-2})
//   r >= 3
//
// Immutable after build; all queries are pure and thread-safe.
#pragma once

#include <cstdint>
#include <vector>

namespace cyclohodge {

class ResidueGroup {
public:
    struct Generator {
        std::uint64_t residue;
        std::uint64_t order;
    };

    static ResidueGroup build(std::uint64_t p, unsigned r);

    std::uint64_t p() const { return p_; }
    unsigned r() const { return r_; }
    std::uint64_t q() const { return q_; }
    std::uint64_t phi() const { return static_cast<std::uint64_t>(elements_.size()); }

    const std::vector<std::uint64_t>& elements() const { return elements_; }
    const std::vector<Generator>& generators() const { return generators_; }

    bool is_unit(std::uint64_t a) const { return (a % q_) != 0 && (a % p_) != 0; }

    // Exponent vector of a over the generators; throws if a is not a unit.
    const std::vector<std::uint64_t>& dlog(std::uint64_t a) const;

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % q_; }
    std::uint64_t inv(std::uint64_t a) const;

    // G_j = {a : a = 1 mod p^j}, the Galois group of the top of the
    // cyclotomic tower over level j; sorted, size phi(p^r)/phi(p^j).
    std::vector<std::uint64_t> subgroup_mod_level(unsigned j) const;

private:
    ResidueGroup() = default;

    std::uint64_t p_ = 0;
    unsigned r_ = 0;
    std::uint64_t q_ = 0;
    std::vector<std::uint64_t> elements_;
    std::vector<Generator> generators_;
    std::vector<std::vector<std::uint64_t>> dlog_;  // indexed by residue; empty for non-units
};

}  // namespace cyclohodge
