// Dirichlet characters of (Z/qZ)^x for q a prime power.
//
// A character is identified by its exponent vector with respect to the
// canonical generators of the group (equality is exponent-vector equality);
// values live in the minimal field Q(zeta_order) and are lifted to larger
// cyclotomic fields only at use sites. Evaluation follows the Dirichlet
// convention: chi(a) = 0 whenever p | a.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "cyclohodge/cyclotomic.hpp"
#include "cyclohodge/residue_group.hpp"

namespace cyclohodge {

class DirichletCharacter {
public:
    DirichletCharacter(std::shared_ptr<const ResidueGroup> group,
                       std::vector<std::uint64_t> exponents);

    // The (unique) character of modulus 1; evaluates to 1 everywhere.
    static DirichletCharacter modulus_one();

    std::uint64_t modulus() const { return group_ ? group_->q() : 1; }
    const std::vector<std::uint64_t>& exponents() const { return exponents_; }
    std::uint64_t order() const { return order_; }
    std::uint64_t conductor() const { return conductor_; }
    bool is_primitive() const { return conductor_ == modulus(); }
    bool is_trivial() const { return order_ == 1; }
    const ResidueGroup& group() const;

    // chi(a) = zeta_order^k for units; nullopt when gcd(a, q) > 1.
    std::optional<std::uint64_t> value_exponent(std::uint64_t a) const;

    // Exact value in Q(zeta_order); zero for non-units.
    CycloElement eval(std::uint64_t a) const;

    // chi(-1) = -1. Requires q > 1 (modulus-1 character is even).
    bool is_odd() const;

    DirichletCharacter conjugate_char() const;

    // The primitive character mod conductor() inducing this one.
    DirichletCharacter restrict_to_conductor() const;

    friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
        return a.modulus() == b.modulus() && a.exponents_ == b.exponents_;
    }
    friend bool operator!=(const DirichletCharacter& a, const DirichletCharacter& b) {
        return !(a == b);
    }

    // Short stable label, e.g. "chi[1,3]@16", for reports and witnesses.
    std::string label() const;

private:
    DirichletCharacter() = default;

    std::shared_ptr<const ResidueGroup> group_;  // null for modulus 1
    std::vector<std::uint64_t> exponents_;       // reduced mod generator orders
    std::uint64_t order_ = 1;
    std::uint64_t conductor_ = 1;
};

// All phi(q) characters of the group, in lexicographic exponent order.
std::vector<DirichletCharacter> all_characters(std::shared_ptr<const ResidueGroup> group);

// The character mod target->q() whose values agree with chi_star on units;
// target modulus must be a p-power multiple of chi_star's modulus.
DirichletCharacter induce(const DirichletCharacter& chi_star,
                          std::shared_ptr<const ResidueGroup> target);

// The unique quadratic character mod an odd prime p (the Legendre symbol).
DirichletCharacter legendre_character(std::shared_ptr<const ResidueGroup> group);

}  // namespace cyclohodge
