#include "cyclohodge/characters.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cyclohodge/arith.hpp"

namespace cyclohodge {

DirichletCharacter::DirichletCharacter(std::shared_ptr<const ResidueGroup> group,
                                       std::vector<std::uint64_t> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)) {
    if (!group_) throw std::invalid_argument("DirichletCharacter: null group");
    const auto& gens = group_->generators();
    if (exponents_.size() != gens.size())
        throw std::invalid_argument("DirichletCharacter: exponent count != generator count");
    order_ = 1;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        exponents_[i] %= gens[i].order;
        std::uint64_t oi = gens[i].order / std::gcd(exponents_[i], gens[i].order);
        order_ = std::lcm(order_, oi);
    }
    // Conductor: smallest p-power d | q with chi trivial on {a = 1 mod d}.
    conductor_ = group_->q();
    for (unsigned j = 0; j <= group_->r(); ++j) {
        bool trivial_on_kernel = true;
        if (j == 0) {
            trivial_on_kernel = (order_ == 1);
        } else {
            for (auto u : group_->subgroup_mod_level(j)) {
                if (value_exponent(u).value() != 0) {
                    trivial_on_kernel = false;
                    break;
                }
            }
        }
        if (trivial_on_kernel) {
            std::uint64_t d = 1;
            for (unsigned i = 0; i < j; ++i) d *= group_->p();
            conductor_ = d;
            break;
        }
    }
}

DirichletCharacter DirichletCharacter::modulus_one() {
    DirichletCharacter chi;
    chi.order_ = 1;
    chi.conductor_ = 1;
    return chi;
}

const ResidueGroup& DirichletCharacter::group() const {
    if (!group_) throw std::logic_error("modulus-1 character has no residue group");
    return *group_;
}

std::optional<std::uint64_t> DirichletCharacter::value_exponent(std::uint64_t a) const {
    if (!group_) return 0;  // modulus 1: everything is a unit, value 1
    a %= group_->q();
    if (!group_->is_unit(a)) return std::nullopt;
    const auto& gens = group_->generators();
    const auto& v = group_->dlog(a);
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        // chi(g_i) = zeta_{o_i}^{e_i} = zeta_order^{order*e_i/o_i} (exact division)
        std::uint64_t t = order_ * exponents_[i] / gens[i].order % order_;
        k = (k + t * (v[i] % order_)) % order_;
    }
    return k;
}

CycloElement DirichletCharacter::eval(std::uint64_t a) const {
    auto k = value_exponent(a);
    unsigned m = static_cast<unsigned>(order_);
    if (!k) return CycloElement::zero(m);
    return CycloElement::root_power(m, static_cast<std::int64_t>(*k));
}

bool DirichletCharacter::is_odd() const {
    if (!group_ || group_->q() <= 2) return false;
    auto k = value_exponent(group_->q() - 1);
    // chi(-1) is +-1; -1 corresponds to exponent order/2.
    return *k != 0;
}

DirichletCharacter DirichletCharacter::conjugate_char() const {
    if (!group_) return *this;
    const auto& gens = group_->generators();
    std::vector<std::uint64_t> e(exponents_.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = (gens[i].order - exponents_[i]) % gens[i].order;
    return DirichletCharacter(group_, std::move(e));
}

DirichletCharacter DirichletCharacter::restrict_to_conductor() const {
    if (conductor_ == modulus()) return *this;
    if (conductor_ == 1) return modulus_one();
    unsigned j = 0;
    std::uint64_t d = 1;
    while (d < conductor_) { d *= group_->p(); ++j; }
    auto sub = std::make_shared<ResidueGroup>(ResidueGroup::build(group_->p(), j));
    std::vector<std::uint64_t> e;
    for (const auto& gen : sub->generators()) {
        // gen.residue is coprime to p, hence a unit mod q as well; the value
        // of chi there determines chi_star on this generator.
        std::uint64_t k = value_exponent(gen.residue).value();
        // zeta_order^k must be a gen.order-th root of unity for chi_star to
        // be well defined; conductor minimality guarantees it.
        if (k * gen.order % order_ != 0)
            throw std::logic_error("restrict_to_conductor: value not compatible");
        e.push_back(k * gen.order / order_ % gen.order);
    }
    return DirichletCharacter(std::move(sub), std::move(e));
}

std::string DirichletCharacter::label() const {
    std::ostringstream os;
    os << "chi[";
    for (std::size_t i = 0; i < exponents_.size(); ++i)
        os << (i ? "," : "") << exponents_[i];
    os << "]@" << modulus();
    return os.str();
}

std::vector<DirichletCharacter> all_characters(std::shared_ptr<const ResidueGroup> group) {
    if (!group) throw std::invalid_argument("all_characters: null group");
    const auto& gens = group->generators();
    std::vector<DirichletCharacter> out;
    std::vector<std::uint64_t> exps(gens.size(), 0);
    while (true) {
        out.emplace_back(group, exps);
        bool done = true;
        for (std::size_t i = gens.size(); i-- > 0;) {
            if (++exps[i] < gens[i].order) {
                done = false;
                break;
            }
            exps[i] = 0;
        }
        if (done) break;
    }
    return out;
}

DirichletCharacter induce(const DirichletCharacter& chi_star,
                          std::shared_ptr<const ResidueGroup> target) {
    if (!target) throw std::invalid_argument("induce: null target group");
    const std::uint64_t d = chi_star.modulus();
    if (target->q() % d != 0)
        throw std::invalid_argument("induce: target modulus not a multiple of the conductor");
    if (d > 1 && chi_star.group().p() != target->p())
        throw std::invalid_argument("induce: different primes");
    std::vector<std::uint64_t> e;
    for (const auto& gen : target->generators()) {
        std::uint64_t k = chi_star.value_exponent(gen.residue).value();
        if (k * gen.order % chi_star.order() != 0)
            throw std::logic_error("induce: incompatible value order");
        e.push_back(k * gen.order / chi_star.order() % gen.order);
    }
    return DirichletCharacter(std::move(target), std::move(e));
}

DirichletCharacter legendre_character(std::shared_ptr<const ResidueGroup> group) {
    if (!group || group->p() == 2 || group->r() != 1)
        throw std::invalid_argument("legendre_character: modulus must be an odd prime");
    std::vector<std::uint64_t> e{group->generators()[0].order / 2};
    return DirichletCharacter(std::move(group), std::move(e));
}

}  // namespace cyclohodge
