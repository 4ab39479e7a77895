#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <memory>
#include <set>

#include "cyclohodge/arith.hpp"
#include "cyclohodge/characters.hpp"

using namespace cyclohodge;

namespace {

std::shared_ptr<const ResidueGroup> group_of(std::uint64_t p, unsigned r) {
    return std::make_shared<ResidueGroup>(ResidueGroup::build(p, r));
}

// Exact sum of chi over a set of residues, in Q(zeta_order).
CycloElement char_sum(const DirichletCharacter& chi, const std::vector<std::uint64_t>& as) {
    CycloElement acc = CycloElement::zero(static_cast<unsigned>(chi.order()));
    for (auto a : as) acc += chi.eval(a);
    return acc;
}

}  // namespace

TEST_CASE("character counts and orders") {
    CHECK(all_characters(group_of(2, 1)).size() == 1);

    auto chars5 = all_characters(group_of(5, 1));
    REQUIRE(chars5.size() == 4);
    std::multiset<std::uint64_t> orders;
    for (const auto& chi : chars5) orders.insert(chi.order());
    CHECK(orders == std::multiset<std::uint64_t>{1, 2, 4, 4});

    auto chars8 = all_characters(group_of(2, 3));
    REQUIRE(chars8.size() == 4);
    for (const auto& chi : chars8) CHECK(chi.order() <= 2);
}

TEST_CASE("evaluation") {
    auto g5 = group_of(5, 1);
    DirichletCharacter trivial(g5, {0});
    CHECK(trivial.eval(7) == CycloElement::one(1));
    CHECK(trivial.eval(5).is_zero());  // non-unit

    // chi(2) = zeta_4  =>  chi(3) = chi(2^3) = zeta_4^3 = -zeta_4
    DirichletCharacter chi(g5, {1});
    CHECK(chi.eval(2) == CycloElement::root(4));
    CHECK(chi.eval(3) == CycloElement::root_power(4, 3));
    CHECK(chi.eval(3) == -CycloElement::root(4));
    CHECK(chi.eval(10).is_zero());

    // multiplicativity on all unit pairs, all characters, q in {9, 16}
    for (auto g : {group_of(3, 2), group_of(2, 4)}) {
        for (const auto& c : all_characters(g)) {
            for (auto a : g->elements())
                for (auto b : g->elements())
                    CHECK(c.eval(a * b % g->q()) == c.eval(a) * c.eval(b));
        }
    }
}

TEST_CASE("parity") {
    auto g5 = group_of(5, 1);
    CHECK_FALSE(DirichletCharacter(g5, {0}).is_odd());
    DirichletCharacter chi(g5, {1});
    CHECK(chi.is_odd());  // chi(4) = zeta_4^2 = -1
    CHECK(chi.eval(4) == CycloElement::from_rational(4, Rational(-1)));

    // exactly phi(9)/2 = 3 odd characters mod 9
    unsigned odd = 0;
    for (const auto& c : all_characters(group_of(3, 2)))
        if (c.is_odd()) ++odd;
    CHECK(odd == 3);
}

TEST_CASE("orthogonality and parity balance for every q <= 128") {
    for (std::uint64_t p = 2; p <= 127; ++p) {
        if (!is_prime(p)) continue;
        for (std::uint64_t q = p; q <= 128; q *= p) {
            unsigned r = 0;
            for (std::uint64_t t = q; t > 1; t /= p) ++r;
            auto g = group_of(p, r);
            long parity_sum = 0;
            for (const auto& chi : all_characters(g)) {
                CycloElement s = char_sum(chi, g->elements());
                if (chi.is_trivial()) {
                    CHECK(s == CycloElement::from_rational(1, Rational(static_cast<long>(g->phi()))));
                } else {
                    CHECK(s.is_zero());
                }
                parity_sum += chi.is_odd() ? -1 : 1;
            }
            if (q > 2) CHECK(parity_sum == 0);  // equal counts of odd and even
            if (p == 2 && q == 2) break;
        }
    }
}

TEST_CASE("conductors mod 9") {
    auto g9 = group_of(3, 2);
    std::map<std::uint64_t, std::uint64_t> conductor_by_order;
    for (const auto& chi : all_characters(g9)) conductor_by_order[chi.order()] = chi.conductor();
    CHECK(conductor_by_order[1] == 1);  // trivial
    CHECK(conductor_by_order[2] == 3);  // lifted Legendre mod 3
    CHECK(conductor_by_order[6] == 9);
    CHECK(conductor_by_order[3] == 9);
}

TEST_CASE("restrict and induce") {
    auto g9 = group_of(3, 2);
    auto g3 = group_of(3, 1);

    // primitive characters restrict to themselves
    for (const auto& chi : all_characters(g9)) {
        if (!chi.is_primitive()) continue;
        CHECK(chi.restrict_to_conductor() == chi);
    }

    // Legendre mod 3 induced to q = 9: values alternate with a mod 3
    DirichletCharacter leg3 = legendre_character(g3);
    DirichletCharacter lifted = induce(leg3, g9);
    std::vector<int> expected{1, -1, 1, -1, 1, -1};  // at a = 1,2,4,5,7,8
    std::size_t idx = 0;
    for (auto a : g9->elements()) {
        CycloElement v = lifted.eval(a);
        CHECK(v == CycloElement::from_rational(static_cast<unsigned>(lifted.order()),
                                               Rational(expected[idx])));
        // oracle: the value only depends on a mod 3
        CHECK(v == lift_to(leg3.eval(a % 3), static_cast<unsigned>(lifted.order())));
        ++idx;
    }
    CHECK(lifted.eval(3).is_zero());
    CHECK(lifted.eval(6).is_zero());
    CHECK(lifted.conductor() == 3);

    // round trip: induce(restrict(chi), q) == chi for every chi
    for (auto g : {group_of(3, 3), group_of(2, 4), group_of(5, 2)}) {
        for (const auto& chi : all_characters(g)) {
            DirichletCharacter down = chi.restrict_to_conductor();
            CHECK(down.is_primitive());
            CHECK(induce(down, g) == chi);
            // values agree on all units of the larger modulus
            for (auto a : g->elements()) {
                auto ka = chi.value_exponent(a);
                auto kb = down.value_exponent(a);
                REQUIRE(ka.has_value());
                REQUIRE(kb.has_value());
                CHECK(*ka * down.order() == *kb * chi.order());
            }
        }
    }

    // odd characters restrict to odd characters
    for (const auto& chi : all_characters(group_of(3, 3))) {
        if (!chi.is_odd() || chi.is_primitive()) continue;
        CHECK(chi.restrict_to_conductor().is_odd());
    }

    CHECK_THROWS_AS(induce(legendre_character(g3), group_of(5, 1)), std::invalid_argument);
}

TEST_CASE("modulus-1 character") {
    DirichletCharacter one = DirichletCharacter::modulus_one();
    CHECK(one.modulus() == 1);
    CHECK(one.order() == 1);
    CHECK(one.conductor() == 1);
    CHECK(one.eval(0) == CycloElement::one(1));
    CHECK(one.eval(12) == CycloElement::one(1));
    CHECK_FALSE(one.is_odd());

    // trivial character restricts down to it, and induces back
    auto g9 = group_of(3, 2);
    DirichletCharacter trivial(g9, {0});
    CHECK(trivial.conductor() == 1);
    CHECK(trivial.restrict_to_conductor() == one);
    CHECK(induce(one, g9) == trivial);
}

TEST_CASE("legendre character is the quadratic one") {
    auto g7 = group_of(7, 1);
    DirichletCharacter leg = legendre_character(g7);
    CHECK(leg.order() == 2);
    for (std::uint64_t a = 1; a < 7; ++a) {
        int ls = legendre_symbol(a, 7);
        CHECK(leg.eval(a) == CycloElement::from_rational(2, Rational(ls)));
    }
    CHECK_THROWS_AS(legendre_character(group_of(2, 3)), std::invalid_argument);
    CHECK_THROWS_AS(legendre_character(group_of(3, 2)), std::invalid_argument);
}
