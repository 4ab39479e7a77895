#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "cyclohodge/arith.hpp"
#include "cyclohodge/residue_group.hpp"

using namespace cyclohodge;

namespace {

// Reconstruct each element from its exponent vector, oracle-style.
std::uint64_t reconstruct(const ResidueGroup& g, const std::vector<std::uint64_t>& exps) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < exps.size(); ++i)
        v = v * pow_mod(g.generators()[i].residue, exps[i], g.q()) % g.q();
    return v;
}

std::uint64_t element_order(std::uint64_t a, std::uint64_t q) {
    std::uint64_t x = a % q, ord = 1;
    while (x != 1) {
        x = x * a % q;
        ++ord;
    }
    return ord;
}

}  // namespace

TEST_CASE("cyclic case: q = 5") {
    auto g = ResidueGroup::build(5, 1);
    CHECK(g.q() == 5);
    CHECK(g.elements() == std::vector<std::uint64_t>{1, 2, 3, 4});
    REQUIRE(g.generators().size() == 1);
    CHECK(g.generators()[0].residue == 2);
    CHECK(g.generators()[0].order == 4);
    // exhaustive order check: 2 really is a primitive root
    CHECK(element_order(2, 5) == 4);
    CHECK(element_order(g.generators()[0].residue, 5) == euler_phi(5));
}

TEST_CASE("q = 2 is trivial") {
    auto g = ResidueGroup::build(2, 1);
    CHECK(g.q() == 2);
    CHECK(g.phi() == 1);
    CHECK(g.generators().empty());
    CHECK(g.dlog(1).empty());
}

TEST_CASE("q = 4 and q = 16") {
    auto g4 = ResidueGroup::build(2, 2);
    REQUIRE(g4.generators().size() == 1);
    CHECK(g4.generators()[0].residue == 3);
    CHECK(g4.generators()[0].order == 2);

    auto g16 = ResidueGroup::build(2, 4);
    REQUIRE(g16.generators().size() == 2);
    CHECK(g16.generators()[0].residue == 15);  // -1
    CHECK(g16.generators()[0].order == 2);
    CHECK(g16.generators()[1].residue == 5);
    CHECK(g16.generators()[1].order == 4);
    CHECK(2 * 4 == euler_phi(16));
    // exhaustive: the subgroup <5> has index 2 and avoids -1
    std::set<std::uint64_t> pow5;
    for (std::uint64_t e = 0; e < 4; ++e) pow5.insert(pow_mod(5, e, 16));
    CHECK(pow5.size() == 4);
    CHECK(pow5.count(15) == 0);
}

TEST_CASE("dlog examples") {
    auto g5 = ResidueGroup::build(5, 1);
    CHECK(g5.dlog(1) == std::vector<std::uint64_t>{0});
    CHECK(g5.dlog(3) == std::vector<std::uint64_t>{3});  // 2^3 = 8 = 3 mod 5

    auto g8 = ResidueGroup::build(2, 3);
    CHECK(g8.dlog(3) == std::vector<std::uint64_t>{1, 1});  // (-1)*5 = -5 = 3 mod 8
    CHECK(g8.dlog(1) == std::vector<std::uint64_t>{0, 0});
    CHECK_THROWS_AS(g8.dlog(4), std::invalid_argument);
    CHECK_THROWS_AS(g8.dlog(0), std::invalid_argument);
}

TEST_CASE("dlog is additive and bijective for every q <= 1024") {
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
        std::uint64_t q = p;
        for (unsigned r = 1; q <= 1024; ++r, q *= p) {
            auto g = ResidueGroup::build(p, r);
            REQUIRE(g.phi() == euler_phi(q));
            std::uint64_t order_product = 1;
            for (const auto& gen : g.generators()) order_product *= gen.order;
            REQUIRE(order_product == g.phi());
            std::set<std::uint64_t> seen;
            for (auto a : g.elements()) {
                REQUIRE(reconstruct(g, g.dlog(a)) == a);
                seen.insert(a);
            }
            REQUIRE(seen.size() == g.phi());
            if (p != 2) {
                REQUIRE(g.generators().size() == 1);
                REQUIRE(g.generators()[0].order == euler_phi(q));
            }
            // additivity spot checks
            const auto& els = g.elements();
            for (std::size_t i = 0; i < els.size(); i += 5) {
                for (std::size_t j = 1; j < els.size(); j += 7) {
                    auto va = g.dlog(els[i]), vb = g.dlog(els[j]);
                    auto vc = g.dlog(els[i] * els[j] % q);
                    for (std::size_t k = 0; k < va.size(); ++k)
                        REQUIRE((va[k] + vb[k]) % g.generators()[k].order == vc[k]);
                }
            }
        }
    }
    // every prime below 1024 as well, not just small bases
    for (std::uint64_t p = 37; p <= 1021; ++p) {
        if (!is_prime(p)) continue;
        auto g = ResidueGroup::build(p, 1);
        REQUIRE(g.phi() == p - 1);
        REQUIRE(reconstruct(g, g.dlog(p - 1)) == p - 1);
    }
}

TEST_CASE("subgroups of the reduction maps") {
    auto g9 = ResidueGroup::build(3, 2);
    CHECK(g9.subgroup_mod_level(1) == std::vector<std::uint64_t>{1, 4, 7});
    CHECK(g9.subgroup_mod_level(2) == std::vector<std::uint64_t>{1});

    auto g16 = ResidueGroup::build(2, 4);
    CHECK(g16.subgroup_mod_level(2) == std::vector<std::uint64_t>{1, 5, 9, 13});
    CHECK(g16.subgroup_mod_level(4) == std::vector<std::uint64_t>{1});
    CHECK_THROWS_AS(g16.subgroup_mod_level(0), std::invalid_argument);
    CHECK_THROWS_AS(g16.subgroup_mod_level(5), std::invalid_argument);

    // closure under multiplication and the index formula
    for (auto [p, r] : std::vector<std::pair<std::uint64_t, unsigned>>{{3, 3}, {2, 5}, {5, 2}}) {
        auto g = ResidueGroup::build(p, r);
        for (unsigned j = 1; j <= r; ++j) {
            auto sub = g.subgroup_mod_level(j);
            std::uint64_t pj = 1;
            for (unsigned i = 0; i < j; ++i) pj *= p;
            REQUIRE(sub.size() == euler_phi(g.q()) / euler_phi(pj));
            std::set<std::uint64_t> s(sub.begin(), sub.end());
            for (auto a : sub)
                for (auto b : sub) REQUIRE(s.count(a * b % g.q()) == 1);
        }
    }
}

TEST_CASE("rejects non-prime p") {
    CHECK_THROWS_AS(ResidueGroup::build(6, 1), std::invalid_argument);
    CHECK_THROWS_AS(ResidueGroup::build(1, 1), std::invalid_argument);
}
