#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "cyclohodge/arith.hpp"
#include "cyclohodge/cyclotomic.hpp"

using namespace cyclohodge;

namespace {

CycloElement random_element(unsigned m, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 4);
    std::vector<Rational> w(euler_phi(m), Rational(0));
    for (auto& c : w) c = Rational(num(rng), den(rng));
    CycloElement x(m);
    for (std::size_t k = 0; k < w.size(); ++k)
        x += CycloElement::root_power(m, static_cast<std::int64_t>(k)).scaled(w[k]);
    return x;
}

std::vector<mpz_class> poly_mul(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    std::vector<mpz_class> c(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

}  // namespace

TEST_CASE("Rational canonical form and arithmetic") {
    Rational a(6, 4);
    CHECK(a.num() == 3);
    CHECK(a.den() == 2);
    CHECK(a.to_string() == "3/2");
    Rational b(-2, -8);
    CHECK(b == Rational(1, 4));
    CHECK(b.den() > 0);
    Rational c(3, -6);
    CHECK(c.to_string() == "-1/2");
    CHECK(Rational::from_string("-7/21") == Rational(-1, 3));
    CHECK((a + c) == Rational(1));
    CHECK((a * b) == Rational(3, 8));
    CHECK((a / a) == Rational(1));
    CHECK_THROWS_AS(a / Rational(0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("cyclotomic polynomials: small cases") {
    CHECK(cyclotomic_poly(1) == std::vector<mpz_class>{-1, 1});
    CHECK(cyclotomic_poly(4) == std::vector<mpz_class>{1, 0, 1});
    CHECK(cyclotomic_poly(9) == std::vector<mpz_class>{1, 0, 0, 1, 0, 0, 1});
    CHECK(cyclotomic_poly(2) == std::vector<mpz_class>{1, 1});
    for (unsigned m : {1u, 3u, 8u, 12u, 30u, 105u})
        CHECK(cyclotomic_poly(m).size() == euler_phi(m) + 1);
}

TEST_CASE("product of Phi_d over d | m equals x^m - 1, m <= 200") {
    for (unsigned m = 1; m <= 200; ++m) {
        std::vector<mpz_class> prod{1};
        for (auto d : divisors(m)) prod = poly_mul(prod, cyclotomic_poly(static_cast<unsigned>(d)));
        std::vector<mpz_class> expected(m + 1, mpz_class(0));
        expected[0] = -1;
        expected[m] = 1;
        REQUIRE(prod == expected);
    }
}

TEST_CASE("basic field arithmetic in Q(zeta_m)") {
    // zeta_4^2 = -1
    CycloElement i4 = CycloElement::root(4);
    CHECK(i4 * i4 == CycloElement::from_rational(4, Rational(-1)));

    // zeta_5^{-1} = zeta_5^4
    CycloElement z5 = CycloElement::root(5);
    CHECK(z5.inverse() == CycloElement::root_power(5, 4));

    // (1 + zeta_3)(1 + zeta_3^2): expanding gives 1 + z + z^2 + z^3 = 0 + 1
    CycloElement one3 = CycloElement::one(3);
    CycloElement z3 = CycloElement::root(3);
    CHECK((one3 + z3) * (one3 + z3 * z3) == one3);
}

TEST_CASE("field axioms on random samples") {
    std::mt19937_64 rng(20240811);
    for (unsigned m : {5u, 8u, 9u, 12u, 16u, 27u}) {
        for (int trial = 0; trial < 8; ++trial) {
            CycloElement a = random_element(m, rng);
            CycloElement b = random_element(m, rng);
            CycloElement c = random_element(m, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            if (!a.is_zero()) CHECK(a.inverse() * a == CycloElement::one(m));
        }
    }
}

TEST_CASE("modulus mixing is rejected") {
    CHECK_THROWS_AS(CycloElement::root(4) + CycloElement::root(8), std::invalid_argument);
    CHECK_THROWS_AS(CycloElement::root(4) * CycloElement::root(8), std::invalid_argument);
    CHECK_THROWS_AS(CycloElement::zero(5).inverse(), std::domain_error);
    // explicit lift makes cross-field arithmetic legal
    CycloElement lifted = lift_to(CycloElement::root(4), 8);
    CHECK(lifted == CycloElement::root_power(8, 2));
}

TEST_CASE("galois action") {
    CycloElement z5 = CycloElement::root(5);
    CHECK(z5.galois_image(1) == z5);
    CHECK(z5.galois_image(2) == CycloElement::root_power(5, 2));
    CHECK(CycloElement::root_power(5, 3).galois_image(2) == z5);  // z^6 reduced
    CHECK_THROWS_AS(z5.galois_image(5), std::invalid_argument);

    std::mt19937_64 rng(7);
    for (unsigned m : {5u, 9u, 16u}) {
        for (std::uint64_t a = 1; a < m; ++a) {
            if (std::gcd<std::uint64_t>(a, m) != 1) continue;
            CycloElement x = random_element(m, rng);
            CycloElement y = random_element(m, rng);
            CHECK((x + y).galois_image(a) == x.galois_image(a) + y.galois_image(a));
            CHECK((x * y).galois_image(a) == x.galois_image(a) * y.galois_image(a));
            for (std::uint64_t b = 1; b < m; ++b) {
                if (std::gcd<std::uint64_t>(b, m) != 1) continue;
                CHECK(x.galois_image(b).galois_image(a) == x.galois_image(a * b % m));
            }
        }
    }
}

TEST_CASE("conjugation") {
    CHECK(CycloElement::from_rational(7, Rational(5, 3)).conjugated() ==
          CycloElement::from_rational(7, Rational(5, 3)));
    CHECK(CycloElement::root(4).conjugated() == -CycloElement::root(4));
    CycloElement real5 = CycloElement::root(5) + CycloElement::root_power(5, 4);
    CHECK(real5.conjugated() == real5);

    std::mt19937_64 rng(11);
    for (unsigned m : {5u, 8u, 9u}) {
        CycloElement x = random_element(m, rng);
        CHECK(x.conjugated().conjugated() == x);
    }
}

TEST_CASE("trace between cyclotomic levels") {
    std::mt19937_64 rng(3);
    CycloElement x = random_element(9, rng);
    CHECK(trace_down(x, 9) == x);

    // index [Q(zeta_9):Q(zeta_3)] = 3
    CHECK(trace_down(CycloElement::one(9), 3) == CycloElement::from_rational(3, Rational(3)));
    CHECK(trace_down(CycloElement::root(9), 3) == CycloElement::zero(3));

    // trace of a lifted element is the index times the element
    CycloElement y = CycloElement::root(3) + CycloElement::from_rational(3, Rational(1, 2));
    CHECK(trace_down(lift_to(y, 27), 3) == y.scaled(Rational(9)));

    // transitivity down a tower
    CycloElement z = random_element(27, rng);
    CHECK(trace_down(trace_down(z, 9), 3) == trace_down(z, 3));

    // invariance under automorphisms that fix the lower level
    for (std::uint64_t a = 1; a < 27; a += 3) {
        if (std::gcd<std::uint64_t>(a, 27) != 1) continue;
        CHECK(trace_down(z.galois_image(a), 3) == trace_down(z, 3));
    }
    CHECK_THROWS_AS(trace_down(z, 4), std::invalid_argument);

    // non-prime-power moduli work too
    CycloElement w = random_element(12, rng);
    CHECK(trace_down(trace_down(w, 6), 3) == trace_down(w, 3));

    // the descent really inverts the canonical embedding: lifting the trace
    // back up reproduces the sum over the relative Galois group
    for (auto [m, d] : std::vector<std::pair<unsigned, unsigned>>{{27, 3}, {16, 4}, {45, 15}}) {
        CycloElement x = random_element(m, rng);
        CycloElement direct = CycloElement::zero(m);
        for (unsigned a = 1; a < m; a += d)
            if (std::gcd(a, m) == 1) direct += x.galois_image(a);
        CHECK(lift_to(trace_down(x, d), m) == direct);
    }
}

TEST_CASE("complex embedding") {
    ComplexApprox i = embed(CycloElement::root(4), 64);
    CHECK(std::abs(i.re.to_double()) < 1e-15);
    CHECK(i.im.to_double() == doctest::Approx(1.0).epsilon(1e-15));

    ComplexApprox c = embed(CycloElement::from_rational(1, Rational(3, 2)), 53);
    CHECK(c.re.to_double() == doctest::Approx(1.5));
    CHECK(std::abs(c.im.to_double()) < 1e-15);

    // zeta_3 - zeta_3^2 = i sqrt(3)
    CycloElement d = CycloElement::root(3) - CycloElement::root_power(3, 2);
    ComplexApprox e = embed(d, 80);
    CHECK(std::abs(e.re.to_double()) < 1e-15);
    CHECK(e.im.to_double() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));

    CHECK_THROWS_AS(embed(d, 32), std::invalid_argument);

    // embed is multiplicative within tolerance
    std::mt19937_64 rng(13);
    CycloElement a = random_element(7, rng);
    CycloElement b = random_element(7, rng);
    ComplexApprox lhs = embed(a * b, 64);
    ComplexApprox rhs = embed(a, 64) * embed(b, 64);
    CHECK((lhs - rhs).abs() < 1e-12);
}

TEST_CASE("precision mixing is rejected") {
    Real a(64), b(128);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    ComplexApprox x(64), y(128);
    CHECK_THROWS_AS(x + y, std::invalid_argument);
}
