#include <doctest.h>

#include <random>

#include "radixpi/golden.hpp"

using namespace radixpi;

namespace {

std::mt19937_64 rng(0x5eedf00dULL);

Rational random_rational(long bound = 1000000) {
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

GoldenElement random_element(long bound = 1000000) {
    return {random_rational(bound), random_rational(bound)};
}

}  // namespace

TEST_SUITE_BEGIN("golden");

TEST_CASE("rational stays canonical") {
    Rational q = make_rational(6, -10);
    CHECK(q.get_num() == -3);
    CHECK(q.get_den() == 5);
    CHECK(rational_to_string(q) == "-3/5");
    CHECK(parse_rational(" -3 / 5 ") == q);
    CHECK(parse_rational("7") == Rational(7));
    CHECK_THROWS_AS(parse_rational("x/3"), std::invalid_argument);
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}

TEST_CASE("addition examples") {
    CHECK(GoldenElement(3, -1) + GoldenElement(0, 1) == GoldenElement(3, 0));
    CHECK(GoldenElement(0, 0) + GoldenElement(1, 1) == GoldenElement(1, 1));
    CHECK(GoldenElement(2, 1) + GoldenElement(1, -1) == GoldenElement(3, 0));
}

TEST_CASE("multiplication examples") {
    // phi^2 = phi + 1
    CHECK(GoldenElement(0, 1) * GoldenElement(0, 1) == GoldenElement(1, 1));
    // phi^2 (3 - phi) = 2 + phi
    CHECK(GoldenElement(1, 1) * GoldenElement(3, -1) == GoldenElement(2, 1));
    // (phi - 1)^2 = 2 - phi
    CHECK(GoldenElement(-1, 1) * GoldenElement(-1, 1) == GoldenElement(2, -1));
}

TEST_CASE("inverse examples") {
    CHECK(GoldenElement(0, 1).inverse() == GoldenElement(-1, 1));  // 1/phi = phi - 1
    CHECK(GoldenElement(1, 0).inverse() == GoldenElement(1, 0));
    CHECK(GoldenElement(1, 1).inverse() == GoldenElement(2, -1));
    CHECK(GoldenElement(1, 1) * GoldenElement(2, -1) == GoldenElement::one());
    CHECK_THROWS_AS(GoldenElement(0, 0).inverse(), std::domain_error);
}

TEST_CASE("norm examples") {
    CHECK(GoldenElement(0, 1).norm() == Rational(-1));
    CHECK(GoldenElement(1, 0).norm() == Rational(1));
    CHECK(GoldenElement(3, -1).norm() == Rational(5));
    // cross-check by expansion: (3 - phi)(2 + phi) = 5
    CHECK(GoldenElement(3, -1) * GoldenElement(3, -1).conjugate() == GoldenElement(5, 0));
}

TEST_CASE("square predicate examples") {
    CHECK(is_square_of(GoldenElement(1, 1), GoldenElement(0, 1)));
    CHECK(is_square_of(GoldenElement(2, -1), GoldenElement(-1, 1)));
    CHECK_FALSE(is_square_of(GoldenElement(2, 1), GoldenElement(1, 1)));
}

TEST_CASE("numeric value examples") {
    RealContext ctx(128);
    Real phi = GoldenElement(0, 1).to_real(ctx);
    CHECK(phi.to_fixed(38) == "1.6180339887498948482045868343656381177");
    RealContext ctx64(64);
    Real phi_sq = GoldenElement(1, 1).to_real(ctx64);
    CHECK(phi_sq.to_fixed(19) == "2.618033988749894848");
    Real diag_sq = GoldenElement(2, 1).to_real(ctx64);
    CHECK(diag_sq.to_fixed(11) == "3.6180339887");
}

TEST_CASE("field axioms over random elements") {
    for (int i = 0; i < 10000; ++i) {
        GoldenElement x = random_element();
        GoldenElement y = random_element();
        GoldenElement z = random_element();
        REQUIRE(x + y == y + x);
        REQUIRE(x * y == y * x);
        REQUIRE((x + y) + z == x + (y + z));
        REQUIRE((x * y) * z == x * (y * z));
        REQUIRE(x * (y + z) == x * y + x * z);
        if (!x.is_zero()) {
            REQUIRE(x * x.inverse() == GoldenElement::one());
        }
    }
}

TEST_CASE("norm is multiplicative") {
    for (int i = 0; i < 10000; ++i) {
        GoldenElement x = random_element();
        GoldenElement y = random_element();
        REQUIRE((x * y).norm() == x.norm() * y.norm());
    }
}

TEST_CASE("phi powers recurse with Fibonacci coefficients") {
    // phi^n = F(n-1) + F(n) phi
    mpz_class f_prev = 1, f_cur = 1;  // F(1), F(2)
    GoldenElement power = GoldenElement::phi();
    GoldenElement prev2 = GoldenElement::one();
    GoldenElement prev1 = power;
    for (int n = 2; n <= 40; ++n) {
        power = power * GoldenElement::phi();
        REQUIRE(power == GoldenElement(Rational(f_prev), Rational(f_cur)));
        REQUIRE(power == prev1 + prev2);  // phi^n = phi^(n-1) + phi^(n-2)
        mpz_class f_next = f_prev + f_cur;
        f_prev = f_cur;
        f_cur = f_next;
        prev2 = prev1;
        prev1 = power;
    }
}

TEST_CASE("real evaluation is consistent with field multiplication") {
    RealContext ctx(256);
    for (int i = 0; i < 200; ++i) {
        GoldenElement x = random_element(1000);
        GoldenElement y = random_element(1000);
        Real lhs = (x * y).to_real(ctx);
        Real rhs = x.to_real(ctx) * y.to_real(ctx);
        Real diff = (lhs - rhs).abs();
        if (lhs.is_zero()) {
            REQUIRE(diff <= Real::from_ui(1, 256).mul_2si(-240));
        } else {
            REQUIRE(diff <= lhs.ulp().mul_2si(3));  // 8 ulp
        }
    }
}

TEST_CASE("serialization round trip") {
    GoldenElement x(Rational(3, 2), Rational(-1, 4));
    CHECK(to_string(x) == "3/2 + -1/4*phi");
    CHECK(parse_golden(to_string(x)) == x);
    CHECK(parse_golden("3/2+-1/4*phi") == x);
    CHECK(parse_golden(" 3/2  +  -1/4 * phi") == x);
    CHECK(parse_golden("0/1 + 1/1*phi") == GoldenElement::phi());
    CHECK(parse_golden("3 + -1*phi") == GoldenElement(3, -1));
    CHECK_THROWS_AS(parse_golden("3/2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_golden("a + b*phi"), std::invalid_argument);
    for (int i = 0; i < 200; ++i) {
        GoldenElement x2 = random_element();
        REQUIRE(parse_golden(to_string(x2)) == x2);
    }
}

TEST_SUITE_END();
