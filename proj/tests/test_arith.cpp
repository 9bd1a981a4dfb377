#include <doctest.h>

#include <cmath>

#include "erl/arith.hpp"

using namespace erl;

TEST_CASE("divisors of small numbers") {
    CHECK(divisors(1) == std::vector<unsigned long>{1});
    CHECK(divisors(12) == std::vector<unsigned long>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(7) == std::vector<unsigned long>{1, 7});
    CHECK_THROWS_AS(divisors(0), std::invalid_argument);
}

TEST_CASE("divisor count parity matches perfect squares") {
    for (unsigned long n = 1; n <= 400; ++n) {
        unsigned long r = static_cast<unsigned long>(std::lround(std::sqrt(double(n))));
        bool square = r * r == n;
        CHECK(divisors(n).size() % 2 == (square ? 1 : 0));
    }
}

TEST_CASE("mobius values") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(4) == 0);
    CHECK(mobius(6) == 1);
    CHECK(mobius(2) == -1);
    CHECK(mobius(30) == -1);
    CHECK_THROWS_AS(mobius(0), std::invalid_argument);
}

TEST_CASE("mobius summatory identity up to 1000") {
    for (unsigned long n = 1; n <= 1000; ++n) {
        int sum = 0;
        for (unsigned long d : divisors(n)) {
            sum += mobius(d);
        }
        CHECK(sum == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("p-adic valuation") {
    CHECK(padic_valuation(3, ExactInt(63)) == 2);
    CHECK(padic_valuation(3, ExactInt(1)) == 0);
    CHECK(padic_valuation(3, ExactInt(4095)) == 2);
    CHECK(padic_valuation(2, pow2(200)) == 200);
    CHECK_THROWS_AS(padic_valuation(3, ExactInt(0)), std::invalid_argument);
    CHECK_THROWS_AS(padic_valuation(4, ExactInt(8)), std::invalid_argument);
}

TEST_CASE("exact integers survive large magnitudes") {
    ExactInt big = pow2(256);
    CHECK(big.get_str().size() == 78);
    CHECK(big - (big - 1) == 1);
}

TEST_CASE("rational normalization and value equality") {
    ExactRational a = make_rational(2, 4);
    ExactRational b = make_rational(-1, -2);
    CHECK(a == b);
    CHECK(a.get_den() == 2);
    ExactRational c = make_rational(3, -6);
    CHECK(c.get_den() == 2);
    CHECK(c.get_num() == -1);
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);

    // associativity/commutativity on a few exact values
    ExactRational x = make_rational(7, 3), y = make_rational(-5, 6), z = make_rational(11, 4);
    CHECK((x + y) + z == x + (y + z));
    CHECK(x * y == y * x);
    CHECK((x * y) * z == x * (y * z));
    CHECK(is_integer(make_rational(9, 3)));
    CHECK(to_integer(make_rational(9, 3)) == 3);
    CHECK(to_string(make_rational(1, 2)) == "1/2");
    CHECK(to_string(make_rational(-4, 2)) == "-2");
}
