#include <doctest.h>

#include "apd/generators.hpp"
#include "apd/rational.hpp"

using apd::BigInt;
using apd::Rational;

TEST_CASE("bigint basic arithmetic") {
    CHECK(BigInt(0).to_string() == "0");
    CHECK((BigInt(123) + BigInt(-123)).is_zero());
    CHECK((BigInt(-7) * BigInt(8)).to_string() == "-56");
    CHECK((BigInt(1000000007LL) * BigInt(998244353LL)).to_string() == "998244359987710471");
    CHECK(BigInt::from_string("-12345678901234567890123").to_string() ==
          "-12345678901234567890123");
    CHECK(BigInt(-5) < BigInt(3));
    CHECK(BigInt(3) < BigInt(5));
    CHECK(BigInt(-5) < BigInt(-3));
}

TEST_CASE("bigint division and gcd") {
    BigInt a = BigInt::from_string("123456789123456789123456789");
    BigInt b = BigInt::from_string("987654321987654321");
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    CHECK((q * b + r) == a);
    CHECK(BigInt::gcd(BigInt(48), BigInt(36)).to_string() == "12");
    CHECK(BigInt::gcd(BigInt(0), BigInt(-7)).to_string() == "7");
    CHECK((BigInt(-17) / BigInt(5)).to_string() == "-3");
    CHECK((BigInt(-17) % BigInt(5)).to_string() == "-2");
}

TEST_CASE("bigint random cross-check against int64") {
    apd::SplitMix64 rng(42);
    for (int trial = 0; trial < 2000; ++trial) {
        long long x = static_cast<long long>(rng.next() % 2000001) - 1000000;
        long long y = static_cast<long long>(rng.next() % 2000001) - 1000000;
        CHECK((BigInt(x) + BigInt(y)).to_string() == std::to_string(x + y));
        CHECK((BigInt(x) * BigInt(y)).to_string() == std::to_string(x * y));
        if (y != 0) {
            CHECK((BigInt(x) / BigInt(y)).to_string() == std::to_string(x / y));
            CHECK((BigInt(x) % BigInt(y)).to_string() == std::to_string(x % y));
        }
        CHECK((BigInt(x) < BigInt(y)) == (x < y));
    }
}

TEST_CASE("rational normalization and arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 5) == Rational(0));
    CHECK((Rational(1, 2) + Rational(1, 3)).to_string() == "5/6");
    CHECK((Rational(1, 2) - Rational(1, 2)).is_zero());
    CHECK((Rational(3, 4) * Rational(2, 3)).to_string() == "1/2");
    CHECK((Rational(3, 4) / Rational(3, 2)).to_string() == "1/2");
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational::from_string("-6/8") == Rational(-3, 4));
    CHECK(Rational::from_string("7") == Rational(7));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}
