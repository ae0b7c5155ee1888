#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symch/rational.hpp"

#include <random>

using namespace symch;

TEST_CASE("BigInt small arithmetic agrees with __int128") {
    std::mt19937_64 rng(12345);
    for (int t = 0; t < 5000; ++t) {
        long long a = static_cast<long long>(rng() % 2000001) - 1000000;
        long long b = static_cast<long long>(rng() % 2000001) - 1000000;
        BigInt A(a), B(b);
        CHECK((A + B).to_longlong() == a + b);
        CHECK((A - B).to_longlong() == a - b);
        __int128 prod = static_cast<__int128>(a) * b;
        CHECK((A * B).to_longlong() == static_cast<long long>(prod));
        if (b != 0) {
            CHECK((A / B).to_longlong() == a / b);
            CHECK((A % B).to_longlong() == a % b);
        }
    }
}

TEST_CASE("BigInt multi-limb division round-trips") {
    std::mt19937_64 rng(777);
    for (int t = 0; t < 2000; ++t) {
        // build numbers of 1..5 limbs from random 64-bit pieces
        BigInt a(0), b(0);
        int la = 1 + static_cast<int>(rng() % 5);
        int lb = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < la; ++i) a = a * BigInt(1LL << 32) + BigInt(static_cast<long long>(rng() & 0xffffffffULL));
        for (int i = 0; i < lb; ++i) b = b * BigInt(1LL << 32) + BigInt(static_cast<long long>(rng() & 0xffffffffULL));
        if (rng() & 1) a = -a;
        if (b.is_zero()) b = BigInt(1);
        if (rng() & 1) b = -b;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        // truncated division: remainder carries the dividend's sign
        if (!r.is_zero()) CHECK(r.is_negative() == a.is_negative());
    }
}

TEST_CASE("BigInt decimal round-trip and known powers") {
    CHECK(BigInt::from_string("0").str() == "0");
    CHECK(BigInt::from_string("-12345678901234567890123456789").str() ==
          "-12345678901234567890123456789");
    BigInt two_pow_100(1);
    for (int i = 0; i < 100; ++i) two_pow_100 *= BigInt(2);
    CHECK(two_pow_100.str() == "1267650600228229401496703205376");
    CHECK(BigInt::factorial(20).str() == "2432902008176640000");
    CHECK(BigInt::factorial(25).str() == "15511210043330985984000000");
}

TEST_CASE("BigInt gcd") {
    CHECK(BigInt::gcd(BigInt(12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(-12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(0), BigInt(5)) == BigInt(5));
    std::mt19937_64 rng(99);
    for (int t = 0; t < 500; ++t) {
        long long a = static_cast<long long>(rng() % 100000) - 50000;
        long long b = static_cast<long long>(rng() % 100000) - 50000;
        long long g = std::gcd(a, b);
        CHECK(BigInt::gcd(BigInt(a), BigInt(b)).to_longlong() == g);
    }
}

TEST_CASE("Rational exact arithmetic") {
    CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
    CHECK((Rational(1, 2) * Rational(2, 3)) == Rational(1, 3));
    CHECK((Rational(1, 2) - Rational(1, 2)).is_zero());
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-1, -2) == Rational(1, 2));
    CHECK(Rational(1, -2).str() == "-1/2");
    CHECK(Rational(7).str() == "7");
    CHECK_THROWS(Rational(1, 0));
    CHECK(Rational::from_string("3/4") == Rational(3, 4));
    CHECK(Rational::from_string("-6/8") == Rational(-3, 4));
}

TEST_CASE("Rational stays reduced under random arithmetic") {
    std::mt19937_64 rng(4242);
    for (int t = 0; t < 2000; ++t) {
        Rational a(static_cast<long long>(rng() % 41) - 20, 1 + static_cast<long long>(rng() % 12));
        Rational b(static_cast<long long>(rng() % 41) - 20, 1 + static_cast<long long>(rng() % 12));
        for (Rational r : {a + b, a - b, a * b}) {
            CHECK(BigInt::gcd(r.num(), r.den()) == BigInt(1));
            CHECK(r.den() > BigInt(0));
        }
        if (!b.is_zero()) {
            Rational r = a / b;
            CHECK(BigInt::gcd(r.num(), r.den()) == BigInt(1));
            CHECK(r * b == a);
        }
    }
}
