#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symch/parser.hpp"
#include "symch/randomgen.hpp"

using namespace symch;

namespace {

const RingDescriptor kFree4 = RingDescriptor::free_algebra(4);
const RingDescriptor kGrass4 = RingDescriptor::grassmann(4);
const RingDescriptor kComm4 = RingDescriptor::commutative(4);
const RingDescriptor kRat = RingDescriptor::rationals();
const RingDescriptor kU2 = RingDescriptor::upper_triangular2();

} // namespace

TEST_CASE("commutator sugar desugars") {
    const Element e = parse_element("[x1,x2]", kFree4);
    CHECK(e == Element::monomial(kFree4, Mono{{1, 2}}) - Element::monomial(kFree4, Mono{{2, 1}}));
}

TEST_CASE("grassmann relations normalize to zero") {
    CHECK(parse_element("v1*v2 + v2*v1", kGrass4).is_zero());
    CHECK(parse_element("v1*v1", kGrass4).is_zero());
}

TEST_CASE("u(p,q,r) constructor") {
    const Element e = parse_element("u(1,0,0)*u(0,1,0) - u(0,1,0)*u(1,0,0)", kU2);
    CHECK(e == Element::ut(kU2, Rational(0), Rational(1), Rational(0)));
    CHECK(parse_element("u(1/2, -3, 2^2)", kU2) ==
          Element::ut(kU2, Rational(1, 2), Rational(-3), Rational(4)));
}

TEST_CASE("precedence: ^ over * over +/-") {
    CHECK(parse_element("1+2*3^2", kRat) == Element::scalar(kRat, Rational(19)));
    CHECK(parse_element("-x1^2", kFree4) == -Element::monomial(kFree4, Mono{{1, 1}}));
    CHECK(parse_element("(x1+x2)*x1", kFree4) ==
          Element::monomial(kFree4, Mono{{1, 1}}) + Element::monomial(kFree4, Mono{{2, 1}}));
    CHECK(parse_element("2*x1 - x1", kFree4) == Element::generator(kFree4, 1));
    CHECK(parse_element("1/2 * x1 * 2", kFree4) == Element::generator(kFree4, 1));
}

TEST_CASE("rational literals") {
    CHECK(parse_element("3/4", kRat) == Element::scalar(kRat, Rational(3, 4)));
    CHECK(parse_element("-6/8", kRat) == Element::scalar(kRat, Rational(-3, 4)));
    CHECK(parse_element("12345678901234567890", kRat) ==
          Element::scalar(kRat, Rational(BigInt::from_string("12345678901234567890"), BigInt(1))));
}

TEST_CASE("errors carry byte offsets") {
    try {
        parse_element("x1 + ", kFree4);
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.offset == 5);
    }
    try {
        parse_element("x1 * y2", kFree4);
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.offset == 5);
        CHECK(std::string(e.what()).find("unknown generator") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_element("x9", kFree4), parse_error);       // index out of range
    CHECK_THROWS_AS(parse_element("u(1,0,0)", kFree4), parse_error); // wrong ring
    CHECK_THROWS_AS(parse_element("1/0", kRat), parse_error);        // zero denominator
    CHECK_THROWS_AS(parse_element("x1 x2", kFree4), parse_error);    // '*' is explicit
    CHECK_THROWS_AS(parse_element("(x1", kFree4), parse_error);
    CHECK_THROWS_AS(parse_element("x1 @ x2", kFree4), parse_error);
}

TEST_CASE("round trip: parse(print(e)) == e, randomized over all rings") {
    Rng rng(50);
    for (const auto& ring : {kFree4, kGrass4, kComm4, kRat, kU2}) {
        for (int t = 0; t < 200; ++t) {
            const Element e = random_element(rng, ring, {4, 3, 5});
            CHECK(parse_element(e.str(), ring) == e);
        }
    }
    // zero round trips everywhere
    for (const auto& ring : {kFree4, kGrass4, kComm4, kRat, kU2}) {
        CHECK(parse_element("0", ring).is_zero());
        CHECK(parse_element(Element::zero(ring).str(), ring).is_zero());
    }
}

TEST_CASE("print o parse reaches the normal form") {
    CHECK(parse_element("x2*x1 + x1*x2 - x2*x1", kFree4).str() == "x1*x2");
    CHECK(parse_element("v2*v1", kGrass4).str() == "-v1*v2");
    CHECK(parse_element("x1*x1*x1", kFree4).str() == "x1^3");
    CHECK(parse_element("2/4", kRat).str() == "1/2");
}

TEST_CASE("whitespace is insignificant") {
    CHECK(parse_element("  [ x1 , x2 ]  ", kFree4) == parse_element("[x1,x2]", kFree4));
}
