#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symch/linsolve.hpp"
#include "symch/randomgen.hpp"
#include "symch/ring.hpp"

using namespace symch;

namespace {

const RingDescriptor kFree4 = RingDescriptor::free_algebra(4);
const RingDescriptor kGrass4 = RingDescriptor::grassmann(4);
const RingDescriptor kComm4 = RingDescriptor::commutative(4);
const RingDescriptor kRat = RingDescriptor::rationals();
const RingDescriptor kU2 = RingDescriptor::upper_triangular2();

Element gen(const RingDescriptor& ring, unsigned i) { return Element::generator(ring, i); }

} // namespace

TEST_CASE("descriptor invariants") {
    CHECK(kRat.generator_count == 0);
    CHECK(kU2.generator_count == 0);
    CHECK_THROWS_AS(Element::generator(kRat, 1), error);
    CHECK_THROWS_AS(Element::generator(kFree4, 5), error);
    // degenerate zero-generator rings collapse to the rationals
    const RingDescriptor free0 = RingDescriptor::free_algebra(0);
    CHECK(Element::one(free0) + Element::one(free0) == Element::scalar(free0, Rational(2)));
}

TEST_CASE("ring mismatch is rejected") {
    CHECK_THROWS_AS(Element::one(kFree4) + Element::one(kGrass4), ring_mismatch);
    CHECK_THROWS_AS(Element::one(kFree4) * Element::one(RingDescriptor::free_algebra(3)),
                    ring_mismatch);
}

TEST_CASE("elem_add examples") {
    CHECK(Element::scalar(kRat, Rational(1, 2)) + Element::scalar(kRat, Rational(1, 3)) ==
          Element::scalar(kRat, Rational(5, 6)));

    const Element x1x2 = gen(kFree4, 1) * gen(kFree4, 2);
    CHECK((x1x2 + Element::scalar(kFree4, Rational(-1)) * x1x2).is_zero());

    const Element v1v2 = gen(kGrass4, 1) * gen(kGrass4, 2);
    const Element v2v1 = gen(kGrass4, 2) * gen(kGrass4, 1);
    CHECK((v1v2 + v2v1).is_zero());
}

TEST_CASE("elem_mul examples") {
    const Element v1 = gen(kGrass4, 1), v2 = gen(kGrass4, 2);
    CHECK(v1 * v2 == Element::monomial(kGrass4, Mono{{1, 2}}));
    CHECK(v2 * v1 == Element::monomial(kGrass4, Mono{{1, 2}}, Rational(-1)));
    CHECK((v1 * v1).is_zero());

    const Element a = Element::ut(kU2, Rational(1), Rational(1), Rational(0));
    const Element b = Element::ut(kU2, Rational(0), Rational(1), Rational(1));
    CHECK(a * b == Element::ut(kU2, Rational(0), Rational(2), Rational(0)));

    CHECK(gen(kFree4, 1) * gen(kFree4, 2) == Element::monomial(kFree4, Mono{{1, 2}}));
}

TEST_CASE("commutator examples") {
    Rng rng(11);
    for (const auto& ring : {kFree4, kGrass4, kComm4, kRat, kU2}) {
        const Element a = random_element(rng, ring);
        CHECK(commutator(a, a).is_zero());
    }
    CHECK(commutator(Element::ut(kU2, Rational(1), Rational(0), Rational(0)),
                     Element::ut(kU2, Rational(0), Rational(1), Rational(0))) ==
          Element::ut(kU2, Rational(0), Rational(1), Rational(0)));
    const Element c = commutator(gen(kFree4, 1), gen(kFree4, 2));
    CHECK(c == Element::monomial(kFree4, Mono{{1, 2}}) -
                   Element::monomial(kFree4, Mono{{2, 1}}));
}

TEST_CASE("ring axioms on randomized triples") {
    Rng rng(2024);
    for (const auto& ring : {kFree4, kGrass4, kComm4, kRat, kU2}) {
        const Element one = Element::one(ring);
        for (int t = 0; t < 60; ++t) {
            const Element a = random_element(rng, ring);
            const Element b = random_element(rng, ring);
            const Element c = random_element(rng, ring);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a + b) * c == a * c + b * c);
            CHECK(one * a == a);
            CHECK(a * one == a);
            CHECK((a - a).is_zero());
            CHECK(a + b == b + a);
        }
    }
}

TEST_CASE("grassmann defining relations, exhaustively") {
    for (unsigned i = 1; i <= 4; ++i) {
        for (unsigned j = 1; j <= 4; ++j) {
            const Element vi = gen(kGrass4, i), vj = gen(kGrass4, j);
            CHECK((vi * vj + vj * vi).is_zero());
        }
        CHECK((gen(kGrass4, i) * gen(kGrass4, i)).is_zero());
    }
}

TEST_CASE("upper-triangular-2 satisfies [a,b][c,d] = 0") {
    Rng rng(5);
    for (int t = 0; t < 1000; ++t) {
        const Element a = random_element(rng, kU2), b = random_element(rng, kU2);
        const Element c = random_element(rng, kU2), d = random_element(rng, kU2);
        CHECK((commutator(a, b) * commutator(c, d)).is_zero());
    }
}

TEST_CASE("grassmann is Lie-nilpotent of index 2 but [v1,v2][v3,v4] != 0") {
    Rng rng(6);
    for (int t = 0; t < 1000; ++t) {
        const Element a = random_element(rng, kGrass4);
        const Element b = random_element(rng, kGrass4);
        const Element c = random_element(rng, kGrass4);
        CHECK(commutator(commutator(a, b), c).is_zero());
    }
    const Element witness = commutator(gen(kGrass4, 1), gen(kGrass4, 2)) *
                            commutator(gen(kGrass4, 3), gen(kGrass4, 4));
    CHECK(witness == Element::monomial(kGrass4, Mono{{1, 2, 3, 4}}, Rational(4)));
    CHECK(!witness.is_zero());
}

TEST_CASE("is_in_commutator_subgroup on known members and non-members") {
    CHECK(is_in_commutator_subgroup(commutator(gen(kFree4, 1), gen(kFree4, 2))));
    CHECK(!is_in_commutator_subgroup(gen(kFree4, 1) * gen(kFree4, 2)));
    CHECK(is_in_commutator_subgroup(Element::ut(kU2, Rational(0), Rational(5), Rational(0))));
    CHECK(!is_in_commutator_subgroup(Element::ut(kU2, Rational(1), Rational(0), Rational(0))));
    CHECK(is_in_commutator_subgroup(Element::zero(kComm4)));
    CHECK(!is_in_commutator_subgroup(Element::one(kComm4)));
    CHECK(!is_in_commutator_subgroup(gen(kComm4, 1)));
}

// Brute-force oracle: the span of many random commutators, built
// independently of the ring-core span (which uses basis pairs only).
namespace {

QVec grass_vec(const Element& e) {
    QVec v(16, Rational(0));
    for (const auto& [m, c] : e.terms()) {
        size_t mask = 0;
        for (unsigned idx : m.ix) mask |= static_cast<size_t>(1) << (idx - 1);
        v[mask] = c;
    }
    return v;
}

QVec ut_vec(const Element& e) { return QVec{e.triple().p, e.triple().q, e.triple().r}; }

} // namespace

TEST_CASE("is_in_commutator_subgroup agrees with a random-commutator span oracle") {
    for (const auto& ring : {kGrass4, kU2}) {
        const bool grass = ring.kind == RingKind::grassmann;
        Rng rng(grass ? 31 : 32);
        RowSpan oracle(grass ? 16 : 3);
        for (int t = 0; t < 400; ++t) {
            const Element c = commutator(random_element(rng, ring), random_element(rng, ring));
            oracle.add(grass ? grass_vec(c) : ut_vec(c));
        }
        int agreements = 0;
        for (int t = 0; t < 1000; ++t) {
            Element e = random_element(rng, ring);
            // mix in random commutators so membership occurs often
            if (t % 2 == 0) {
                e = commutator(random_element(rng, ring), random_element(rng, ring)) +
                    commutator(random_element(rng, ring), random_element(rng, ring));
            }
            const bool ours = is_in_commutator_subgroup(e);
            const bool oracle_says = oracle.contains(grass ? grass_vec(e) : ut_vec(e));
            CHECK(ours == oracle_says);
            ++agreements;
        }
        CHECK(agreements == 1000);
    }
}

TEST_CASE("free-algebra commutator sums stay in [R,R]") {
    Rng rng(77);
    for (int t = 0; t < 300; ++t) {
        Element acc = Element::zero(kFree4);
        const int parts = 1 + static_cast<int>(rng.next() % 3);
        for (int p = 0; p < parts; ++p) {
            acc += commutator(random_element(rng, kFree4), random_element(rng, kFree4));
        }
        CHECK(is_in_commutator_subgroup(acc));
        // adding any single word with nonzero coefficient must leave [R,R]
        const Element probe = acc + gen(kFree4, 1);
        CHECK(!is_in_commutator_subgroup(probe));
    }
}

TEST_CASE("center_contains") {
    CHECK(center_contains(Element::scalar(kFree4, Rational(7))));
    CHECK(center_contains(Element::scalar(kU2, Rational(7))));
    CHECK(!center_contains(gen(kFree4, 1)));
    CHECK(center_contains(gen(kGrass4, 1) * gen(kGrass4, 2)));   // even blades are central
    CHECK(!center_contains(gen(kGrass4, 1)));
    CHECK(!center_contains(Element::ut(kU2, Rational(0), Rational(1), Rational(0))));
    CHECK(center_contains(gen(kComm4, 3)));
    // free algebra on one generator is commutative
    const RingDescriptor free1 = RingDescriptor::free_algebra(1);
    CHECK(center_contains(Element::generator(free1, 1)));
}

TEST_CASE("canonical printing round trips through term maps") {
    CHECK(Element::zero(kFree4).str() == "0");
    CHECK(Element::scalar(kRat, Rational(-3, 4)).str() == "-3/4");
    const Element e = Element::scalar(kFree4, Rational(2)) -
                      gen(kFree4, 2) * gen(kFree4, 1) +
                      Element::scalar(kFree4, Rational(1, 2)) * gen(kFree4, 1);
    CHECK(e.str() == "2 + 1/2*x1 - x2*x1");
    CHECK(Element::ut(kU2, Rational(1), Rational(-1, 2), Rational(0)).str() == "u(1, -1/2, 0)");
    const Element w = Element::monomial(kFree4, Mono{{1, 1, 2}});
    CHECK(w.str() == "x1^2*x2");
}
