#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symch/ideal.hpp"
#include "symch/randomgen.hpp"
#include "symch/verifier.hpp"

using namespace symch;

namespace {

const RingDescriptor kFree4 = RingDescriptor::free_algebra(4);

Element gen(unsigned i) { return Element::generator(kFree4, i); }

// Evaluation at commuting variables kills every element of the ideal, so a
// nonzero commutative image certifies non-membership independently of the
// elimination route.
Element commutative_image(const Element& e) {
    const RingDescriptor comm = RingDescriptor::commutative(e.ring().generator_count);
    Element out = Element::zero(comm);
    for (const auto& [m, c] : e.terms()) {
        Mono exp;
        exp.ix.assign(comm.generator_count, 0);
        for (unsigned letter : m.ix) exp.ix[letter - 1] += 1;
        out += Element::monomial(comm, std::move(exp), c);
    }
    return out;
}

} // namespace

TEST_CASE("multidegree and multihomogeneity") {
    const Element e = gen(1) * gen(2) - gen(2) * gen(1);
    CHECK(is_multihomogeneous(e));
    CHECK(!is_multihomogeneous(gen(1) + gen(1) * gen(2)));
    const auto comps = multihomogeneous_components(gen(1) + gen(1) * gen(2) - gen(2) * gen(1));
    CHECK(comps.size() == 2);
    Element sum = Element::zero(kFree4);
    for (const auto& c : comps) {
        CHECK(is_multihomogeneous(c));
        sum += c;
    }
    CHECK(sum == gen(1) + gen(1) * gen(2) - gen(2) * gen(1));
}

TEST_CASE("a generator of the ideal is a member with an exact certificate") {
    const Element target = commutator(gen(1), gen(2)) * commutator(gen(3), gen(4));
    const IdealMembership r = ideal_membership({target});
    CHECK(r.member);
    CHECK(!r.certificate.empty());
    CHECK(expand_certificate(kFree4, r.certificate) == target);
}

TEST_CASE("a single commutator is not a member (degree grading)") {
    const IdealMembership r = ideal_membership({commutator(gen(1), gen(2))});
    CHECK(!r.member);
    CHECK(r.certificate.empty());
}

TEST_CASE("a plain monomial is not a member (commutative image survives)") {
    const Element target = gen(1) * gen(2) * gen(3) * gen(4);
    CHECK(!commutative_image(target).is_zero());
    CHECK(!ideal_membership({target}).member);
}

TEST_CASE("zero is trivially a member; non-multihomogeneous targets are rejected") {
    CHECK(ideal_membership({Element::zero(kFree4)}).member);
    CHECK_THROWS_AS(ideal_membership({gen(1) + gen(1) * gen(2)}), error);
    CHECK_THROWS_AS(ideal_membership({Element::one(RingDescriptor::grassmann(4))}), error);
}

TEST_CASE("random combinations of spanning elements are members with sound certificates") {
    Rng rng(40);
    for (int t = 0; t < 15; ++t) {
        // random m1 [w1,w2][w3,w4] m2 pieces sharing one multidegree:
        // permute the letters of a fixed multiset across the slots
        std::vector<unsigned> letters = {1, 2, 3, 4};
        Element acc = Element::zero(kFree4);
        for (int parts = 0; parts < 2; ++parts) {
            for (unsigned i = 3; i >= 1; --i) {
                std::swap(letters[i], letters[static_cast<size_t>(rng.int_in(0, i))]);
            }
            const Element piece = Element::scalar(kFree4, Rational(rng.int_in(1, 3))) *
                                  commutator(gen(letters[0]), gen(letters[1])) *
                                  commutator(gen(letters[2]), gen(letters[3]));
            acc += piece;
        }
        if (acc.is_zero()) continue;
        const IdealMembership r = ideal_membership({acc});
        CHECK(r.member);
        CHECK(expand_certificate(kFree4, r.certificate) == acc);
    }
}

TEST_CASE("members plus a surviving monomial are non-members") {
    const Element member = commutator(gen(1), gen(2)) * commutator(gen(3), gen(4));
    const Element probe = member + gen(1) * gen(2) * gen(3) * gen(4);
    CHECK(!commutative_image(probe).is_zero());
    CHECK(!ideal_membership({probe}).member);
}

TEST_CASE("one multihomogeneous piece of the generic sandwich residual is certified") {
    // full-entry certification is the acceptance suite's job; here one piece
    // keeps the unit test fast
    const Matrix a = generic_free_matrix(2);
    const auto lambda = symmetric_charpoly(a);
    std::vector<Matrix> powers = {Matrix::identity(a.ring(), 2), a, a * a};
    Matrix residual(a.ring(), 2);
    for (unsigned i = 0; i <= 2; ++i) {
        for (unsigned j = 0; j <= 2; ++j) {
            residual = residual + powers[i].scale_right(lambda[i] * lambda[j]) * powers[j];
        }
    }
    REQUIRE(!residual.at(0, 0).is_zero());
    const auto pieces = multihomogeneous_components(residual.at(0, 0));
    REQUIRE(!pieces.empty());
    const IdealMembership r = ideal_membership({pieces[0]});
    CHECK(r.member);
    CHECK(expand_certificate(a.ring(), r.certificate) == pieces[0]);
    CHECK(r.component_dim > 0);
    CHECK(r.span_size > 0);
}

TEST_CASE("higher-degree targets exercise nonempty outer monomials") {
    // degree 5 with a left monomial
    const Element t1 = gen(1) * commutator(gen(1), gen(2)) * commutator(gen(3), gen(4));
    const IdealMembership r1 = ideal_membership({t1});
    CHECK(r1.member);
    CHECK(expand_certificate(kFree4, r1.certificate) == t1);

    // degree 6 with monomials on both sides
    const Element t2 = gen(2) * commutator(gen(1), gen(3)) * commutator(gen(1), gen(4)) * gen(2);
    const IdealMembership r2 = ideal_membership({t2});
    CHECK(r2.member);
    CHECK(expand_certificate(kFree4, r2.certificate) == t2);

    // degree 6 with a length-two commutator argument
    const Element t3 = commutator(gen(1) * gen(2), gen(3)) * commutator(gen(4), gen(1)) * gen(2);
    const IdealMembership r3 = ideal_membership({t3});
    CHECK(r3.member);
    CHECK(expand_certificate(kFree4, r3.certificate) == t3);

    // same multidegree, but a plain monomial stays outside
    CHECK(!ideal_membership({gen(1) * gen(1) * gen(2) * gen(2) * gen(3) * gen(4)}).member);
}

TEST_CASE("certificate terms print in the expression grammar") {
    const Element target = commutator(gen(1), gen(2)) * commutator(gen(3), gen(4));
    const IdealMembership r = ideal_membership({target});
    REQUIRE(r.member);
    for (const auto& term : r.certificate) {
        const std::string s = certificate_term_str(kFree4, term);
        CHECK(s.find('[') != std::string::npos);
        CHECK(s.find(',') != std::string::npos);
    }
}
