// ideal.hpp -- membership, with certificate, in the two-sided ideal of the
// free algebra generated by all products of two commutators. The degree-d
// multihomogeneous component of the ideal is spanned by
//
//   m1 [w1,w2] [w3,w4] m2
//
// over monomials with matching multidegree (commutators are bilinear, so
// monomial arguments suffice); membership is decided by exact Gaussian
// elimination over the rationals on that spanning set.
#pragma once

#include "symch/ring.hpp"

#include <vector>

namespace symch {

struct IdealMembershipInstance {
    Element target;   // free-algebra, multihomogeneous
};

struct IdealCertTerm {
    Rational coeff;
    Mono m1, w1, w2, w3, w4, m2;
};

struct IdealMembership {
    bool member = false;
    std::vector<IdealCertTerm> certificate;   // nonempty only on success
    size_t span_size = 0;                     // distinct spanning elements used
    size_t component_dim = 0;                 // monomials of the target's multidegree
};

// Multidegree of a free word: per-generator letter counts.
std::vector<unsigned> multidegree(const Mono& word, unsigned generator_count);

bool is_multihomogeneous(const Element& e);

// Splits a free-algebra element into its multihomogeneous components,
// ordered by multidegree.
std::vector<Element> multihomogeneous_components(const Element& e);

// Decides membership of a multihomogeneous free-algebra element. Throws
// on a non-free ring or a non-multihomogeneous target.
IdealMembership ideal_membership(const IdealMembershipInstance& instance);

// Re-expands a certificate; used to confirm soundness exactly.
Element expand_certificate(const RingDescriptor& ring, const std::vector<IdealCertTerm>& cert);

std::string certificate_term_str(const RingDescriptor& ring, const IdealCertTerm& term);

} // namespace symch
