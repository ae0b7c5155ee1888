// ring.hpp -- exact arithmetic in the five supported coefficient rings:
// rationals, commutative polynomials, the free associative algebra, the
// finite Grassmann algebra E_k and 2x2 upper triangular matrices over Q.
//
// Every Element is an immutable canonical normal form: a sparse
// coefficient map ordered by deglex (no zero coefficient is ever stored),
// or a (p,q,r) triple for upper-triangular-2. Equality of Elements is
// equality of canonical forms.
#pragma once

#include "symch/rational.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace symch {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ring_mismatch : error {
    using error::error;
};

enum class RingKind {
    rational,
    commutative_poly,
    free_algebra,
    grassmann,
    upper_triangular2,
};

std::string ring_kind_name(RingKind k);
RingKind ring_kind_from_name(const std::string& name);   // throws on unknown

// Identifies one coefficient ring. Elements are combinable only when their
// descriptors compare equal. rational and upper-triangular-2 always have
// generator_count 0; the other kinds admit 0 generators and then collapse
// to the rationals.
struct RingDescriptor {
    RingKind kind = RingKind::rational;
    unsigned generator_count = 0;
    std::string generator_prefix;   // "x" for free/commutative, "v" for grassmann

    static RingDescriptor rationals();
    static RingDescriptor commutative(unsigned generators, std::string prefix = "x");
    static RingDescriptor free_algebra(unsigned generators, std::string prefix = "x");
    static RingDescriptor grassmann(unsigned generators, std::string prefix = "v");
    static RingDescriptor upper_triangular2();

    bool operator==(const RingDescriptor&) const = default;
    std::string str() const;
};

// Monomial key. The meaning of the index vector depends on the ring kind:
//   free algebra      -- the word's letters (1-based generator indices)
//   commutative poly  -- exponent vector of length generator_count
//   grassmann         -- strictly increasing generator indices of the blade
// The empty vector is the monomial 1 in every kind.
struct Mono {
    std::vector<unsigned> ix;

    bool empty() const { return ix.empty(); }
    size_t size() const { return ix.size(); }
    bool operator==(const Mono&) const = default;
    auto operator<=>(const Mono&) const = default;   // raw lex order; deglex is MonoCmp
};

// deglex: total degree first, then lexicographic on the index vector.
struct MonoCmp {
    RingKind kind = RingKind::rational;
    bool operator()(const Mono& a, const Mono& b) const;
};

unsigned mono_degree(const Mono& m, RingKind kind);

using TermMap = std::map<Mono, Rational, MonoCmp>;

// [[p, q], [0, r]]
struct UTriple {
    Rational p, q, r;
    bool operator==(const UTriple&) const = default;
};

class Element {
public:
    Element() : Element(RingDescriptor::rationals()) {}
    explicit Element(RingDescriptor ring);

    static Element zero(const RingDescriptor& ring);
    static Element one(const RingDescriptor& ring);
    static Element scalar(const RingDescriptor& ring, const Rational& c);
    static Element generator(const RingDescriptor& ring, unsigned index);   // 1-based
    static Element monomial(const RingDescriptor& ring, Mono m, Rational c = Rational(1));
    static Element ut(const RingDescriptor& ring, Rational p, Rational q, Rational r);

    const RingDescriptor& ring() const { return ring_; }

    bool is_zero() const;
    // True when the element is c*1 for a rational c (for upper-triangular-2:
    // a scalar multiple of the identity matrix).
    bool is_scalar() const;
    Rational scalar_value() const;   // requires is_scalar()

    const TermMap& terms() const { return terms_; }           // non-UT2 kinds
    const UTriple& triple() const { return ut_; }             // UT2 only
    size_t term_count() const;
    unsigned degree() const;   // max monomial degree; 0 for zero and UT2

    Element operator-() const;
    friend Element operator+(const Element& a, const Element& b);
    friend Element operator-(const Element& a, const Element& b);
    friend Element operator*(const Element& a, const Element& b);
    Element& operator+=(const Element& b) { *this = *this + b; return *this; }
    Element& operator-=(const Element& b) { *this = *this - b; return *this; }
    Element& operator*=(const Element& b) { *this = *this * b; return *this; }
    friend Element operator*(const Rational& c, const Element& a);

    Element pow(unsigned k) const;

    bool operator==(const Element& b) const = default;

    std::string str() const;   // canonical form in the CLI expression grammar

private:
    RingDescriptor ring_;
    TermMap terms_;   // all kinds except upper_triangular2
    UTriple ut_;      // upper_triangular2 only

    void add_term(const Mono& m, const Rational& c);   // accumulate, strip zeros
    friend class ElementBuilder;
};

// ab - ba
Element commutator(const Element& a, const Element& b);

// True iff a lies in the additive span of all commutators rs - sr.
// Free algebra: every cyclic-rotation class of words has coefficient sum
// zero. Commutative kinds: a = 0. Grassmann / upper-triangular-2: exact
// membership in the (cached) linear span of basis-element commutators.
bool is_in_commutator_subgroup(const Element& a);

// True iff a commutes with every generator (grassmann, free, commutative)
// resp. every basis matrix (upper-triangular-2). Scalars are always central.
bool center_contains(const Element& a);

void check_same_ring(const Element& a, const Element& b);

} // namespace symch
