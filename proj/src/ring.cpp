#include "symch/ring.hpp"
#include "symch/linsolve.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

namespace symch {

std::string ring_kind_name(RingKind k) {
    switch (k) {
        case RingKind::rational: return "rational";
        case RingKind::commutative_poly: return "commutative-poly";
        case RingKind::free_algebra: return "free-algebra";
        case RingKind::grassmann: return "grassmann";
        case RingKind::upper_triangular2: return "upper-triangular-2";
    }
    throw error("unreachable ring kind");
}

RingKind ring_kind_from_name(const std::string& name) {
    if (name == "rational") return RingKind::rational;
    if (name == "commutative-poly" || name == "commutative") return RingKind::commutative_poly;
    if (name == "free-algebra" || name == "free") return RingKind::free_algebra;
    if (name == "grassmann") return RingKind::grassmann;
    if (name == "upper-triangular-2" || name == "u2") return RingKind::upper_triangular2;
    throw error("unknown ring kind: " + name);
}

RingDescriptor RingDescriptor::rationals() {
    return RingDescriptor{RingKind::rational, 0, ""};
}

RingDescriptor RingDescriptor::commutative(unsigned generators, std::string prefix) {
    return RingDescriptor{RingKind::commutative_poly, generators, std::move(prefix)};
}

RingDescriptor RingDescriptor::free_algebra(unsigned generators, std::string prefix) {
    return RingDescriptor{RingKind::free_algebra, generators, std::move(prefix)};
}

RingDescriptor RingDescriptor::grassmann(unsigned generators, std::string prefix) {
    return RingDescriptor{RingKind::grassmann, generators, std::move(prefix)};
}

RingDescriptor RingDescriptor::upper_triangular2() {
    return RingDescriptor{RingKind::upper_triangular2, 0, ""};
}

std::string RingDescriptor::str() const {
    std::ostringstream os;
    os << ring_kind_name(kind);
    if (kind == RingKind::commutative_poly || kind == RingKind::free_algebra ||
        kind == RingKind::grassmann) {
        os << "(" << generator_count << ", " << generator_prefix << ")";
    }
    return os.str();
}

unsigned mono_degree(const Mono& m, RingKind kind) {
    if (kind == RingKind::commutative_poly) {
        return std::accumulate(m.ix.begin(), m.ix.end(), 0u);
    }
    return static_cast<unsigned>(m.ix.size());
}

bool MonoCmp::operator()(const Mono& a, const Mono& b) const {
    unsigned da = mono_degree(a, kind);
    unsigned db = mono_degree(b, kind);
    if (da != db) return da < db;
    return a.ix < b.ix;
}

// --------------------------------------------------------------- Element

namespace {

void validate_descriptor(const RingDescriptor& ring) {
    if ((ring.kind == RingKind::rational || ring.kind == RingKind::upper_triangular2) &&
        ring.generator_count != 0) {
        throw error("ring " + ring_kind_name(ring.kind) + " has no generators");
    }
}

} // namespace

Element::Element(RingDescriptor ring)
    : ring_(std::move(ring)), terms_(MonoCmp{ring_.kind}) {
    validate_descriptor(ring_);
}

Element Element::zero(const RingDescriptor& ring) { return Element(ring); }

Element Element::one(const RingDescriptor& ring) { return scalar(ring, Rational(1)); }

Element Element::scalar(const RingDescriptor& ring, const Rational& c) {
    Element e(ring);
    if (c.is_zero()) return e;
    if (ring.kind == RingKind::upper_triangular2) {
        e.ut_ = UTriple{c, Rational(0), c};
    } else {
        Mono unit;
        if (ring.kind == RingKind::commutative_poly) unit.ix.assign(ring.generator_count, 0);
        e.terms_.emplace(std::move(unit), c);
    }
    return e;
}

Element Element::generator(const RingDescriptor& ring, unsigned index) {
    if (ring.kind == RingKind::rational || ring.kind == RingKind::upper_triangular2) {
        throw error("ring " + ring_kind_name(ring.kind) + " has no generators");
    }
    if (index < 1 || index > ring.generator_count) {
        throw error("generator index " + std::to_string(index) + " out of range 1.." +
                    std::to_string(ring.generator_count));
    }
    Mono m;
    if (ring.kind == RingKind::commutative_poly) {
        m.ix.assign(ring.generator_count, 0);
        m.ix[index - 1] = 1;
    } else {
        m.ix.push_back(index);
    }
    return monomial(ring, std::move(m));
}

Element Element::monomial(const RingDescriptor& ring, Mono m, Rational c) {
    Element e(ring);
    if (c.is_zero()) return e;
    if (ring.kind == RingKind::upper_triangular2) throw error("upper-triangular-2 has no monomials");
    if (ring.kind == RingKind::commutative_poly) {
        if (m.ix.size() != ring.generator_count) throw error("exponent vector length mismatch");
    } else {
        for (unsigned i : m.ix) {
            if (i < 1 || i > ring.generator_count) throw error("monomial index out of range");
        }
        if (ring.kind == RingKind::grassmann) {
            for (size_t i = 1; i < m.ix.size(); ++i) {
                if (m.ix[i] <= m.ix[i - 1]) throw error("grassmann blade indices must strictly increase");
            }
        }
    }
    e.terms_.emplace(std::move(m), std::move(c));
    return e;
}

Element Element::ut(const RingDescriptor& ring, Rational p, Rational q, Rational r) {
    if (ring.kind != RingKind::upper_triangular2) throw error("u(p,q,r) requires the upper-triangular-2 ring");
    Element e(ring);
    e.ut_ = UTriple{std::move(p), std::move(q), std::move(r)};
    return e;
}

bool Element::is_zero() const {
    if (ring_.kind == RingKind::upper_triangular2) {
        return ut_.p.is_zero() && ut_.q.is_zero() && ut_.r.is_zero();
    }
    return terms_.empty();
}

bool Element::is_scalar() const {
    if (ring_.kind == RingKind::upper_triangular2) {
        return ut_.q.is_zero() && ut_.p == ut_.r;
    }
    if (terms_.empty()) return true;
    return terms_.size() == 1 && mono_degree(terms_.begin()->first, ring_.kind) == 0;
}

Rational Element::scalar_value() const {
    if (!is_scalar()) throw error("Element::scalar_value: not a scalar");
    if (ring_.kind == RingKind::upper_triangular2) return ut_.p;
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

size_t Element::term_count() const {
    if (ring_.kind == RingKind::upper_triangular2) return is_zero() ? 0 : 1;
    return terms_.size();
}

unsigned Element::degree() const {
    if (ring_.kind == RingKind::upper_triangular2 || terms_.empty()) return 0;
    return mono_degree(terms_.rbegin()->first, ring_.kind);
}

void Element::add_term(const Mono& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void check_same_ring(const Element& a, const Element& b) {
    if (!(a.ring() == b.ring())) {
        throw ring_mismatch("ring descriptor mismatch: " + a.ring().str() + " vs " + b.ring().str());
    }
}

Element Element::operator-() const {
    Element r(ring_);
    if (ring_.kind == RingKind::upper_triangular2) {
        r.ut_ = UTriple{-ut_.p, -ut_.q, -ut_.r};
        return r;
    }
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Element operator+(const Element& a, const Element& b) {
    check_same_ring(a, b);
    Element r = a;
    if (a.ring_.kind == RingKind::upper_triangular2) {
        r.ut_.p += b.ut_.p;
        r.ut_.q += b.ut_.q;
        r.ut_.r += b.ut_.r;
        return r;
    }
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

Element operator-(const Element& a, const Element& b) { return a + (-b); }

namespace {

// Grassmann blade product: merge two strictly increasing index lists,
// tracking the parity of the transpositions. Returns false when the blades
// share an index (product is zero).
bool blade_mul(const Mono& a, const Mono& b, Mono& out, bool& negative) {
    out.ix.clear();
    out.ix.reserve(a.ix.size() + b.ix.size());
    size_t i = 0, j = 0;
    size_t swaps = 0;
    while (i < a.ix.size() && j < b.ix.size()) {
        if (a.ix[i] == b.ix[j]) return false;
        if (a.ix[i] < b.ix[j]) {
            out.ix.push_back(a.ix[i++]);
        } else {
            // b.ix[j] moves left past the remaining letters of a
            swaps += a.ix.size() - i;
            out.ix.push_back(b.ix[j++]);
        }
    }
    while (i < a.ix.size()) out.ix.push_back(a.ix[i++]);
    while (j < b.ix.size()) out.ix.push_back(b.ix[j++]);
    negative = (swaps % 2) != 0;
    return true;
}

} // namespace

Element operator*(const Element& a, const Element& b) {
    check_same_ring(a, b);
    Element r(a.ring_);
    const RingKind kind = a.ring_.kind;
    if (kind == RingKind::upper_triangular2) {
        const UTriple& x = a.ut_;
        const UTriple& y = b.ut_;
        r.ut_ = UTriple{x.p * y.p, x.p * y.q + x.q * y.r, x.r * y.r};
        return r;
    }
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Mono m;
            Rational c = ca * cb;
            switch (kind) {
                case RingKind::rational:
                    break;
                case RingKind::commutative_poly:
                    m.ix.resize(ma.ix.size());
                    for (size_t i = 0; i < ma.ix.size(); ++i) m.ix[i] = ma.ix[i] + mb.ix[i];
                    break;
                case RingKind::free_algebra:
                    m.ix = ma.ix;
                    m.ix.insert(m.ix.end(), mb.ix.begin(), mb.ix.end());
                    break;
                case RingKind::grassmann: {
                    bool neg = false;
                    if (!blade_mul(ma, mb, m, neg)) continue;
                    if (neg) c = -c;
                    break;
                }
                case RingKind::upper_triangular2:
                    break;
            }
            r.add_term(m, c);
        }
    }
    return r;
}

Element operator*(const Rational& c, const Element& a) {
    return Element::scalar(a.ring(), c) * a;
}

Element Element::pow(unsigned k) const {
    Element r = one(ring_);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

Element commutator(const Element& a, const Element& b) {
    return a * b - b * a;
}

// ------------------------------------------------------------- printing

namespace {

std::string mono_str(const Mono& m, const RingDescriptor& ring) {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](unsigned index, unsigned exp) {
        if (exp == 0) return;
        if (!first) os << "*";
        first = false;
        os << ring.generator_prefix << index;
        if (exp > 1) os << "^" << exp;
    };
    if (ring.kind == RingKind::commutative_poly) {
        for (size_t i = 0; i < m.ix.size(); ++i) emit(static_cast<unsigned>(i) + 1, m.ix[i]);
    } else if (ring.kind == RingKind::free_algebra) {
        size_t i = 0;
        while (i < m.ix.size()) {
            size_t j = i;
            while (j < m.ix.size() && m.ix[j] == m.ix[i]) ++j;
            emit(m.ix[i], static_cast<unsigned>(j - i));
            i = j;
        }
    } else {
        for (unsigned idx : m.ix) emit(idx, 1);
    }
    return os.str();
}

} // namespace

std::string Element::str() const {
    if (is_zero()) return "0";
    if (ring_.kind == RingKind::upper_triangular2) {
        return "u(" + ut_.p.str() + ", " + ut_.q.str() + ", " + ut_.r.str() + ")";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool neg = c.is_negative();
        const Rational mag = neg ? -c : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (m.empty() || mono_degree(m, ring_.kind) == 0) {
            os << mag.str();
        } else {
            if (!mag.is_one()) os << mag.str() << "*";
            os << mono_str(m, ring_);
        }
    }
    return os.str();
}

// ----------------------------------------------- commutator subgroup

namespace {

Mono min_rotation(const Mono& w) {
    if (w.ix.size() < 2) return w;
    Mono best = w;
    Mono rot = w;
    for (size_t k = 1; k < w.ix.size(); ++k) {
        std::rotate(rot.ix.begin(), rot.ix.begin() + 1, rot.ix.end());
        if (rot.ix < best.ix) best = rot;
    }
    return best;
}

QVec grassmann_to_qvec(const Element& e) {
    const unsigned k = e.ring().generator_count;
    QVec v(static_cast<size_t>(1) << k, Rational(0));
    for (const auto& [m, c] : e.terms()) {
        size_t mask = 0;
        for (unsigned idx : m.ix) mask |= static_cast<size_t>(1) << (idx - 1);
        v[mask] = c;
    }
    return v;
}

QVec ut_to_qvec(const Element& e) {
    return QVec{e.triple().p, e.triple().q, e.triple().r};
}

// Span of commutators of basis elements, cached per descriptor. The
// additive subgroup generated by all commutators is closed under rational
// scaling (q[r,s] = [qr,s]), so it equals this Q-span.
const RowSpan& commutator_span(const RingDescriptor& ring) {
    static std::mutex mu;
    static std::map<std::pair<int, unsigned>, RowSpan> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(static_cast<int>(ring.kind), ring.generator_count);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    if (ring.kind == RingKind::upper_triangular2) {
        RowSpan span(3);
        std::vector<Element> basis = {
            Element::ut(ring, Rational(1), Rational(0), Rational(0)),
            Element::ut(ring, Rational(0), Rational(1), Rational(0)),
            Element::ut(ring, Rational(0), Rational(0), Rational(1)),
        };
        for (size_t i = 0; i < basis.size(); ++i) {
            for (size_t j = i + 1; j < basis.size(); ++j) {
                span.add(ut_to_qvec(commutator(basis[i], basis[j])));
            }
        }
        return cache.emplace(key, std::move(span)).first->second;
    }

    // grassmann
    const unsigned k = ring.generator_count;
    if (k > 16) throw error("grassmann commutator span: generator count too large");
    const size_t dim = static_cast<size_t>(1) << k;
    RowSpan span(dim);
    std::vector<Element> blades;
    blades.reserve(dim);
    for (size_t mask = 0; mask < dim; ++mask) {
        Mono m;
        for (unsigned b = 0; b < k; ++b) {
            if (mask & (static_cast<size_t>(1) << b)) m.ix.push_back(b + 1);
        }
        blades.push_back(Element::monomial(ring, std::move(m)));
    }
    for (size_t i = 0; i < blades.size(); ++i) {
        for (size_t j = i + 1; j < blades.size(); ++j) {
            Element c = commutator(blades[i], blades[j]);
            if (!c.is_zero()) span.add(grassmann_to_qvec(c));
        }
    }
    return cache.emplace(key, std::move(span)).first->second;
}

} // namespace

bool is_in_commutator_subgroup(const Element& a) {
    switch (a.ring().kind) {
        case RingKind::rational:
        case RingKind::commutative_poly:
            return a.is_zero();
        case RingKind::free_algebra: {
            // coefficients must cancel within every cyclic-rotation class
            std::map<Mono, Rational> sums;
            for (const auto& [m, c] : a.terms()) sums[min_rotation(m)] += c;
            for (const auto& [m, s] : sums) {
                if (!s.is_zero()) return false;
            }
            return true;
        }
        case RingKind::grassmann:
            return commutator_span(a.ring()).contains(grassmann_to_qvec(a));
        case RingKind::upper_triangular2:
            return commutator_span(a.ring()).contains(ut_to_qvec(a));
    }
    throw error("unreachable");
}

bool center_contains(const Element& a) {
    const RingDescriptor& ring = a.ring();
    switch (ring.kind) {
        case RingKind::rational:
        case RingKind::commutative_poly:
            return true;
        case RingKind::free_algebra:
        case RingKind::grassmann:
            for (unsigned i = 1; i <= ring.generator_count; ++i) {
                if (!commutator(a, Element::generator(ring, i)).is_zero()) return false;
            }
            return true;
        case RingKind::upper_triangular2: {
            const std::array<UTriple, 3> basis = {
                UTriple{Rational(1), Rational(0), Rational(0)},
                UTriple{Rational(0), Rational(1), Rational(0)},
                UTriple{Rational(0), Rational(0), Rational(1)},
            };
            for (const auto& b : basis) {
                Element eb = Element::ut(ring, b.p, b.q, b.r);
                if (!commutator(a, eb).is_zero()) return false;
            }
            return true;
        }
    }
    throw error("unreachable");
}

} // namespace symch
