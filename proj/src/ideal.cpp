#include "symch/ideal.hpp"
#include "symch/linsolve.hpp"

#include <algorithm>
#include <map>

namespace symch {

std::vector<unsigned> multidegree(const Mono& word, unsigned generator_count) {
    std::vector<unsigned> d(generator_count, 0);
    for (unsigned letter : word.ix) d[letter - 1] += 1;
    return d;
}

bool is_multihomogeneous(const Element& e) {
    if (e.ring().kind != RingKind::free_algebra) {
        throw error("multihomogeneity is defined for free-algebra elements");
    }
    if (e.is_zero()) return true;
    const unsigned k = e.ring().generator_count;
    auto it = e.terms().begin();
    const auto d0 = multidegree(it->first, k);
    for (++it; it != e.terms().end(); ++it) {
        if (multidegree(it->first, k) != d0) return false;
    }
    return true;
}

std::vector<Element> multihomogeneous_components(const Element& e) {
    if (e.ring().kind != RingKind::free_algebra) {
        throw error("multihomogeneity is defined for free-algebra elements");
    }
    const unsigned k = e.ring().generator_count;
    std::map<std::vector<unsigned>, Element> buckets;
    for (const auto& [m, c] : e.terms()) {
        auto d = multidegree(m, k);
        auto it = buckets.find(d);
        if (it == buckets.end()) it = buckets.emplace(d, Element::zero(e.ring())).first;
        it->second += Element::monomial(e.ring(), m, c);
    }
    std::vector<Element> out;
    out.reserve(buckets.size());
    for (auto& [d, comp] : buckets) out.push_back(std::move(comp));
    return out;
}

namespace {

// All words with the given per-generator letter counts, lexicographic.
void words_rec(std::vector<unsigned>& remaining, Mono& acc, unsigned left,
               std::vector<Mono>& out) {
    if (left == 0) {
        out.push_back(acc);
        return;
    }
    for (unsigned g = 0; g < remaining.size(); ++g) {
        if (remaining[g] == 0) continue;
        remaining[g] -= 1;
        acc.ix.push_back(g + 1);
        words_rec(remaining, acc, left - 1, out);
        acc.ix.pop_back();
        remaining[g] += 1;
    }
}

std::vector<Mono> words_of_multidegree(const std::vector<unsigned>& deg) {
    unsigned total = 0;
    for (unsigned d : deg) total += d;
    std::vector<Mono> out;
    std::vector<unsigned> rem = deg;
    Mono acc;
    words_rec(rem, acc, total, out);
    return out;
}

// Sub-multidegrees mu <= deg (componentwise), ascending.
std::vector<std::vector<unsigned>> sub_multidegrees(const std::vector<unsigned>& deg) {
    std::vector<std::vector<unsigned>> out = {std::vector<unsigned>(deg.size(), 0)};
    for (size_t g = 0; g < deg.size(); ++g) {
        std::vector<std::vector<unsigned>> next;
        for (const auto& v : out) {
            for (unsigned c = 0; c <= deg[g]; ++c) {
                auto w = v;
                w[g] = c;
                next.push_back(std::move(w));
            }
        }
        out = std::move(next);
    }
    return out;
}

unsigned total_of(const std::vector<unsigned>& d) {
    unsigned t = 0;
    for (unsigned x : d) t += x;
    return t;
}

std::vector<unsigned> minus(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
    std::vector<unsigned> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

bool leq(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

struct SpanCandidate {
    IdealCertTerm shape;   // coeff unset until solved
    Element expanded;
};

Element expand_term(const RingDescriptor& ring, const IdealCertTerm& t) {
    auto mono = [&](const Mono& m) { return Element::monomial(ring, m); };
    const Element c1 = commutator(mono(t.w1), mono(t.w2));
    const Element c2 = commutator(mono(t.w3), mono(t.w4));
    return mono(t.m1) * c1 * c2 * mono(t.m2);
}

} // namespace

Element expand_certificate(const RingDescriptor& ring, const std::vector<IdealCertTerm>& cert) {
    Element acc = Element::zero(ring);
    for (const auto& t : cert) {
        acc += Element::scalar(ring, t.coeff) * expand_term(ring, t);
    }
    return acc;
}

std::string certificate_term_str(const RingDescriptor& ring, const IdealCertTerm& term) {
    auto ms = [&](const Mono& m) {
        return m.empty() ? std::string("1") : Element::monomial(ring, m).str();
    };
    std::string out = term.coeff.str();
    out += " * " + ms(term.m1);
    out += " * [" + ms(term.w1) + "," + ms(term.w2) + "]";
    out += " * [" + ms(term.w3) + "," + ms(term.w4) + "]";
    out += " * " + ms(term.m2);
    return out;
}

IdealMembership ideal_membership(const IdealMembershipInstance& instance) {
    const Element& target = instance.target;
    const RingDescriptor& ring = target.ring();
    if (ring.kind != RingKind::free_algebra) {
        throw error("ideal_membership: target must live in a free algebra");
    }
    IdealMembership out;
    if (target.is_zero()) {
        out.member = true;
        out.component_dim = 0;
        return out;
    }
    if (!is_multihomogeneous(target)) {
        throw error("ideal_membership: target is not multihomogeneous");
    }

    const unsigned k = ring.generator_count;
    const std::vector<unsigned> deg = multidegree(target.terms().begin()->first, k);

    // Index the monomial component.
    const std::vector<Mono> monos = words_of_multidegree(deg);
    std::map<Mono, size_t> mono_index;
    for (size_t i = 0; i < monos.size(); ++i) mono_index.emplace(monos[i], i);
    out.component_dim = monos.size();

    auto to_qvec = [&](const Element& e) {
        QVec v(monos.size(), Rational(0));
        for (const auto& [m, c] : e.terms()) v[mono_index.at(m)] = c;
        return v;
    };

    // Enumerate spanning elements m1 [w1,w2] [w3,w4] m2 of this multidegree,
    // deduplicated by canonical form up to sign.
    std::vector<SpanCandidate> span;
    std::map<std::string, size_t> seen;

    const auto subs = sub_multidegrees(deg);
    for (const auto& d1 : subs) {                       // m1
        for (const auto& dw1 : sub_multidegrees(minus(deg, d1))) {
            if (total_of(dw1) == 0) continue;
            auto rem1 = minus(minus(deg, d1), dw1);
            for (const auto& dw2 : sub_multidegrees(rem1)) {
                if (total_of(dw2) == 0) continue;
                auto rem2 = minus(rem1, dw2);
                for (const auto& dw3 : sub_multidegrees(rem2)) {
                    if (total_of(dw3) == 0) continue;
                    auto rem3 = minus(rem2, dw3);
                    for (const auto& dw4 : sub_multidegrees(rem3)) {
                        if (total_of(dw4) == 0) continue;
                        auto d2 = minus(rem3, dw4);   // m2 takes the rest
                        if (!leq(d2, deg)) continue;
                        for (const auto& m1 : words_of_multidegree(d1))
                        for (const auto& w1 : words_of_multidegree(dw1))
                        for (const auto& w2 : words_of_multidegree(dw2))
                        for (const auto& w3 : words_of_multidegree(dw3))
                        for (const auto& w4 : words_of_multidegree(dw4))
                        for (const auto& m2 : words_of_multidegree(d2)) {
                            IdealCertTerm shape;
                            shape.coeff = Rational(1);
                            shape.m1 = m1; shape.w1 = w1; shape.w2 = w2;
                            shape.w3 = w3; shape.w4 = w4; shape.m2 = m2;
                            Element e = expand_term(ring, shape);
                            if (e.is_zero()) continue;
                            // sign-normalize before dedup
                            if (e.terms().begin()->second.is_negative()) {
                                e = -e;
                                shape.coeff = Rational(-1);
                            }
                            const std::string key = e.str();
                            if (seen.count(key)) continue;
                            seen.emplace(key, span.size());
                            span.push_back(SpanCandidate{std::move(shape), std::move(e)});
                        }
                    }
                }
            }
        }
    }
    out.span_size = span.size();

    std::vector<QVec> cols;
    cols.reserve(span.size());
    for (const auto& c : span) cols.push_back(to_qvec(c.expanded));
    auto solution = solve_combination(cols, to_qvec(target));
    if (!solution) return out;

    out.member = true;
    for (size_t j = 0; j < span.size(); ++j) {
        const Rational& x = (*solution)[j];
        if (x.is_zero()) continue;
        IdealCertTerm t = span[j].shape;
        t.coeff = x * t.coeff;   // fold the sign normalization back in
        out.certificate.push_back(std::move(t));
    }
    return out;
}

} // namespace symch
