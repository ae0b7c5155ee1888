#include "symch/randomgen.hpp"

#include <algorithm>

namespace symch {

namespace {

Rational random_coeff(Rng& rng, long long max_coeff, bool allow_zero) {
    long long c = rng.int_in(allow_zero ? -max_coeff : -max_coeff + 1, max_coeff);
    if (!allow_zero && c <= 0) c -= 1;   // skip zero, keep symmetry
    return Rational(c);
}

} // namespace

Element random_element(Rng& rng, const RingDescriptor& ring, const RandomElementParams& params) {
    switch (ring.kind) {
        case RingKind::rational:
            return Element::scalar(ring, random_coeff(rng, params.max_coeff, true));
        case RingKind::upper_triangular2:
            return Element::ut(ring, random_coeff(rng, params.max_coeff, true),
                               random_coeff(rng, params.max_coeff, true),
                               random_coeff(rng, params.max_coeff, true));
        default:
            break;
    }

    const unsigned k = ring.generator_count;
    Element acc = Element::zero(ring);
    const unsigned terms = static_cast<unsigned>(rng.int_in(1, params.max_terms));
    for (unsigned t = 0; t < terms; ++t) {
        const Rational c = random_coeff(rng, params.max_coeff, false);
        Mono m;
        if (k > 0) {
            unsigned deg = static_cast<unsigned>(rng.int_in(0, params.max_degree));
            if (ring.kind == RingKind::commutative_poly) {
                m.ix.assign(k, 0);
                for (unsigned d = 0; d < deg; ++d) {
                    m.ix[static_cast<size_t>(rng.int_in(0, k - 1))] += 1;
                }
            } else if (ring.kind == RingKind::free_algebra) {
                for (unsigned d = 0; d < deg; ++d) {
                    m.ix.push_back(static_cast<unsigned>(rng.int_in(1, k)));
                }
            } else {   // grassmann: a strictly increasing subset
                deg = std::min(deg, k);
                std::vector<unsigned> pool;
                for (unsigned i = 1; i <= k; ++i) pool.push_back(i);
                for (unsigned d = 0; d < deg; ++d) {
                    size_t pick = static_cast<size_t>(rng.int_in(0, static_cast<long long>(pool.size()) - 1));
                    m.ix.push_back(pool[pick]);
                    pool.erase(pool.begin() + static_cast<long>(pick));
                }
                std::sort(m.ix.begin(), m.ix.end());
            }
        } else if (ring.kind == RingKind::commutative_poly) {
            m.ix.assign(0, 0);
        }
        acc += Element::monomial(ring, std::move(m), c);
    }
    return acc;
}

Matrix random_matrix(Rng& rng, const RingDescriptor& ring, unsigned n,
                     const RandomElementParams& params) {
    Matrix m(ring, n);
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) m.at(i, j) = random_element(rng, ring, params);
    }
    return m;
}

Matrix random_integer_matrix(Rng& rng, unsigned n, long long max_coeff) {
    Matrix m(RingDescriptor::rationals(), n);
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
            m.at(i, j) = Element::scalar(m.ring(), Rational(rng.int_in(-max_coeff, max_coeff)));
        }
    }
    return m;
}

Matrix generic_free_matrix(unsigned n, const std::string& prefix) {
    const RingDescriptor ring = RingDescriptor::free_algebra(n * n, prefix);
    Matrix m(ring, n);
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
            m.at(i, j) = Element::generator(ring, i * n + j + 1);
        }
    }
    return m;
}

Matrix random_permutation_conjugator(Rng& rng, const RingDescriptor& ring, unsigned n) {
    std::vector<unsigned> image(n);
    for (unsigned i = 0; i < n; ++i) image[i] = i;
    for (unsigned i = n; i-- > 1;) {
        std::swap(image[i], image[static_cast<size_t>(rng.int_in(0, i))]);
    }
    Matrix g(ring, n);
    for (unsigned i = 0; i < n; ++i) g.at(i, image[i]) = Element::one(ring);
    return g;
}

Matrix random_unimodular_conjugator(Rng& rng, const RingDescriptor& ring, unsigned n) {
    std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n, Rational(0)));
    for (unsigned i = 0; i < n; ++i) g[i][i] = Rational(1);
    if (n > 1) {
        const unsigned ops = 2 * n;
        for (unsigned t = 0; t < ops; ++t) {
            unsigned i = static_cast<unsigned>(rng.int_in(0, n - 1));
            unsigned j = static_cast<unsigned>(rng.int_in(0, n - 2));
            if (j >= i) ++j;
            long long c = rng.int_in(1, 2) * (rng.int_in(0, 1) ? 1 : -1);
            // row_j += c * row_i keeps the determinant at +-1
            for (unsigned col = 0; col < n; ++col) {
                g[j][col] += Rational(c) * g[i][col];
            }
        }
    }
    return embed_rational_matrix(ring, g);
}

} // namespace symch
