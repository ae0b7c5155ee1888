// randomgen.hpp -- seeded, reproducible generation of ring elements,
// matrices and conjugators. Draws are made with explicit modulo reduction
// so identical seeds give identical values on every platform.
#pragma once

#include "symch/matrix.hpp"

#include <cstdint>
#include <random>

namespace symch {

class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    // uniform in [lo, hi], inclusive
    long long int_in(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }

private:
    std::mt19937_64 eng_;
};

struct RandomElementParams {
    unsigned max_terms = 3;
    unsigned max_degree = 2;
    long long max_coeff = 3;
};

Element random_element(Rng& rng, const RingDescriptor& ring,
                       const RandomElementParams& params = {});

Matrix random_matrix(Rng& rng, const RingDescriptor& ring, unsigned n,
                     const RandomElementParams& params = {});

// Integer-entry matrix over the rationals, |entry| <= max_coeff.
Matrix random_integer_matrix(Rng& rng, unsigned n, long long max_coeff = 3);

// n x n matrix of n^2 distinct free generators x1 .. x_{n^2}, row-major.
Matrix generic_free_matrix(unsigned n, const std::string& prefix = "x");

// Permutation matrix with rational entries embedded in the given ring.
Matrix random_permutation_conjugator(Rng& rng, const RingDescriptor& ring, unsigned n);

// Product of elementary row operations: unimodular, rational entries.
Matrix random_unimodular_conjugator(Rng& rng, const RingDescriptor& ring, unsigned n);

} // namespace symch
