// perm.hpp -- permutations of {1..n} in one-line notation.
#pragma once

#include <vector>

namespace symch {

// perm[i-1] is the image of i.
using Perm = std::vector<unsigned>;

Perm identity_perm(unsigned n);
int perm_sign(const Perm& p);
bool is_permutation(const Perm& p);

// All permutations of {1..n} in lexicographic one-line order.
std::vector<Perm> all_permutations(unsigned n);

// Permutations fixing the point s (1-based), lexicographic.
std::vector<Perm> permutations_fixing(unsigned n, unsigned s);

} // namespace symch
