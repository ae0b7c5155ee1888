#include "symch/perm.hpp"

#include <algorithm>
#include <numeric>

namespace symch {

Perm identity_perm(unsigned n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 1u);
    return p;
}

int perm_sign(const Perm& p) {
    unsigned inversions = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        for (size_t j = i + 1; j < p.size(); ++j) {
            if (p[i] > p[j]) ++inversions;
        }
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

bool is_permutation(const Perm& p) {
    std::vector<bool> seen(p.size() + 1, false);
    for (unsigned v : p) {
        if (v < 1 || v > p.size() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

std::vector<Perm> all_permutations(unsigned n) {
    std::vector<Perm> out;
    Perm p = identity_perm(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<Perm> permutations_fixing(unsigned n, unsigned s) {
    std::vector<Perm> out;
    for (auto& p : all_permutations(n)) {
        if (p[s - 1] == s) out.push_back(std::move(p));
    }
    return out;
}

} // namespace symch
