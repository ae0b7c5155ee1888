// charpoly.hpp -- preadjoint, left/right/symmetric determinants, the
// symmetric characteristic polynomial and its matrix-coefficient
// decomposition.
//
// The preadjoint A* = [a*_{r,s}] sums over all permutation pairs (tau, rho)
// with tau(s) = s and rho(s) = r:
//
//   a*_{r,s} = sum sgn(rho) a_{tau(1),rho(tau(1))} ... a_{tau(n),rho(tau(n))}
//
// with the factor at position s omitted and factor order following tau.
// Entries never commute, so the order is kept exactly; the empty product
// (n = 1) is 1. Works over Element entries and over XPoly entries (for
// xI - A).
#pragma once

#include "symch/matrix.hpp"
#include "symch/perm.hpp"

#include <vector>

namespace symch {

unsigned long long small_factorial(unsigned n);

template <class T>
Mat<T> preadjoint(const Mat<T>& a) {
    const unsigned n = a.n();
    Mat<T> out(a.ring(), n);
    const auto perms = all_permutations(n);
    std::vector<int> signs(perms.size());
    for (size_t k = 0; k < perms.size(); ++k) signs[k] = perm_sign(perms[k]);

    const unsigned long long expected_pairs =
        small_factorial(n - 1) * small_factorial(n - 1);

    for (unsigned s = 1; s <= n; ++s) {
        std::vector<size_t> taus;
        for (size_t k = 0; k < perms.size(); ++k) {
            if (perms[k][s - 1] == s) taus.push_back(k);
        }
        unsigned long long column_pairs = 0;
        for (unsigned r = 1; r <= n; ++r) {
            std::vector<size_t> rhos;
            for (size_t k = 0; k < perms.size(); ++k) {
                if (perms[k][s - 1] == r) rhos.push_back(k);
            }
            T acc = T::zero(a.ring());
            unsigned long long pairs = 0;
            for (size_t tk : taus) {
                const Perm& tau = perms[tk];
                for (size_t rk : rhos) {
                    const Perm& rho = perms[rk];
                    ++pairs;
                    T prod = T::one(a.ring());
                    for (unsigned i = 1; i <= n; ++i) {
                        if (i == s) continue;
                        const unsigned row = tau[i - 1];
                        const unsigned col = rho[row - 1];
                        prod = prod * a.at(row - 1, col - 1);
                    }
                    if (signs[rk] < 0) {
                        acc = acc - prod;
                    } else {
                        acc = acc + prod;
                    }
                }
            }
            if (pairs != expected_pairs) {
                throw error("preadjoint: permutation pair count mismatch");
            }
            column_pairs += pairs;
            out.at(r - 1, s - 1) = acc;
        }
        // summed over r this is the (n-1)! n! pair count behind column s
        if (column_pairs != small_factorial(n - 1) * small_factorial(n)) {
            throw error("preadjoint: column pair count mismatch");
        }
    }
    return out;
}

template <class T>
T ldet(const Mat<T>& a) {
    return (preadjoint(a) * a).trace();
}

template <class T>
T rdet(const Mat<T>& a) {
    return (a * preadjoint(a)).trace();
}

// tr(A*A) = tr(AA*); computed as ldet.
template <class T>
T sdet(const Mat<T>& a) {
    return ldet(a);
}

// xI - A with XPoly entries.
PolyMat char_matrix(const Matrix& a);

// Coefficients lambda_0 .. lambda_n of p(x) = sdet(xI - A).
// lambda_n = n! always.
std::vector<Element> symmetric_charpoly(const Matrix& a);

// The decomposition
//   n (xI-A)(xI-A)* = p(x) I + C_0 + C_1 x + ... + C_n x^n
//   n (xI-A)*(xI-A) = p(x) I + D_0 + D_1 x + ... + D_n x^n
// with every entry of every C_i, D_i in [R,R].
struct CharPolyResult {
    std::vector<Element> lambda;   // 0..n
    std::vector<Matrix> C;         // 0..n
    std::vector<Matrix> D;         // 0..n
};

CharPolyResult decompose_thm22(const Matrix& a);

} // namespace symch
