// classical.hpp -- cofactor-expansion determinant, adjugate and
// characteristic polynomial for matrices with commuting entries.
//
// This is the independent cross-check route: plain Laplace expansion along
// the first row, no permutation-sum machinery shared with charpoly.hpp.
// Only meaningful over the rational and commutative-poly rings.
#pragma once

#include "symch/matrix.hpp"

#include <vector>

namespace symch {

template <class T>
Mat<T> drop_row_col(const Mat<T>& a, unsigned row, unsigned col) {
    Mat<T> m(a.ring(), a.n() - 1);
    unsigned ii = 0;
    for (unsigned i = 0; i < a.n(); ++i) {
        if (i == row) continue;
        unsigned jj = 0;
        for (unsigned j = 0; j < a.n(); ++j) {
            if (j == col) continue;
            m.at(ii, jj) = a.at(i, j);
            ++jj;
        }
        ++ii;
    }
    return m;
}

template <class T>
T classical_det(const Mat<T>& a) {
    const unsigned n = a.n();
    if (n == 1) return a.at(0, 0);
    T acc = T::zero(a.ring());
    for (unsigned j = 0; j < n; ++j) {
        if (a.at(0, j).is_zero()) continue;
        T term = a.at(0, j) * classical_det(drop_row_col(a, 0, j));
        if (j % 2 == 0) {
            acc = acc + term;
        } else {
            acc = acc - term;
        }
    }
    return acc;
}

// adj(A)_{ij} = (-1)^{i+j} det(minor_{ji}); adj(A) for n = 1 is [1].
Matrix classical_adjugate(const Matrix& a);

// Coefficients of det(xI - A), degree n, monic.
std::vector<Element> classical_charpoly(const Matrix& a);

} // namespace symch
