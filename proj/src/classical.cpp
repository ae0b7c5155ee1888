#include "symch/classical.hpp"
#include "symch/charpoly.hpp"

namespace symch {

Matrix classical_adjugate(const Matrix& a) {
    const unsigned n = a.n();
    Matrix adj(a.ring(), n);
    if (n == 1) {
        adj.at(0, 0) = Element::one(a.ring());
        return adj;
    }
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
            Element cof = classical_det(drop_row_col(a, j, i));
            if ((i + j) % 2 != 0) cof = -cof;
            adj.at(i, j) = cof;
        }
    }
    return adj;
}

std::vector<Element> classical_charpoly(const Matrix& a) {
    const unsigned n = a.n();
    const XPoly det = classical_det(char_matrix(a));
    std::vector<Element> out;
    out.reserve(n + 1);
    for (unsigned d = 0; d <= n; ++d) out.push_back(det.coeff(d));
    return out;
}

} // namespace symch
