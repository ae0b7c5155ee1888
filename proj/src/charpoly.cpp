#include "symch/charpoly.hpp"

namespace symch {

unsigned long long small_factorial(unsigned n) {
    unsigned long long r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

PolyMat char_matrix(const Matrix& a) {
    const unsigned n = a.n();
    PolyMat x(a.ring(), n);
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
            std::vector<Element> coeffs = {-a.at(i, j)};
            if (i == j) coeffs.push_back(Element::one(a.ring()));
            x.at(i, j) = make_xpoly(a.ring(), std::move(coeffs));
        }
    }
    return x;
}

std::vector<Element> symmetric_charpoly(const Matrix& a) {
    const unsigned n = a.n();
    const PolyMat x = char_matrix(a);
    const XPoly p = (preadjoint(x) * x).trace();
    std::vector<Element> lambda;
    lambda.reserve(n + 1);
    for (unsigned d = 0; d <= n; ++d) lambda.push_back(p.coeff(d));
    if (p.degree() > static_cast<int>(n)) throw error("symmetric_charpoly: degree exceeds n");
    const Element want = Element::scalar(a.ring(), Rational(BigInt::factorial(n), BigInt(1)));
    if (!(lambda[n] == want)) throw error("symmetric_charpoly: leading coefficient is not n!");
    return lambda;
}

CharPolyResult decompose_thm22(const Matrix& a) {
    const unsigned n = a.n();
    const RingDescriptor& ring = a.ring();
    const PolyMat x = char_matrix(a);
    const PolyMat xstar = preadjoint(x);

    const XPoly scale_n = XPoly::constant(Element::scalar(ring, Rational(n)));
    const CentralPoly prod_c = CentralPoly::from_poly_mat((x * xstar).scale_left(scale_n));
    const CentralPoly prod_d = CentralPoly::from_poly_mat((xstar * x).scale_left(scale_n));

    const XPoly p = (xstar * x).trace();

    CharPolyResult out;
    out.lambda.reserve(n + 1);
    for (unsigned d = 0; d <= n; ++d) out.lambda.push_back(p.coeff(d));
    const Element nfact = Element::scalar(ring, Rational(BigInt::factorial(n), BigInt(1)));
    if (p.degree() > static_cast<int>(n) || !(out.lambda[n] == nfact)) {
        throw error("decompose_thm22: symmetric characteristic polynomial is malformed");
    }

    CentralPoly p_times_i(ring, n);
    for (unsigned d = 0; d <= n; ++d) {
        p_times_i.set_coeff(d, scalar_matrix(ring, n, out.lambda[d]));
    }

    const CentralPoly res_c = prod_c - p_times_i;
    const CentralPoly res_d = prod_d - p_times_i;
    if (res_c.degree() > static_cast<int>(n) || res_d.degree() > static_cast<int>(n)) {
        throw error("decompose_thm22: residual degree exceeds n");
    }
    out.C.reserve(n + 1);
    out.D.reserve(n + 1);
    for (unsigned d = 0; d <= n; ++d) {
        out.C.push_back(res_c.coeff(d));
        out.D.push_back(res_d.coeff(d));
    }
    return out;
}

} // namespace symch
