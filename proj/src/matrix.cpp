#include "symch/matrix.hpp"
#include "symch/linsolve.hpp"

namespace symch {

// ----------------------------------------------------------------- XPoly

XPoly XPoly::constant(Element c) {
    XPoly p(c.ring());
    if (!c.is_zero()) p.coeffs_.push_back(std::move(c));
    return p;
}

XPoly XPoly::x(const RingDescriptor& ring) {
    XPoly p(ring);
    p.coeffs_.push_back(Element::zero(ring));
    p.coeffs_.push_back(Element::one(ring));
    return p;
}

XPoly make_xpoly(RingDescriptor ring, std::vector<Element> coeffs) {
    XPoly p(std::move(ring));
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

Element XPoly::coeff(size_t d) const {
    if (d < coeffs_.size()) return coeffs_[d];
    return Element::zero(ring_);
}

void XPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void XPoly::set_coeff(size_t d, Element c) {
    if (d >= coeffs_.size()) coeffs_.resize(d + 1, Element::zero(ring_));
    coeffs_[d] = std::move(c);
    trim();
}

XPoly XPoly::operator-() const {
    XPoly r(ring_);
    r.coeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) r.coeffs_.push_back(-c);
    return r;
}

XPoly operator+(const XPoly& a, const XPoly& b) {
    if (!(a.ring_ == b.ring_)) throw ring_mismatch("XPoly ring mismatch");
    XPoly r(a.ring_);
    const size_t len = std::max(a.coeffs_.size(), b.coeffs_.size());
    r.coeffs_.reserve(len);
    for (size_t d = 0; d < len; ++d) r.coeffs_.push_back(a.coeff(d) + b.coeff(d));
    r.trim();
    return r;
}

XPoly operator-(const XPoly& a, const XPoly& b) { return a + (-b); }

XPoly operator*(const XPoly& a, const XPoly& b) {
    if (!(a.ring_ == b.ring_)) throw ring_mismatch("XPoly ring mismatch");
    XPoly r(a.ring_);
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Element::zero(a.ring_));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    r.trim();
    return r;
}

Element XPoly::evaluate(const Rational& x0) const {
    Element acc = Element::zero(ring_);
    Rational p(1);
    for (const auto& c : coeffs_) {
        acc += Element::scalar(ring_, p) * c;
        p *= x0;
    }
    return acc;
}

std::string XPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t d = 0; d < coeffs_.size(); ++d) {
        if (coeffs_[d].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeffs_[d].str() << ")";
        if (d == 1) os << "*x";
        if (d > 1) os << "*x^" << d;
    }
    return os.str();
}

// ----------------------------------------------------------- CentralPoly

CentralPoly CentralPoly::from_constant(Matrix m) {
    CentralPoly p(m.ring(), m.n());
    if (!m.is_zero()) p.coeffs_.push_back(std::move(m));
    return p;
}

CentralPoly CentralPoly::from_poly_mat(const PolyMat& pm) {
    CentralPoly p(pm.ring(), pm.n());
    int deg = -1;
    for (unsigned i = 0; i < pm.n(); ++i) {
        for (unsigned j = 0; j < pm.n(); ++j) deg = std::max(deg, pm.at(i, j).degree());
    }
    for (int d = 0; d <= deg; ++d) {
        Matrix m(pm.ring(), pm.n());
        for (unsigned i = 0; i < pm.n(); ++i) {
            for (unsigned j = 0; j < pm.n(); ++j) m.at(i, j) = pm.at(i, j).coeff(static_cast<size_t>(d));
        }
        p.coeffs_.push_back(std::move(m));
    }
    p.trim();
    return p;
}

PolyMat CentralPoly::to_poly_mat() const {
    PolyMat pm(ring_, n_);
    for (unsigned i = 0; i < n_; ++i) {
        for (unsigned j = 0; j < n_; ++j) {
            std::vector<Element> cs;
            cs.reserve(coeffs_.size());
            for (const auto& m : coeffs_) cs.push_back(m.at(i, j));
            pm.at(i, j) = make_xpoly(ring_, std::move(cs));
        }
    }
    return pm;
}

Matrix CentralPoly::coeff(size_t d) const {
    if (d < coeffs_.size()) return coeffs_[d];
    return Matrix(ring_, n_);
}

void CentralPoly::set_coeff(size_t d, Matrix m) {
    if (!(m.ring() == ring_) || m.n() != n_) throw dimension_mismatch("CentralPoly coefficient mismatch");
    if (d >= coeffs_.size()) coeffs_.resize(d + 1, Matrix(ring_, n_));
    coeffs_[d] = std::move(m);
    trim();
}

void CentralPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void CentralPoly::check_compatible(const CentralPoly& b) const {
    if (!(ring_ == b.ring_)) throw ring_mismatch("CentralPoly ring mismatch");
    if (n_ != b.n_) throw dimension_mismatch("CentralPoly size mismatch");
}

CentralPoly CentralPoly::operator-() const {
    CentralPoly r(ring_, n_);
    for (const auto& m : coeffs_) r.coeffs_.push_back(-m);
    return r;
}

CentralPoly operator+(const CentralPoly& a, const CentralPoly& b) {
    a.check_compatible(b);
    CentralPoly r(a.ring_, a.n_);
    const size_t len = std::max(a.coeffs_.size(), b.coeffs_.size());
    for (size_t d = 0; d < len; ++d) r.coeffs_.push_back(a.coeff(d) + b.coeff(d));
    r.trim();
    return r;
}

CentralPoly operator-(const CentralPoly& a, const CentralPoly& b) { return a + (-b); }

CentralPoly operator*(const CentralPoly& a, const CentralPoly& b) {
    a.check_compatible(b);
    CentralPoly r(a.ring_, a.n_);
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Matrix(a.ring_, a.n_));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            r.coeffs_[i + j] = r.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
        }
    }
    r.trim();
    return r;
}

bool CentralPoly::operator==(const CentralPoly& b) const {
    return ring_ == b.ring_ && n_ == b.n_ && coeffs_ == b.coeffs_;
}

Matrix CentralPoly::evaluate(const Rational& x0) const {
    Matrix acc(ring_, n_);
    Rational p(1);
    for (const auto& m : coeffs_) {
        acc = acc + m.scale_left(Element::scalar(ring_, p));
        p *= x0;
    }
    return acc;
}

std::string CentralPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (size_t d = 0; d < coeffs_.size(); ++d) {
        if (coeffs_[d].is_zero()) continue;
        os << "x^" << d << " coefficient:\n" << coeffs_[d].str() << "\n";
    }
    return os.str();
}

// ------------------------------------------------------------- helpers

CentralPoly xI_minus(const Matrix& a) {
    CentralPoly p(a.ring(), a.n());
    p.set_coeff(1, Matrix::identity(a.ring(), a.n()));
    p.set_coeff(0, -a);
    return p;
}

Matrix scalar_matrix(const RingDescriptor& ring, unsigned n, const Element& c) {
    Matrix m(ring, n);
    for (unsigned i = 0; i < n; ++i) m.at(i, i) = c;
    return m;
}

Matrix embed_rational_matrix(const RingDescriptor& ring, const std::vector<std::vector<Rational>>& q) {
    const unsigned n = static_cast<unsigned>(q.size());
    Matrix m(ring, n);
    for (unsigned i = 0; i < n; ++i) {
        if (q[i].size() != n) throw dimension_mismatch("embed_rational_matrix: not square");
        for (unsigned j = 0; j < n; ++j) m.at(i, j) = Element::scalar(ring, q[i][j]);
    }
    return m;
}

Matrix central_inverse(const Matrix& g) {
    const unsigned n = g.n();
    std::vector<QVec> q(n, QVec(n, Rational(0)));
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
            const Element& e = g.at(i, j);
            if (!center_contains(e)) {
                throw conjugation_error("conjugator entry (" + std::to_string(i + 1) + "," +
                                        std::to_string(j + 1) + ") is not central");
            }
            if (!e.is_scalar()) {
                throw conjugation_error("conjugator inversion requires rational-scalar entries");
            }
            q[i][j] = e.scalar_value();
        }
    }
    auto inv = invert_matrix(q);
    if (!inv) throw conjugation_error("conjugator is singular");
    std::vector<std::vector<Rational>> rows(n);
    for (unsigned i = 0; i < n; ++i) rows[i] = (*inv)[i];
    return embed_rational_matrix(g.ring(), rows);
}

Matrix conjugate(const Matrix& a, const Matrix& g) {
    if (!(a.ring() == g.ring())) throw ring_mismatch("conjugate: ring mismatch");
    if (a.n() != g.n()) throw dimension_mismatch("conjugate: size mismatch");
    Matrix ginv = central_inverse(g);
    return g * a * ginv;
}

} // namespace symch
