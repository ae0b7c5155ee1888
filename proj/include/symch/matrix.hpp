// matrix.hpp -- square matrices over a coefficient ring and polynomials in
// one central indeterminate x, in both layouts used by the engine:
//
//   XPoly       polynomial in x with Element coefficients
//   Mat<T>      n x n matrix with entries Element or XPoly
//   CentralPoly polynomial in x with Matrix coefficients
//
// x commutes with everything by construction: coefficients are kept in
// sequences and never reordered past one another. No commutativity of the
// coefficient ring is assumed anywhere.
#pragma once

#include "symch/ring.hpp"

#include <sstream>
#include <vector>

namespace symch {

struct dimension_mismatch : error {
    using error::error;
};

struct conjugation_error : error {
    using error::error;
};

class XPoly {
public:
    explicit XPoly(RingDescriptor ring) : ring_(std::move(ring)) {}

    static XPoly zero(const RingDescriptor& ring) { return XPoly(ring); }
    static XPoly one(const RingDescriptor& ring) { return constant(Element::one(ring)); }
    static XPoly constant(Element c);
    static XPoly x(const RingDescriptor& ring);   // the indeterminate itself

    const RingDescriptor& ring() const { return ring_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Element coeff(size_t d) const;

    XPoly operator-() const;
    friend XPoly operator+(const XPoly& a, const XPoly& b);
    friend XPoly operator-(const XPoly& a, const XPoly& b);
    friend XPoly operator*(const XPoly& a, const XPoly& b);
    bool operator==(const XPoly& b) const = default;

    Element evaluate(const Rational& x0) const;
    std::string str() const;

private:
    RingDescriptor ring_;
    std::vector<Element> coeffs_;   // index d holds the coefficient of x^d; no trailing zeros

    void trim();
    void set_coeff(size_t d, Element c);
    friend class CentralPoly;
    friend XPoly make_xpoly(RingDescriptor ring, std::vector<Element> coeffs);
};

XPoly make_xpoly(RingDescriptor ring, std::vector<Element> coeffs);

template <class T>
class Mat {
public:
    Mat(RingDescriptor ring, unsigned n)
        : ring_(std::move(ring)), n_(n), e_(static_cast<size_t>(n) * n, T::zero(ring_)) {
        if (n == 0) throw dimension_mismatch("matrix size must be positive");
    }

    static Mat identity(const RingDescriptor& ring, unsigned n) {
        Mat m(ring, n);
        for (unsigned i = 0; i < n; ++i) m.at(i, i) = T::one(ring);
        return m;
    }

    const RingDescriptor& ring() const { return ring_; }
    unsigned n() const { return n_; }

    T& at(unsigned i, unsigned j) { return e_[static_cast<size_t>(i) * n_ + j]; }
    const T& at(unsigned i, unsigned j) const { return e_[static_cast<size_t>(i) * n_ + j]; }

    bool is_zero() const {
        for (const auto& x : e_) {
            if (!x.is_zero()) return false;
        }
        return true;
    }

    Mat operator-() const {
        Mat r(ring_, n_);
        for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = -e_[k];
        return r;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        a.check_compatible(b);
        Mat r(a.ring_, a.n_);
        for (size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] + b.e_[k];
        return r;
    }

    friend Mat operator-(const Mat& a, const Mat& b) { return a + (-b); }

    friend Mat operator*(const Mat& a, const Mat& b) {
        a.check_compatible(b);
        Mat r(a.ring_, a.n_);
        for (unsigned i = 0; i < a.n_; ++i) {
            for (unsigned j = 0; j < a.n_; ++j) {
                T acc = T::zero(a.ring_);
                for (unsigned k = 0; k < a.n_; ++k) acc = acc + a.at(i, k) * b.at(k, j);
                r.at(i, j) = acc;
            }
        }
        return r;
    }

    bool operator==(const Mat& b) const { return ring_ == b.ring_ && n_ == b.n_ && e_ == b.e_; }

    // c*A and A*c; the two differ over a noncommutative ring.
    Mat scale_left(const T& c) const {
        Mat r(ring_, n_);
        for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = c * e_[k];
        return r;
    }
    Mat scale_right(const T& c) const {
        Mat r(ring_, n_);
        for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * c;
        return r;
    }

    T trace() const {
        T acc = T::zero(ring_);
        for (unsigned i = 0; i < n_; ++i) acc = acc + at(i, i);
        return acc;
    }

    Mat power(unsigned k) const {
        Mat r = identity(ring_, n_);
        for (unsigned i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    std::string str() const {
        std::ostringstream os;
        for (unsigned i = 0; i < n_; ++i) {
            os << "[ ";
            for (unsigned j = 0; j < n_; ++j) {
                if (j) os << ", ";
                os << at(i, j).str();
            }
            os << " ]";
            if (i + 1 < n_) os << "\n";
        }
        return os.str();
    }

private:
    RingDescriptor ring_;
    unsigned n_;
    std::vector<T> e_;   // row-major

    void check_compatible(const Mat& b) const {
        if (!(ring_ == b.ring_)) throw ring_mismatch("matrix ring descriptor mismatch");
        if (n_ != b.n_) throw dimension_mismatch("matrix size mismatch");
    }
};

using Matrix = Mat<Element>;
using PolyMat = Mat<XPoly>;

// Polynomial in central x whose coefficients are matrices over R.
class CentralPoly {
public:
    CentralPoly(RingDescriptor ring, unsigned n) : ring_(std::move(ring)), n_(n) {}

    static CentralPoly from_constant(Matrix m);
    static CentralPoly from_poly_mat(const PolyMat& pm);

    const RingDescriptor& ring() const { return ring_; }
    unsigned n() const { return n_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Matrix coeff(size_t d) const;

    void set_coeff(size_t d, Matrix m);
    PolyMat to_poly_mat() const;

    CentralPoly operator-() const;
    friend CentralPoly operator+(const CentralPoly& a, const CentralPoly& b);
    friend CentralPoly operator-(const CentralPoly& a, const CentralPoly& b);
    friend CentralPoly operator*(const CentralPoly& a, const CentralPoly& b);
    bool operator==(const CentralPoly& b) const;

    Matrix evaluate(const Rational& x0) const;
    std::string str() const;

private:
    RingDescriptor ring_;
    unsigned n_;
    std::vector<Matrix> coeffs_;   // trailing zero matrices stripped

    void trim();
    void check_compatible(const CentralPoly& b) const;
};

// xI - A as a degree-1 CentralPoly.
CentralPoly xI_minus(const Matrix& a);

// c * I_n
Matrix scalar_matrix(const RingDescriptor& ring, unsigned n, const Element& c);

// Embeds a rational matrix entrywise into the given ring.
Matrix embed_rational_matrix(const RingDescriptor& ring, const std::vector<std::vector<Rational>>& q);

// Inverse of a matrix with central scalar entries, by exact elimination
// over the rationals. Throws conjugation_error when an entry is not
// central, not a rational scalar, or the matrix is singular.
Matrix central_inverse(const Matrix& g);

// G A G^{-1}
Matrix conjugate(const Matrix& a, const Matrix& g);

} // namespace symch
