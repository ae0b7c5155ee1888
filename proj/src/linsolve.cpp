#include "symch/linsolve.hpp"

#include <stdexcept>

namespace symch {

void RowSpan::reduce(QVec& v) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Rational& c = v[pivots_[i]];
        if (c.is_zero()) continue;
        Rational f = c;   // pivot entries are 1
        for (size_t j = 0; j < dim_; ++j) {
            if (!rows_[i][j].is_zero()) v[j] -= f * rows_[i][j];
        }
    }
}

bool RowSpan::add(QVec v) {
    if (v.size() != dim_) throw std::invalid_argument("RowSpan: dimension mismatch");
    reduce(v);
    size_t p = dim_;
    for (size_t j = 0; j < dim_; ++j) {
        if (!v[j].is_zero()) { p = j; break; }
    }
    if (p == dim_) return false;
    Rational inv = v[p].inverse();
    for (auto& c : v) c *= inv;
    // keep earlier rows reduced against the new pivot
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Rational& c = rows_[i][p];
        if (c.is_zero()) continue;
        Rational f = c;
        for (size_t j = 0; j < dim_; ++j) {
            if (!v[j].is_zero()) rows_[i][j] -= f * v[j];
        }
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

bool RowSpan::contains(QVec v) const {
    if (v.size() != dim_) throw std::invalid_argument("RowSpan: dimension mismatch");
    reduce(v);
    for (const auto& c : v) {
        if (!c.is_zero()) return false;
    }
    return true;
}

std::optional<QVec> solve_combination(const std::vector<QVec>& cols, const QVec& target) {
    const size_t dim = target.size();
    const size_t ncols = cols.size();
    // Rows are the spanning vectors; track each reduced row as a combination
    // of the original columns, then express the target against the pivots.
    struct Row {
        QVec v;
        QVec comb;   // length ncols
        size_t pivot;
    };
    std::vector<Row> rows;
    for (size_t c = 0; c < ncols; ++c) {
        if (cols[c].size() != dim) throw std::invalid_argument("solve_combination: dimension mismatch");
        QVec v = cols[c];
        QVec comb(ncols, Rational(0));
        comb[c] = Rational(1);
        for (const auto& row : rows) {
            const Rational f = v[row.pivot];
            if (f.is_zero()) continue;
            for (size_t j = 0; j < dim; ++j) {
                if (!row.v[j].is_zero()) v[j] -= f * row.v[j];
            }
            for (size_t j = 0; j < ncols; ++j) {
                if (!row.comb[j].is_zero()) comb[j] -= f * row.comb[j];
            }
        }
        size_t p = dim;
        for (size_t j = 0; j < dim; ++j) {
            if (!v[j].is_zero()) { p = j; break; }
        }
        if (p == dim) continue;   // dependent column
        Rational inv = v[p].inverse();
        for (auto& x : v) x *= inv;
        for (auto& x : comb) x *= inv;
        rows.push_back(Row{std::move(v), std::move(comb), p});
    }

    QVec residue = target;
    QVec coeffs(ncols, Rational(0));
    for (const auto& row : rows) {
        const Rational f = residue[row.pivot];
        if (f.is_zero()) continue;
        for (size_t j = 0; j < dim; ++j) {
            if (!row.v[j].is_zero()) residue[j] -= f * row.v[j];
        }
        for (size_t j = 0; j < ncols; ++j) {
            if (!row.comb[j].is_zero()) coeffs[j] += f * row.comb[j];
        }
    }
    for (const auto& c : residue) {
        if (!c.is_zero()) return std::nullopt;
    }
    return coeffs;
}

std::optional<std::vector<QVec>> invert_matrix(const std::vector<QVec>& m) {
    const size_t n = m.size();
    std::vector<QVec> a = m;
    std::vector<QVec> inv(n, QVec(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw std::invalid_argument("invert_matrix: not square");
        inv[i][i] = Rational(1);
    }
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rational f = a[col][col].inverse();
        for (size_t j = 0; j < n; ++j) {
            a[col][j] *= f;
            inv[col][j] *= f;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            Rational g = a[r][col];
            for (size_t j = 0; j < n; ++j) {
                a[r][j] -= g * a[col][j];
                inv[r][j] -= g * inv[col][j];
            }
        }
    }
    return inv;
}

} // namespace symch
