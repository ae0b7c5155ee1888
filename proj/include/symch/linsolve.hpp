// linsolve.hpp -- exact Gaussian elimination over the rationals: incremental
// row spans for membership tests and membership-with-certificate solving.
#pragma once

#include "symch/rational.hpp"

#include <optional>
#include <vector>

namespace symch {

using QVec = std::vector<Rational>;

// Row space in reduced echelon form, built incrementally.
class RowSpan {
public:
    explicit RowSpan(size_t dim) : dim_(dim) {}

    size_t dim() const { return dim_; }
    size_t rank() const { return rows_.size(); }

    // Returns true if v enlarged the span.
    bool add(QVec v);
    bool contains(QVec v) const;

private:
    size_t dim_;
    std::vector<QVec> rows_;      // echelon rows, unit pivots
    std::vector<size_t> pivots_;  // pivot column of each row

    void reduce(QVec& v) const;
};

// Solves sum_j x_j * cols[j] = target exactly. Returns the coefficient
// vector when the target lies in the column span, std::nullopt otherwise.
std::optional<QVec> solve_combination(const std::vector<QVec>& cols, const QVec& target);

// Inverts a square rational matrix (row-major). Returns std::nullopt when
// the matrix is singular.
std::optional<std::vector<QVec>> invert_matrix(const std::vector<QVec>& m);

} // namespace symch
