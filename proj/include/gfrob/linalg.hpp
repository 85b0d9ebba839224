#pragma once

#include <cstddef>
#include <vector>

#include "gfrob/rational.hpp"

namespace gfrob {

// Dense matrix of exact rationals. Empty matrices (zero rows or columns) are
// allowed; by convention they have rank 0 and, when 0x0, determinant 1.
class RationalMatrix {
public:
    RationalMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const Rational& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    RationalMatrix transposed() const;

    bool operator==(const RationalMatrix& o) const = default;

private:
    size_t rows_, cols_;
    std::vector<Rational> a_;
};

// Exact rank over the rationals; an empty matrix has rank 0.
size_t rational_rank(const RationalMatrix& m);

// Basis of {x : m x = 0}; empty iff rank equals the column count.
std::vector<std::vector<Rational>> nullspace_basis(const RationalMatrix& m);

// Exact determinant; the 0x0 determinant is 1. Throws NotSquare.
Rational determinant(const RationalMatrix& m);

} // namespace gfrob
