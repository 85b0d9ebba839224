#include "gfrob/linalg.hpp"

#include <utility>

#include "gfrob/errors.hpp"

namespace gfrob {

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c)
            t.at(c, r) = at(r, c);
    return t;
}

namespace {

// Reduces m to row echelon form in place; returns the pivot columns.
std::vector<size_t> echelonize(RationalMatrix& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t p = row;
        while (p < m.rows() && m.at(p, col) == 0)
            ++p;
        if (p == m.rows())
            continue;
        if (p != row)
            for (size_t c = 0; c < m.cols(); ++c)
                std::swap(m.at(p, c), m.at(row, c));
        const Rational inv_pivot = 1 / m.at(row, col);
        for (size_t c = col; c < m.cols(); ++c)
            m.at(row, c) *= inv_pivot;
        for (size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col) == 0)
                continue;
            const Rational f = m.at(r, col);
            for (size_t c = col; c < m.cols(); ++c)
                m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

size_t rational_rank(const RationalMatrix& m) {
    if (m.empty())
        return 0;
    RationalMatrix work = m;
    return echelonize(work).size();
}

std::vector<std::vector<Rational>> nullspace_basis(const RationalMatrix& m) {
    if (m.cols() == 0)
        return {};
    if (m.rows() == 0) {
        std::vector<std::vector<Rational>> basis;
        for (size_t c = 0; c < m.cols(); ++c) {
            std::vector<Rational> v(m.cols(), Rational(0));
            v[c] = 1;
            basis.push_back(std::move(v));
        }
        return basis;
    }
    RationalMatrix work = m;
    const std::vector<size_t> pivots = echelonize(work);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : pivots)
        is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col])
            continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[free_col] = 1;
        for (size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -work.at(i, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational determinant(const RationalMatrix& m) {
    if (m.rows() != m.cols())
        throw NotSquare("determinant of a " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
    const size_t n = m.rows();
    if (n == 0)
        return 1;

    // Clear denominators rowwise, then run fraction-free Bareiss over the
    // integers: intermediate entries are minors, so every division is exact
    // and no per-operation gcd normalization happens.
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    BigInt denom = 1;
    for (size_t r = 0; r < n; ++r) {
        BigInt f = 1;
        for (size_t c = 0; c < n; ++c)
            f = lcm(f, denominator(m.at(r, c)));
        for (size_t c = 0; c < n; ++c)
            a[r][c] = numerator(m.at(r, c)) * (f / denominator(m.at(r, c)));
        denom *= f;
    }

    int sign = 1;
    BigInt prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t p = k;
        while (p < n && a[p][k] == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != k) {
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    BigInt det = a[n - 1][n - 1];
    if (sign < 0)
        det = -det;
    return Rational(det, denom);
}

} // namespace gfrob
