#include "gfrob/linear_form.hpp"

#include <algorithm>
#include <limits>

#include "gfrob/errors.hpp"

namespace gfrob {

void LinearForm::add(int var, const Rational& c) {
    if (c == 0)
        return;
    auto it = coeffs_.find(var);
    if (it == coeffs_.end()) {
        coeffs_.emplace(var, c);
        return;
    }
    it->second += c;
    if (it->second == 0)
        coeffs_.erase(it);
}

Rational LinearForm::eval(const std::vector<Rational>& point) const {
    Rational total = 0;
    for (const auto& [v, c] : coeffs_)
        total += c * point.at(v);
    return total;
}

MultiPoly LinearForm::to_poly(int num_vars) const {
    MultiPoly p(num_vars);
    MultiPoly::Exponents e(num_vars, 0);
    for (const auto& [v, c] : coeffs_) {
        e[v] = 1;
        p.add_term(e, c);
        e[v] = 0;
    }
    return p;
}

void LinearFormMatrix::set(size_t r, size_t c, LinearForm f) {
    if (f.is_zero())
        entries_.erase({r, c});
    else
        entries_[{r, c}] = std::move(f);
}

const LinearForm& LinearFormMatrix::at(size_t r, size_t c) const {
    static const LinearForm zero;
    auto it = entries_.find({r, c});
    return it == entries_.end() ? zero : it->second;
}

LinearFormMatrix LinearFormMatrix::submatrix(const std::vector<size_t>& row_pos,
                                             const std::vector<size_t>& col_pos) const {
    std::vector<int> rl, cl;
    rl.reserve(row_pos.size());
    cl.reserve(col_pos.size());
    for (size_t r : row_pos)
        rl.push_back(row_labels_.at(r));
    for (size_t c : col_pos)
        cl.push_back(col_labels_.at(c));
    LinearFormMatrix sub(std::move(rl), std::move(cl), var_labels_);
    for (size_t i = 0; i < row_pos.size(); ++i)
        for (size_t j = 0; j < col_pos.size(); ++j)
            sub.set(i, j, at(row_pos[i], col_pos[j]));
    return sub;
}

namespace {

// Minor expansion; rows/cols are the positions still alive. Expands along the
// row with the fewest nonzero entries, so a zero row short-circuits to 0.
MultiPoly det_minor_expansion(const LinearFormMatrix& m, std::vector<size_t> rows, std::vector<size_t> cols) {
    const int nv = m.num_vars();
    if (rows.empty())
        return MultiPoly::constant(nv, 1);
    size_t best = 0, best_count = std::numeric_limits<size_t>::max();
    for (size_t i = 0; i < rows.size(); ++i) {
        size_t count = 0;
        for (size_t c : cols)
            if (!m.at(rows[i], c).is_zero())
                ++count;
        if (count < best_count) {
            best_count = count;
            best = i;
        }
    }
    if (best_count == 0)
        return MultiPoly(nv);
    const size_t row = rows[best];
    std::vector<size_t> sub_rows = rows;
    sub_rows.erase(sub_rows.begin() + static_cast<ptrdiff_t>(best));
    MultiPoly det(nv);
    int sign = (best % 2 == 0) ? 1 : -1;
    for (size_t j = 0; j < cols.size(); ++j) {
        const LinearForm& entry = m.at(row, cols[j]);
        if (!entry.is_zero()) {
            std::vector<size_t> sub_cols = cols;
            sub_cols.erase(sub_cols.begin() + static_cast<ptrdiff_t>(j));
            MultiPoly cofactor = det_minor_expansion(m, sub_rows, sub_cols);
            MultiPoly term = entry.to_poly(nv) * cofactor;
            det += sign > 0 ? term : -term;
        }
        sign = -sign;
    }
    return det;
}

// Fraction-free elimination over the polynomial ring; every division is exact.
MultiPoly det_bareiss(const LinearFormMatrix& m) {
    const size_t n = m.rows();
    const int nv = m.num_vars();
    std::vector<std::vector<MultiPoly>> a(n, std::vector<MultiPoly>(n, MultiPoly(nv)));
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c)
            a[r][c] = m.at(r, c).to_poly(nv);
    int sign = 1;
    MultiPoly prev = MultiPoly::constant(nv, 1);
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t p = k;
        while (p < n && a[p][k].is_zero())
            ++p;
        if (p == n)
            return MultiPoly(nv);
        if (p != k) {
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).divide_exact(prev);
            a[i][k] = MultiPoly(nv);
        }
        prev = a[k][k];
    }
    MultiPoly det = a[n - 1][n - 1];
    return sign > 0 ? det : -det;
}

} // namespace

MultiPoly symbolic_det(const LinearFormMatrix& m) {
    if (!m.is_square())
        throw NotSquare("symbolic determinant of a " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                        " matrix");
    const size_t n = m.rows();
    if (n == 0)
        return MultiPoly::constant(m.num_vars(), 1);
    if (4 * m.nonzero_count() <= n * n) {
        std::vector<size_t> idx(n);
        for (size_t i = 0; i < n; ++i)
            idx[i] = i;
        return det_minor_expansion(m, idx, idx);
    }
    return det_bareiss(m);
}

RationalMatrix eval_at(const LinearFormMatrix& m, const std::vector<Rational>& alpha) {
    if (alpha.size() != static_cast<size_t>(m.num_vars()))
        throw VariableMismatch("evaluation point has " + std::to_string(alpha.size()) + " coordinates, matrix has " +
                               std::to_string(m.num_vars()) + " variables");
    RationalMatrix out(m.rows(), m.cols());
    for (const auto& [pos, form] : m.entries())
        out.at(pos.first, pos.second) = form.eval(alpha);
    return out;
}

std::vector<Rational> sample_point(std::mt19937_64& rng, size_t k, int64_t bound) {
    std::vector<Rational> point;
    point.reserve(k);
    for (size_t i = 0; i < k; ++i)
        point.emplace_back(1 + static_cast<int64_t>(rng() % static_cast<uint64_t>(bound)));
    return point;
}

std::vector<Rational> nonvanishing_point(const MultiPoly& p) {
    if (p.is_zero())
        throw Error("nonvanishing_point of the zero polynomial");
    const int k = p.num_vars();
    std::vector<Rational> point(k, Rational(0));
    MultiPoly current = p;
    for (int v = 0; v < k; ++v) {
        const int deg = current.degree_in(v);
        for (int64_t value = 1; value <= deg + 1; ++value) {
            MultiPoly next = current.eval_partial(v, Rational(value));
            if (!next.is_zero()) {
                point[v] = value;
                current = std::move(next);
                break;
            }
        }
        // Some value in 1..deg+1 always works: deg+1 common roots in one
        // variable would force every coefficient polynomial to vanish.
    }
    return point;
}

InvertibilityResult is_generically_invertible(const LinearFormMatrix& m, const PitOptions& opt) {
    if (!m.is_square())
        throw NotSquare("generic invertibility of a " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                        " matrix");
    InvertibilityResult result;
    if (m.rows() == 0) {
        result.invertible = true;
        result.det_value = 1;
        return result;
    }
    const size_t k = static_cast<size_t>(m.num_vars());
    if (opt.strategy != Strategy::Symbolic) {
        std::mt19937_64 rng(opt.seed);
        for (int t = 0; t < opt.trials; ++t) {
            std::vector<Rational> alpha = sample_point(rng, k, opt.sample_bound);
            Rational d = determinant(eval_at(m, alpha));
            if (d != 0) {
                result.invertible = true;
                result.witness = std::move(alpha);
                result.det_value = std::move(d);
                return result;
            }
        }
    }
    MultiPoly det = symbolic_det(m);
    if (det.is_zero())
        return result;
    result.invertible = true;
    result.witness = nonvanishing_point(det);
    result.det_value = determinant(eval_at(m, result.witness));
    return result;
}

} // namespace gfrob
