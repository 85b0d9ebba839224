#include "gfrob/paratrophic.hpp"

#include <algorithm>

namespace gfrob {

namespace {

// Position of each member of J_sigma in the variable order.
std::vector<int> variable_positions(size_t dim, const std::vector<int>& j_sigma) {
    std::vector<int> pos(dim, -1);
    for (size_t k = 0; k < j_sigma.size(); ++k)
        pos[j_sigma[k]] = static_cast<int>(k);
    return pos;
}

LinearForm entry_form(const GradedAlgebra& a, const std::vector<int>& var_pos, int i, int j) {
    LinearForm f;
    auto it = a.constants().find({i, j});
    if (it == a.constants().end())
        return f;
    for (const auto& [l, value] : it->second) {
        const int pos = var_pos[l];
        if (pos >= 0)
            f.add(pos, value);
    }
    return f;
}

} // namespace

ParatrophicMatrix build_p(const GradedAlgebra& a, const GroupValue& sigma) {
    const int m = static_cast<int>(a.dim());
    const std::vector<int> j_sigma = a.component(sigma);
    const std::vector<int> var_pos = variable_positions(a.dim(), j_sigma);

    std::vector<int> all(m);
    for (int i = 0; i < m; ++i)
        all[i] = i;
    LinearFormMatrix matrix(all, all, j_sigma);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            matrix.set(i, j, entry_form(a, var_pos, i, j));

    ParatrophicMatrix p{std::move(matrix), sigma, a.group(), {}};
    for (const GroupValue& g : a.support())
        p.partition.emplace_back(g, a.component(g));
    return p;
}

LinearFormMatrix block(const ParatrophicMatrix& p, const GroupValue& g) {
    const GroupValue row_degree = p.group.compose(p.sigma, p.group.invert(g));
    auto find = [&](const GroupValue& d) -> std::vector<int> {
        for (const auto& [deg, indices] : p.partition)
            if (deg == d)
                return indices;
        return {};
    };
    const std::vector<int> rows = find(row_degree);
    const std::vector<int> cols = find(g);
    // Row/col labels of the full P are the basis indices themselves.
    std::vector<size_t> row_pos(rows.begin(), rows.end());
    std::vector<size_t> col_pos(cols.begin(), cols.end());
    return p.matrix.submatrix(row_pos, col_pos);
}

LinearFormMatrix build_p_submatrix(const GradedAlgebra& a, const GroupValue& sigma, const std::vector<int>& rows,
                                   const std::vector<int>& cols) {
    const std::vector<int> j_sigma = a.component(sigma);
    const std::vector<int> var_pos = variable_positions(a.dim(), j_sigma);
    LinearFormMatrix matrix(rows, cols, j_sigma);
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < cols.size(); ++c)
            matrix.set(r, c, entry_form(a, var_pos, rows[r], cols[c]));
    return matrix;
}

LinearFormMatrix build_p_block(const GradedAlgebra& a, const GroupValue& sigma, const GroupValue& g) {
    const GroupValue row_degree = a.group().compose(sigma, a.group().invert(g));
    return build_p_submatrix(a, sigma, a.component(row_degree), a.component(g));
}

CgMatrix build_cg(const GradedAlgebra& a, const GroupValue& sigma, const GroupValue& g) {
    const GroupValue row_degree = a.group().compose(sigma, a.group().invert(g));
    const std::vector<int> j_rows = a.component(row_degree);
    const std::vector<int> j_sigma = a.component(sigma);
    const std::vector<int> j_g = a.component(g);

    CgMatrix cg{RationalMatrix(j_rows.size() * j_sigma.size(), j_g.size()), {}, j_g};
    for (int r : j_rows)
        for (int l : j_sigma)
            cg.row_labels.emplace_back(r, l);
    for (size_t row = 0; row < cg.row_labels.size(); ++row) {
        const auto [r, l] = cg.row_labels[row];
        for (size_t col = 0; col < j_g.size(); ++col)
            cg.matrix.at(row, col) = a.c(r, j_g[col], l);
    }
    return cg;
}

} // namespace gfrob
