#include "gfrob/decide.hpp"

#include <algorithm>
#include <cassert>

#include "gfrob/constructors.hpp"

namespace gfrob {

Decision Decision::pass(Certificate cert, std::vector<BlockInfo> table) {
    Decision d;
    d.yes = true;
    d.certificate = std::move(cert);
    d.block_table = std::move(table);
    return d;
}

Decision Decision::fail(Witness w, std::vector<BlockInfo> table) {
    Decision d;
    d.yes = false;
    d.witness = std::move(w);
    d.block_table = std::move(table);
    return d;
}

namespace {

struct LabeledBlock {
    GroupValue g;
    size_t table_row; // into the caller's block table
    LinearFormMatrix matrix;
};

struct JointOutcome {
    bool ok = false;
    std::vector<Rational> point;           // set iff ok; over the shared variable set
    std::optional<GroupValue> zero_det_g;  // set iff !ok
    size_t failed_table_row = 0;
};

// One alpha that inverts every square block, or the first block whose
// determinant vanishes identically. Sampling happens jointly so the Yes
// certificate is a single point; the symbolic fallback runs per block and a
// common point is then read off the product of the block determinants.
JointOutcome decide_blocks_jointly(const std::vector<LabeledBlock>& blocks, size_t num_vars, const PitOptions& opt) {
    JointOutcome out;
    if (opt.strategy != Strategy::Symbolic) {
        std::mt19937_64 rng(opt.seed);
        for (int t = 0; t < opt.trials; ++t) {
            std::vector<Rational> alpha = sample_point(rng, num_vars, opt.sample_bound);
            bool all_ok = true;
            for (const LabeledBlock& b : blocks) {
                if (determinant(eval_at(b.matrix, alpha)) == 0) {
                    all_ok = false;
                    break;
                }
            }
            if (all_ok) {
                out.ok = true;
                out.point = std::move(alpha);
                return out;
            }
        }
    }
    MultiPoly product = MultiPoly::constant(static_cast<int>(num_vars), 1);
    for (const LabeledBlock& b : blocks) {
        MultiPoly det = symbolic_det(b.matrix);
        if (det.is_zero()) {
            out.zero_det_g = b.g;
            out.failed_table_row = b.table_row;
            return out;
        }
        product = product * det;
    }
    out.ok = true;
    out.point = nonvanishing_point(product);
    return out;
}

} // namespace

FaithfulnessResult is_sigma_faithful(const GradedAlgebra& a, const GroupValue& sigma) {
    for (const GroupValue& g : a.quantification_set(sigma)) {
        const CgMatrix cg = build_cg(a, sigma, g);
        const size_t rank = rational_rank(cg.matrix);
        if (rank != cg.matrix.cols())
            return {false, g, rank, cg.matrix.cols()};
    }
    return {};
}

Decision decide_sigma_frobenius(const GradedAlgebra& a, const GroupValue& sigma, const PitOptions& opt) {
    const std::vector<int> j_sigma = a.component(sigma);
    if (j_sigma.empty())
        return Decision::fail(ZeroSigmaComponentWitness{});

    const GroupModel& model = a.group();
    std::vector<BlockInfo> table;
    std::vector<std::pair<GroupValue, std::pair<std::vector<int>, std::vector<int>>>> index_sets;
    for (const GroupValue& g : a.quantification_set(sigma)) {
        const GroupValue row_degree = model.compose(sigma, model.invert(g));
        std::vector<int> rows = a.component(row_degree);
        std::vector<int> cols = a.component(g);
        BlockInfo info{g, rows.size(), cols.size(), BlockStatus::Unchecked, std::nullopt};
        if (rows.empty() && cols.empty())
            info.status = BlockStatus::Empty;
        table.push_back(info);
        index_sets.emplace_back(g, std::make_pair(std::move(rows), std::move(cols)));
    }
    for (size_t k = 0; k < index_sets.size(); ++k) {
        const auto& [g, rc] = index_sets[k];
        if (rc.first.size() != rc.second.size()) {
            table[k].status = BlockStatus::SizeMismatch;
            return Decision::fail(DimensionMismatchWitness{g, rc.first.size(), rc.second.size()}, std::move(table));
        }
    }

    std::vector<LabeledBlock> blocks;
    for (size_t k = 0; k < index_sets.size(); ++k) {
        const auto& [g, rc] = index_sets[k];
        if (!rc.second.empty())
            blocks.push_back({g, k, build_p_submatrix(a, sigma, rc.first, rc.second)});
    }

    JointOutcome joint = decide_blocks_jointly(blocks, j_sigma.size(), opt);
    if (!joint.ok) {
        table[joint.failed_table_row].status = BlockStatus::ZeroDet;
        return Decision::fail(IdenticallyZeroDetWitness{*joint.zero_det_g}, std::move(table));
    }
    for (const LabeledBlock& b : blocks) {
        Rational det = determinant(eval_at(b.matrix, joint.point));
        assert(det != 0);
        table[b.table_row].status = BlockStatus::Ok;
        table[b.table_row].det = std::move(det);
    }
    return Decision::pass(Certificate{j_sigma, std::move(joint.point)}, std::move(table));
}

namespace {

// P(epsilon, alpha) with alpha restricted to the span of the symmetry
// solutions: a matrix of linear forms in the coordinates t_k of that span.
LinearFormMatrix substituted_block(const GradedAlgebra& a, const std::vector<int>& j_eps,
                                   const std::vector<std::vector<Rational>>& basis, const std::vector<int>& rows,
                                   const std::vector<int>& cols) {
    std::vector<int> t_labels(basis.size());
    for (size_t k = 0; k < basis.size(); ++k)
        t_labels[k] = static_cast<int>(k);
    LinearFormMatrix out(rows, cols, t_labels);
    for (size_t r = 0; r < rows.size(); ++r) {
        for (size_t c = 0; c < cols.size(); ++c) {
            auto it = a.constants().find({rows[r], cols[c]});
            if (it == a.constants().end())
                continue;
            LinearForm f;
            for (size_t k = 0; k < basis.size(); ++k) {
                Rational coeff = 0;
                for (const auto& [l, value] : it->second) {
                    for (size_t pos = 0; pos < j_eps.size(); ++pos)
                        if (j_eps[pos] == l)
                            coeff += value * basis[k][pos];
                }
                f.add(static_cast<int>(k), coeff);
            }
            out.set(r, c, std::move(f));
        }
    }
    return out;
}

} // namespace

Decision decide_graded_symmetric(const GradedAlgebra& a, const PitOptions& opt) {
    const GroupModel& model = a.group();
    const GroupValue eps = model.identity();
    const std::vector<int> j_eps = a.component(eps);
    if (j_eps.empty())
        return Decision::fail(ZeroSigmaComponentWitness{});

    // Linear symmetry constraints sum_l (c_{ijl} - c_{jil}) alpha_l = 0, one
    // row per unordered pair with degree(i) degree(j) = epsilon.
    const int m = static_cast<int>(a.dim());
    std::vector<std::vector<Rational>> rows;
    for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) {
            if (!(model.compose(a.degree(i), a.degree(j)) == eps))
                continue;
            std::vector<Rational> row(j_eps.size(), Rational(0));
            bool nonzero = false;
            for (size_t pos = 0; pos < j_eps.size(); ++pos) {
                row[pos] = a.c(i, j, j_eps[pos]) - a.c(j, i, j_eps[pos]);
                nonzero = nonzero || row[pos] != 0;
            }
            if (nonzero)
                rows.push_back(std::move(row));
        }
    }
    RationalMatrix system(rows.size(), j_eps.size());
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < j_eps.size(); ++c)
            system.at(r, c) = rows[r][c];
    const std::vector<std::vector<Rational>> basis = nullspace_basis(system);
    if (basis.empty())
        return Decision::fail(NoSymmetricSolutionWitness{});

    std::vector<BlockInfo> table;
    std::vector<std::pair<GroupValue, std::pair<std::vector<int>, std::vector<int>>>> index_sets;
    for (const GroupValue& g : a.quantification_set(eps)) {
        std::vector<int> block_rows = a.component(model.invert(g));
        std::vector<int> block_cols = a.component(g);
        BlockInfo info{g, block_rows.size(), block_cols.size(), BlockStatus::Unchecked, std::nullopt};
        if (block_rows.empty() && block_cols.empty())
            info.status = BlockStatus::Empty;
        table.push_back(info);
        index_sets.emplace_back(g, std::make_pair(std::move(block_rows), std::move(block_cols)));
    }
    for (size_t k = 0; k < index_sets.size(); ++k) {
        const auto& [g, rc] = index_sets[k];
        if (rc.first.size() != rc.second.size()) {
            table[k].status = BlockStatus::SizeMismatch;
            return Decision::fail(DimensionMismatchWitness{g, rc.first.size(), rc.second.size()}, std::move(table));
        }
    }
    std::vector<LabeledBlock> blocks;
    for (size_t k = 0; k < index_sets.size(); ++k) {
        const auto& [g, rc] = index_sets[k];
        if (!rc.second.empty())
            blocks.push_back({g, k, substituted_block(a, j_eps, basis, rc.first, rc.second)});
    }
    JointOutcome joint = decide_blocks_jointly(blocks, basis.size(), opt);
    if (!joint.ok) {
        table[joint.failed_table_row].status = BlockStatus::ZeroDet;
        return Decision::fail(IdenticallyZeroDetWitness{*joint.zero_det_g}, std::move(table));
    }

    // Map the span coordinates back to alpha over J_epsilon and re-verify
    // every block of the actual paratrophic matrix at that alpha.
    std::vector<Rational> alpha(j_eps.size(), Rational(0));
    for (size_t k = 0; k < basis.size(); ++k)
        for (size_t pos = 0; pos < j_eps.size(); ++pos)
            alpha[pos] += joint.point[k] * basis[k][pos];
    for (const LabeledBlock& b : blocks) {
        const auto& rc = index_sets[b.table_row].second;
        LinearFormMatrix real_block = build_p_submatrix(a, eps, rc.first, rc.second);
        Rational det = determinant(eval_at(real_block, alpha));
        assert(det != 0);
        table[b.table_row].status = BlockStatus::Ok;
        table[b.table_row].det = std::move(det);
    }
    return Decision::pass(Certificate{j_eps, std::move(alpha)}, std::move(table));
}

Decision decide_frobenius_ungraded(const StructureConstants& constants, const std::vector<Rational>& unit,
                                   const PitOptions& opt, const std::vector<std::string>& basis_names) {
    const GradedAlgebra a = with_trivial_grading(constants, unit, basis_names);
    return decide_sigma_frobenius(a, a.group().identity(), opt);
}

RightModule RightModule::checked(GradedAlgebra algebra, size_t u_dim, StructureConstants action) {
    RightModule u(std::move(algebra), u_dim, std::move(action));
    const GradedAlgebra& r = u.algebra_;
    const int m = static_cast<int>(r.dim());
    const int n = static_cast<int>(u_dim);
    for (const auto& [ij, row] : u.action_) {
        const auto [i, j] = ij;
        if (i < 0 || i >= n || j < 0 || j >= m)
            throw Error("action constant index out of range");
        for (const auto& [l, value] : row)
            if (l < 0 || l >= n)
                throw Error("action constant target index out of range");
    }
    // u_i 1 = u_i
    for (int i = 0; i < n; ++i) {
        for (int s = 0; s < n; ++s) {
            Rational total = 0;
            for (int j = 0; j < m; ++j)
                if (r.unit()[j] != 0)
                    total += r.unit()[j] * u.action_c(i, j, s);
            if (total != (s == i ? Rational(1) : Rational(0)))
                throw Error("module axiom u*1 = u fails at basis element " + std::to_string(i));
        }
    }
    // (u_i e_j) e_k = u_i (e_j e_k)
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) {
            for (int k = 0; k < m; ++k) {
                for (int s = 0; s < n; ++s) {
                    Rational left = 0, right = 0;
                    for (int l = 0; l < n; ++l)
                        left += u.action_c(i, j, l) * u.action_c(l, k, s);
                    for (int p = 0; p < m; ++p)
                        right += r.c(j, k, p) * u.action_c(i, p, s);
                    if (left != right)
                        throw Error("module associativity fails at (u" + std::to_string(i) + ", e" +
                                    std::to_string(j) + ", e" + std::to_string(k) + ")");
                }
            }
        }
    }
    return u;
}

RightModule RightModule::regular(const GradedAlgebra& algebra) {
    return RightModule(algebra, algebra.dim(), algebra.constants());
}

Rational RightModule::action_c(int i, int j, int l) const {
    auto it = action_.find({i, j});
    if (it == action_.end())
        return 0;
    for (const auto& [ll, value] : it->second)
        if (ll == l)
            return value;
    return 0;
}

Decision decide_dual_module_iso(const RightModule& u, const PitOptions& opt) {
    if (u.dim() != u.algebra().dim())
        throw DimensionMismatch("dim U = " + std::to_string(u.dim()) + " but dim R = " +
                                std::to_string(u.algebra().dim()));
    const int m = static_cast<int>(u.dim());
    std::vector<int> labels(m);
    for (int i = 0; i < m; ++i)
        labels[i] = i;
    LinearFormMatrix matrix(labels, labels, labels);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            auto it = u.action().find({i, j});
            if (it == u.action().end())
                continue;
            LinearForm f;
            for (const auto& [l, value] : it->second)
                f.add(l, value);
            matrix.set(i, j, std::move(f));
        }
    }
    const GroupValue eps = u.algebra().group().identity();
    std::vector<BlockInfo> table{{eps, static_cast<size_t>(m), static_cast<size_t>(m), BlockStatus::Unchecked, {}}};
    InvertibilityResult inv = is_generically_invertible(matrix, opt);
    if (!inv.invertible) {
        table[0].status = BlockStatus::ZeroDet;
        return Decision::fail(IdenticallyZeroDetWitness{eps}, std::move(table));
    }
    table[0].status = BlockStatus::Ok;
    table[0].det = inv.det_value;
    return Decision::pass(Certificate{labels, std::move(inv.witness)}, std::move(table));
}

Decision decide_dual_component_iso(const GradedAlgebra& a, const GroupValue& sigma, const PitOptions& opt) {
    const GroupValue eps = a.group().identity();
    const std::vector<int> j_sigma = a.component(sigma);
    const std::vector<int> j_eps = a.component(eps);
    if (j_sigma.empty())
        return Decision::fail(ZeroSigmaComponentWitness{});
    // In Theorem A terms this is the g = epsilon block: rows J_sigma,
    // columns J_epsilon.
    std::vector<BlockInfo> table{{eps, j_sigma.size(), j_eps.size(), BlockStatus::Unchecked, {}}};
    if (j_sigma.size() != j_eps.size()) {
        table[0].status = BlockStatus::SizeMismatch;
        return Decision::fail(DimensionMismatchWitness{eps, j_sigma.size(), j_eps.size()}, std::move(table));
    }
    const LinearFormMatrix matrix = build_p_submatrix(a, sigma, j_sigma, j_eps);
    InvertibilityResult inv = is_generically_invertible(matrix, opt);
    if (!inv.invertible) {
        table[0].status = BlockStatus::ZeroDet;
        return Decision::fail(IdenticallyZeroDetWitness{eps}, std::move(table));
    }
    table[0].status = BlockStatus::Ok;
    table[0].det = inv.det_value;
    return Decision::pass(Certificate{j_sigma, std::move(inv.witness)}, std::move(table));
}

TheoremAReport check_theorem_a(const GradedAlgebra& a, const GroupValue& sigma, const std::vector<Rational>& alpha) {
    const std::vector<int> j_sigma = a.component(sigma);
    if (alpha.size() != j_sigma.size())
        throw VariableMismatch("alpha has " + std::to_string(alpha.size()) + " entries, |J_sigma| = " +
                               std::to_string(j_sigma.size()));
    const GroupModel& model = a.group();
    const GroupValue eps = model.identity();
    TheoremAReport report;

    // (1) the full matrix is invertible
    const ParatrophicMatrix p = build_p(a, sigma);
    report.full_rank = rational_rank(eval_at(p.matrix, alpha)) == a.dim();

    // (2) |J_eps| = |J_sigma|, the (J_eps, J_sigma) corner is invertible, and
    // every C_g has full column rank
    const std::vector<int> j_eps = a.component(eps);
    report.epsilon_route = j_eps.size() == j_sigma.size();
    if (report.epsilon_route) {
        const LinearFormMatrix corner = build_p_submatrix(a, sigma, j_eps, j_sigma);
        report.epsilon_route = determinant(eval_at(corner, alpha)) != 0;
    }
    if (report.epsilon_route) {
        for (const GroupValue& g : a.quantification_set(sigma)) {
            const CgMatrix cg = build_cg(a, sigma, g);
            if (rational_rank(cg.matrix) != cg.matrix.cols()) {
                report.epsilon_route = false;
                break;
            }
        }
    }

    // (3) every block (J_{sigma g^-1}, J_g) is square and invertible
    report.blockwise = true;
    for (const GroupValue& g : a.quantification_set(sigma)) {
        const LinearFormMatrix blk = build_p_block(a, sigma, g);
        if (blk.rows() != blk.cols()) {
            report.blockwise = false;
            break;
        }
        if (blk.rows() > 0 && determinant(eval_at(blk, alpha)) == 0) {
            report.blockwise = false;
            break;
        }
    }
    return report;
}

std::vector<std::pair<GroupValue, Decision>> scan_sigma(const GradedAlgebra& a, const PitOptions& opt) {
    std::vector<std::pair<GroupValue, Decision>> out;
    for (const GroupValue& sigma : a.support())
        out.emplace_back(sigma, decide_sigma_frobenius(a, sigma, opt));
    return out;
}

} // namespace gfrob
