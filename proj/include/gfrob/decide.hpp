#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "gfrob/algebra.hpp"
#include "gfrob/linear_form.hpp"
#include "gfrob/paratrophic.hpp"

namespace gfrob {

// Per-block outcome recorded by the deciders; g labels the block with rows
// J_{sigma g^-1} and columns J_g.
enum class BlockStatus { Empty, Ok, SizeMismatch, ZeroDet, Unchecked };

struct BlockInfo {
    GroupValue g;
    size_t rows = 0, cols = 0;
    BlockStatus status = BlockStatus::Unchecked;
    std::optional<Rational> det; // at the certificate point, when status == Ok
};

// A verified Yes: one evaluation point alpha (indexed by basis positions in
// alpha_index) together with the exact nonzero determinant of every block at
// that point.
struct Certificate {
    std::vector<int> alpha_index;
    std::vector<Rational> alpha;
};

struct DimensionMismatchWitness {
    GroupValue g;
    size_t rows, cols; // |J_{sigma g^-1}| vs |J_g|
};
struct RankDeficiencyWitness {
    GroupValue g;
    size_t rank, needed; // rank C_g vs |J_g|
};
struct IdenticallyZeroDetWitness {
    GroupValue g;
};
struct ZeroSigmaComponentWitness {};
struct NoSymmetricSolutionWitness {};

using Witness = std::variant<DimensionMismatchWitness, RankDeficiencyWitness, IdenticallyZeroDetWitness,
                             ZeroSigmaComponentWitness, NoSymmetricSolutionWitness>;

struct Decision {
    bool yes = false;
    std::optional<Certificate> certificate; // set iff yes
    std::optional<Witness> witness;         // set iff !yes
    std::vector<BlockInfo> block_table;

    static Decision pass(Certificate cert, std::vector<BlockInfo> table);
    static Decision fail(Witness w, std::vector<BlockInfo> table = {});
};

struct FaithfulnessResult {
    bool faithful = true;
    GroupValue witness_g; // set iff !faithful
    size_t rank = 0, needed = 0;
};

// Left sigma-faithfulness: rank C_g = |J_g| for every g (checked over the
// finite quantification set). Deterministic.
FaithfulnessResult is_sigma_faithful(const GradedAlgebra& a, const GroupValue& sigma);

// sigma-graded Frobenius: some rational alpha makes P(sigma, alpha)
// invertible. Decided blockwise: J_sigma nonempty, |J_{sigma g^-1}| = |J_g|
// for all g, and every block generically invertible, with one joint alpha
// verified against every block.
Decision decide_sigma_frobenius(const GradedAlgebra& a, const GroupValue& sigma, const PitOptions& opt = {});

// Graded symmetric: some alpha over J_epsilon makes P(epsilon, alpha)
// symmetric and invertible. Solves the linear symmetry system first, then
// decides generic invertibility on the solution space.
Decision decide_graded_symmetric(const GradedAlgebra& a, const PitOptions& opt = {});

// Classical Frobenius test: the input constants with the trivial grading,
// decided at epsilon.
Decision decide_frobenius_ungraded(const StructureConstants& constants, const std::vector<Rational>& unit,
                                   const PitOptions& opt = {}, const std::vector<std::string>& basis_names = {});

// Right module U over the algebra R of a GradedAlgebra, with action
// constants u_i e_j = sum_l c_{ijl} u_l.
class RightModule {
public:
    // Validates the action axioms (u a) b = u (ab) and u 1 = u on all basis
    // pairs; throws Error with a witnessing triple.
    static RightModule checked(GradedAlgebra algebra, size_t u_dim, StructureConstants action);
    // U = R with the regular right action.
    static RightModule regular(const GradedAlgebra& algebra);

    const GradedAlgebra& algebra() const { return algebra_; }
    size_t dim() const { return dim_; }
    const StructureConstants& action() const { return action_; }
    Rational action_c(int i, int j, int l) const;

private:
    RightModule(GradedAlgebra algebra, size_t u_dim, StructureConstants action)
        : algebra_(std::move(algebra)), dim_(u_dim), action_(std::move(action)) {}

    GradedAlgebra algebra_;
    size_t dim_;
    StructureConstants action_;
};

// U* isomorphic to R as left R-modules: generic invertibility of the m x m
// matrix (sum_l alpha_l c_{ijl}). Throws DimensionMismatch if dim U != dim R.
Decision decide_dual_module_iso(const RightModule& u, const PitOptions& opt = {});

// (A_sigma)* isomorphic to A_epsilon as left A_epsilon-modules:
// |J_sigma| = |J_epsilon| plus generic invertibility of the block of P with
// rows J_sigma and columns J_epsilon.
Decision decide_dual_component_iso(const GradedAlgebra& a, const GroupValue& sigma, const PitOptions& opt = {});

// Independent evaluation of the three invertibility characterizations at a
// fixed alpha; they must agree for a correct implementation.
struct TheoremAReport {
    bool full_rank = false;       // P(sigma, alpha) invertible
    bool epsilon_route = false;   // |J_eps| = |J_sigma|, eps-block invertible, all C_g full rank
    bool blockwise = false;       // every (J_{sigma g^-1}, J_g) block square and invertible
    bool consistent() const { return full_rank == epsilon_route && epsilon_route == blockwise; }
};

TheoremAReport check_theorem_a(const GradedAlgebra& a, const GroupValue& sigma, const std::vector<Rational>& alpha);

// decide_sigma_frobenius over every sigma in the support, in canonical order.
// Degrees outside the support are all No (zero sigma-component) and are not
// listed.
std::vector<std::pair<GroupValue, Decision>> scan_sigma(const GradedAlgebra& a, const PitOptions& opt = {});

} // namespace gfrob
