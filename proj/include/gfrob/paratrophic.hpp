#pragma once

#include <utility>
#include <vector>

#include "gfrob/algebra.hpp"
#include "gfrob/linear_form.hpp"

namespace gfrob {

// The full symbolic sigma-paratrophic matrix P(sigma, alpha): rows and columns
// are the basis indices 0..m-1, variables are indexed by J_sigma, and entry
// (i, j) is the form sum_{l in J_sigma} c_{ijl} alpha_l. Entries vanish
// identically unless degree(i) degree(j) = sigma; when A_sigma = 0 the whole
// matrix is zero over an empty variable set.
struct ParatrophicMatrix {
    LinearFormMatrix matrix;
    GroupValue sigma;
    GroupModel group;
    std::vector<std::pair<GroupValue, std::vector<int>>> partition; // g -> J_g over the support, sorted by g
};

ParatrophicMatrix build_p(const GradedAlgebra& a, const GroupValue& sigma);

// Submatrix with rows J_{sigma g^-1} and columns J_g, possibly empty or
// non-square; extracted from a materialized P.
LinearFormMatrix block(const ParatrophicMatrix& p, const GroupValue& g);

// Same block built directly from the algebra, without materializing P.
LinearFormMatrix build_p_block(const GradedAlgebra& a, const GroupValue& sigma, const GroupValue& g);

// Arbitrary rows x cols block of P over the J_sigma variables; rows and cols
// are basis index sets.
LinearFormMatrix build_p_submatrix(const GradedAlgebra& a, const GroupValue& sigma, const std::vector<int>& rows,
                                   const std::vector<int>& cols);

// Scalar matrix C_g: rows indexed by J_{sigma g^-1} x J_sigma in
// lexicographic order with r outer, columns by J_g, entry ((r,l), j) = c_{rjl}.
// Full column rank for every g is the left sigma-faithfulness criterion.
struct CgMatrix {
    RationalMatrix matrix;
    std::vector<std::pair<int, int>> row_labels; // (r, l)
    std::vector<int> col_labels;                 // J_g
};

CgMatrix build_cg(const GradedAlgebra& a, const GroupValue& sigma, const GroupValue& g);

} // namespace gfrob
