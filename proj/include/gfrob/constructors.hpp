#pragma once

#include <map>
#include <vector>

#include "gfrob/algebra.hpp"

namespace gfrob {

// Multiplication parameters q_{ij}, 1 <= i < j <= n, all nonzero.
class QMatrix {
public:
    QMatrix(int n, std::map<std::pair<int, int>, Rational> entries);

    int n() const { return n_; }
    const Rational& q(int i, int j) const; // 1 <= i < j <= n

    bool operator==(const QMatrix& o) const = default;

private:
    int n_;
    std::map<std::pair<int, int>, Rational> entries_;
};

enum class AqGrading { BoolVec, Integer, Trivial };

// The 2^n-dimensional quotient of the quantum polynomial algebra with
// parameters q by the squares of all generators. Basis elements are the
// square-free monomials, indexed by bit masks (bit i-1 set = x_i present).
// The grading is the exponent vector itself over Z2^n, the total degree over
// Z, or trivial.
GradedAlgebra make_aq(const QMatrix& q, AqGrading grading);

// Parameters of the Koszul dual: q'_{ij} = -q_{ij}^{-1}. An involution.
QMatrix koszul_dual_q(const QMatrix& q);

// make_aq with every q_{ij} = -1, i.e. the exterior algebra on n generators.
GradedAlgebra make_exterior(int n, AqGrading grading);

// Closed-form test for A(q) being a symmetric algebra:
// q_{in} = (prod_{p<i} q_{pi}) (prod_{i<p<=n-1} q_{ip}^{-1}) for all i < n.
bool aq_symmetric_condition(const QMatrix& q);

// A good grading of the full matrix algebra M_n: the matrix unit e_{ij} is
// homogeneous of degree g_i g_j^{-1}.
struct GoodGradingSpec {
    GroupModel group;
    std::vector<GroupValue> tuple; // g_1, ..., g_n
};

GradedAlgebra make_good_matrix(const GoodGradingSpec& spec);

// Twisted group algebra of a finite group: basis u_g, products
// u_g u_h = c(g,h) u_{gh}, graded by deg u_g = g. The cocycle must be total,
// nonzero, normalized (c(e,g) = c(g,e) = 1) and satisfy
// c(g,h) c(gh,k) = c(h,k) c(g,hk); violations throw CocycleViolation with a
// witnessing triple. Supplementary test family, not tied to one construction
// in the source material.
using Cocycle = std::map<std::pair<GroupValue, GroupValue>, Rational>;

GradedAlgebra make_twisted_group_algebra(const GroupModel& model, const Cocycle& cocycle);

// Group algebra = twisted group algebra with the trivial cocycle.
GradedAlgebra make_group_algebra(const GroupModel& model);

// Wraps plain associative unital structure constants as an algebra graded by
// the one-element group. Validates; findings propagate as ValidationError.
GradedAlgebra with_trivial_grading(const StructureConstants& constants, const std::vector<Rational>& unit,
                                   const std::vector<std::string>& basis_names = {});

} // namespace gfrob
