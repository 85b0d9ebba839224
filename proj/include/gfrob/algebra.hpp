#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gfrob/errors.hpp"
#include "gfrob/group.hpp"
#include "gfrob/rational.hpp"

namespace gfrob {

// Sparse structure constants: (i, j) -> sorted nonzero rows (l, c) of the
// product e_i e_j = sum_l c * e_l. Absent pairs are zero products.
using StructureConstants = std::map<std::pair<int, int>, std::vector<std::pair<int, Rational>>>;

enum class ViolationKind { GradingMismatch, AssociativityFailure, UnitFailure, UnitSupport };

struct Violation {
    ViolationKind kind;
    std::vector<int> indices; // witnessing basis indices: (i,j,l) or (i,j,p,r) or (j)
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool passed() const { return violations.empty(); }
};

struct ValidationError : Error {
    explicit ValidationError(ValidationReport r);
    ValidationReport report;
};

// Finite-dimensional group-graded unital algebra over the rationals, given by
// a homogeneous basis, its degree map, sparse structure constants and the
// coordinates of the unit. Immutable.
class GradedAlgebra {
public:
    // Validates grading compatibility, associativity on all basis triples and
    // the two-sided unit axiom; throws ValidationError on any finding.
    static GradedAlgebra checked(GroupModel group, std::vector<GroupValue> degrees, StructureConstants constants,
                                 std::vector<Rational> unit, std::vector<std::string> basis_names = {});
    // Skips validation; for constructors whose output is covered by tests.
    static GradedAlgebra trusted(GroupModel group, std::vector<GroupValue> degrees, StructureConstants constants,
                                 std::vector<Rational> unit, std::vector<std::string> basis_names = {});

    size_t dim() const { return degrees_.size(); }
    const GroupModel& group() const { return group_; }
    const GroupValue& degree(int i) const { return degrees_.at(i); }
    const std::vector<GroupValue>& degrees() const { return degrees_; }
    const StructureConstants& constants() const { return constants_; }
    const std::vector<Rational>& unit() const { return unit_; }
    const std::string& basis_name(int i) const { return names_.at(i); }
    const std::vector<std::string>& basis_names() const { return names_; }

    // A single structure constant c_{ijl}; zero when absent.
    Rational c(int i, int j, int l) const;

    ValidationReport validate() const;

    // Bilinear product of coordinate vectors. Throws DimensionMismatch.
    std::vector<Rational> multiply(const std::vector<Rational>& u, const std::vector<Rational>& v) const;

    // J_g: ascending basis indices of degree g. Throws ElementOutOfModel.
    std::vector<int> component(const GroupValue& g) const;

    // Sorted distinct degrees with a nonempty component.
    std::vector<GroupValue> support() const;

    // The finite set of g over which "for any g in G" conditions must be
    // checked for this sigma: outside support and its sigma-shift both J_g
    // and J_{sigma g^-1} are empty, so every condition holds vacuously.
    std::vector<GroupValue> quantification_set(const GroupValue& sigma) const;

private:
    GradedAlgebra(GroupModel group, std::vector<GroupValue> degrees, StructureConstants constants,
                  std::vector<Rational> unit, std::vector<std::string> names);

    GroupModel group_;
    std::vector<GroupValue> degrees_;
    StructureConstants constants_;
    std::vector<Rational> unit_;
    std::vector<std::string> names_;
};

} // namespace gfrob
