#include "gfrob/algebra.hpp"

#include <algorithm>
#include <set>

namespace gfrob {

namespace {

std::string describe_violation(const Violation& v) {
    switch (v.kind) {
    case ViolationKind::GradingMismatch:
        return "grading: " + v.detail;
    case ViolationKind::AssociativityFailure:
        return "associativity: " + v.detail;
    case ViolationKind::UnitFailure:
        return "unit: " + v.detail;
    case ViolationKind::UnitSupport:
        return "unit support: " + v.detail;
    }
    return v.detail;
}

std::string summarize(const ValidationReport& r) {
    std::string s = "algebra validation failed:";
    for (const Violation& v : r.violations) {
        s += "\n  " + describe_violation(v);
    }
    return s;
}

} // namespace

ValidationError::ValidationError(ValidationReport r) : Error(summarize(r)), report(std::move(r)) {}

GradedAlgebra::GradedAlgebra(GroupModel group, std::vector<GroupValue> degrees, StructureConstants constants,
                             std::vector<Rational> unit, std::vector<std::string> names)
    : group_(std::move(group)), degrees_(std::move(degrees)), constants_(std::move(constants)),
      unit_(std::move(unit)), names_(std::move(names)) {
    if (degrees_.empty())
        throw Error("the zero algebra is not admitted (dimension must be >= 1)");
    if (unit_.size() != degrees_.size())
        throw DimensionMismatch("unit vector has " + std::to_string(unit_.size()) + " coordinates, dimension is " +
                                std::to_string(degrees_.size()));
    if (names_.empty()) {
        names_.reserve(degrees_.size());
        for (size_t i = 0; i < degrees_.size(); ++i)
            names_.push_back("e" + std::to_string(i));
    }
    if (names_.size() != degrees_.size())
        throw DimensionMismatch("basis name list does not match the dimension");
    for (const GroupValue& d : degrees_)
        if (!group_.contains(d))
            throw ElementOutOfModel("basis degree outside the group model");
    // Normalize: drop stored zeros, keep rows sorted by l, check index ranges.
    const int m = static_cast<int>(degrees_.size());
    for (auto it = constants_.begin(); it != constants_.end();) {
        const auto [i, j] = it->first;
        if (i < 0 || i >= m || j < 0 || j >= m)
            throw Error("structure constant index (" + std::to_string(i) + "," + std::to_string(j) +
                        ") out of range");
        auto& row = it->second;
        for (const auto& [l, value] : row)
            if (l < 0 || l >= m)
                throw Error("structure constant target index " + std::to_string(l) + " out of range");
        row.erase(std::remove_if(row.begin(), row.end(), [](const auto& e) { return e.second == 0; }), row.end());
        std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        it = row.empty() ? constants_.erase(it) : std::next(it);
    }
}

GradedAlgebra GradedAlgebra::trusted(GroupModel group, std::vector<GroupValue> degrees, StructureConstants constants,
                                     std::vector<Rational> unit, std::vector<std::string> basis_names) {
    return GradedAlgebra(std::move(group), std::move(degrees), std::move(constants), std::move(unit),
                         std::move(basis_names));
}

GradedAlgebra GradedAlgebra::checked(GroupModel group, std::vector<GroupValue> degrees, StructureConstants constants,
                                     std::vector<Rational> unit, std::vector<std::string> basis_names) {
    GradedAlgebra a(std::move(group), std::move(degrees), std::move(constants), std::move(unit),
                    std::move(basis_names));
    ValidationReport report = a.validate();
    if (!report.passed())
        throw ValidationError(std::move(report));
    return a;
}

Rational GradedAlgebra::c(int i, int j, int l) const {
    auto it = constants_.find({i, j});
    if (it == constants_.end())
        return 0;
    for (const auto& [ll, value] : it->second)
        if (ll == l)
            return value;
    return 0;
}

ValidationReport GradedAlgebra::validate() const {
    ValidationReport report;
    const int m = static_cast<int>(dim());

    // c_{ijl} != 0 forces degree(l) = degree(i) degree(j).
    for (const auto& [ij, row] : constants_) {
        const auto [i, j] = ij;
        const GroupValue target = group_.compose(degrees_[i], degrees_[j]);
        for (const auto& [l, value] : row) {
            if (!(degrees_[l] == target)) {
                report.violations.push_back({ViolationKind::GradingMismatch,
                                             {i, j, l},
                                             "c(" + names_[i] + "," + names_[j] + "," + names_[l] +
                                                 ") lands outside the component of degree(i)*degree(j)"});
            }
        }
    }

    // Associativity (e_i e_j) e_p = e_i (e_j e_p), compared row by row.
    auto basis_vector = [&](int i) {
        std::vector<Rational> v(m, Rational(0));
        v[i] = 1;
        return v;
    };
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            const std::vector<Rational> ij_prod = multiply(basis_vector(i), basis_vector(j));
            for (int p = 0; p < m; ++p) {
                const std::vector<Rational> left = multiply(ij_prod, basis_vector(p));
                const std::vector<Rational> right = multiply(basis_vector(i), multiply(basis_vector(j), basis_vector(p)));
                for (int r = 0; r < m; ++r) {
                    if (left[r] != right[r]) {
                        report.violations.push_back({ViolationKind::AssociativityFailure,
                                                     {i, j, p, r},
                                                     "(" + names_[i] + " " + names_[j] + ") " + names_[p] + " != " +
                                                         names_[i] + " (" + names_[j] + " " + names_[p] +
                                                         ") at coordinate " + names_[r]});
                    }
                }
            }
        }
    }

    // Two-sided unit, supported on the identity component.
    const GroupValue eps = group_.identity();
    bool unit_nonzero = false;
    for (int i = 0; i < m; ++i) {
        if (unit_[i] != 0) {
            unit_nonzero = true;
            if (!(degrees_[i] == eps)) {
                report.violations.push_back(
                    {ViolationKind::UnitSupport, {i}, "unit has a coordinate on " + names_[i] + " outside degree epsilon"});
            }
        }
    }
    if (!unit_nonzero)
        report.violations.push_back({ViolationKind::UnitFailure, {}, "unit vector is zero"});
    for (int j = 0; j < m; ++j) {
        const std::vector<Rational> left = multiply(unit_, basis_vector(j));
        const std::vector<Rational> right = multiply(basis_vector(j), unit_);
        for (int r = 0; r < m; ++r) {
            const Rational expected = r == j ? Rational(1) : Rational(0);
            if (left[r] != expected || right[r] != expected) {
                report.violations.push_back(
                    {ViolationKind::UnitFailure, {j}, "unit axiom fails on basis element " + names_[j]});
                break;
            }
        }
    }
    return report;
}

std::vector<Rational> GradedAlgebra::multiply(const std::vector<Rational>& u, const std::vector<Rational>& v) const {
    const size_t m = dim();
    if (u.size() != m || v.size() != m)
        throw DimensionMismatch("vectors of length " + std::to_string(u.size()) + " and " + std::to_string(v.size()) +
                                " in an algebra of dimension " + std::to_string(m));
    std::vector<Rational> out(m, Rational(0));
    for (const auto& [ij, row] : constants_) {
        const auto [i, j] = ij;
        if (u[i] == 0 || v[j] == 0)
            continue;
        const Rational scale = u[i] * v[j];
        for (const auto& [l, value] : row)
            out[l] += scale * value;
    }
    return out;
}

std::vector<int> GradedAlgebra::component(const GroupValue& g) const {
    if (!group_.contains(g))
        throw ElementOutOfModel("component degree is not an element of " + group_.describe());
    std::vector<int> out;
    for (size_t i = 0; i < degrees_.size(); ++i)
        if (degrees_[i] == g)
            out.push_back(static_cast<int>(i));
    return out;
}

std::vector<GroupValue> GradedAlgebra::support() const {
    std::set<GroupValue> seen(degrees_.begin(), degrees_.end());
    return {seen.begin(), seen.end()};
}

std::vector<GroupValue> GradedAlgebra::quantification_set(const GroupValue& sigma) const {
    std::set<GroupValue> out;
    for (const GroupValue& s : support()) {
        out.insert(s);
        // J_{sigma g^-1} is nonempty exactly for g = s^-1 sigma with s in support.
        out.insert(group_.compose(group_.invert(s), sigma));
    }
    return {out.begin(), out.end()};
}

} // namespace gfrob
