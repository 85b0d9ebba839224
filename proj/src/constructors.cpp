#include "gfrob/constructors.hpp"

#include <algorithm>

namespace gfrob {

QMatrix::QMatrix(int n, std::map<std::pair<int, int>, Rational> entries) : n_(n), entries_(std::move(entries)) {
    if (n_ < 2)
        throw Error("QMatrix needs n >= 2");
    for (int i = 1; i < n_; ++i) {
        for (int j = i + 1; j <= n_; ++j) {
            auto it = entries_.find({i, j});
            if (it == entries_.end())
                throw Error("missing q entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
            if (it->second == 0)
                throw Error("q entry (" + std::to_string(i) + "," + std::to_string(j) + ") is zero");
        }
    }
    if (entries_.size() != static_cast<size_t>(n_) * (n_ - 1) / 2)
        throw Error("q entries outside 1 <= i < j <= n");
}

const Rational& QMatrix::q(int i, int j) const {
    return entries_.at({i, j});
}

namespace {

std::string monomial_name(int mask, int n) {
    if (mask == 0)
        return "1";
    std::string s;
    for (int i = 0; i < n; ++i)
        if (mask & (1 << i))
            s += "x" + std::to_string(i + 1);
    return s;
}

} // namespace

GradedAlgebra make_aq(const QMatrix& q, AqGrading grading) {
    const int n = q.n();
    const int dim = 1 << n;

    GroupModel group = grading == AqGrading::BoolVec  ? GroupModel::bool_vec(n)
                       : grading == AqGrading::Integer ? GroupModel::integers()
                                                       : GroupModel::cyclic(1);
    std::vector<GroupValue> degrees;
    std::vector<std::string> names;
    for (int g = 0; g < dim; ++g) {
        GroupValue d;
        switch (grading) {
        case AqGrading::BoolVec:
            for (int i = 0; i < n; ++i)
                d.enc.push_back((g >> i) & 1);
            break;
        case AqGrading::Integer:
            d.enc.push_back(__builtin_popcount(static_cast<unsigned>(g)));
            break;
        case AqGrading::Trivial:
            d.enc.push_back(0);
            break;
        }
        degrees.push_back(std::move(d));
        names.push_back(monomial_name(g, n));
    }

    // e_g e_h = prod_{i<j} q_{ij}^{h_i g_j} e_{g|h} when the supports are
    // disjoint, 0 otherwise (left factor carries the epsilon exponents).
    StructureConstants constants;
    for (int g = 0; g < dim; ++g) {
        for (int h = 0; h < dim; ++h) {
            if (g & h)
                continue;
            Rational coeff = 1;
            for (int i = 1; i < n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    if ((h >> (i - 1)) & 1 && (g >> (j - 1)) & 1)
                        coeff *= q.q(i, j);
            constants[{g, h}] = {{g | h, coeff}};
        }
    }

    std::vector<Rational> unit(dim, Rational(0));
    unit[0] = 1;
    return GradedAlgebra::trusted(std::move(group), std::move(degrees), std::move(constants), std::move(unit),
                                  std::move(names));
}

QMatrix koszul_dual_q(const QMatrix& q) {
    std::map<std::pair<int, int>, Rational> entries;
    for (int i = 1; i < q.n(); ++i)
        for (int j = i + 1; j <= q.n(); ++j)
            entries[{i, j}] = Rational(-1) / q.q(i, j);
    return QMatrix(q.n(), std::move(entries));
}

GradedAlgebra make_exterior(int n, AqGrading grading) {
    std::map<std::pair<int, int>, Rational> entries;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
            entries[{i, j}] = -1;
    return make_aq(QMatrix(n, std::move(entries)), grading);
}

bool aq_symmetric_condition(const QMatrix& q) {
    const int n = q.n();
    for (int i = 1; i <= n - 1; ++i) {
        Rational rhs = 1;
        for (int p = 1; p < i; ++p)
            rhs *= q.q(p, i);
        for (int p = i + 1; p <= n - 1; ++p)
            rhs /= q.q(i, p);
        if (q.q(i, n) != rhs)
            return false;
    }
    return true;
}

GradedAlgebra make_good_matrix(const GoodGradingSpec& spec) {
    const int n = static_cast<int>(spec.tuple.size());
    if (n < 1)
        throw Error("good grading needs a nonempty tuple");
    for (const GroupValue& g : spec.tuple)
        if (!spec.group.contains(g))
            throw ElementOutOfModel("good grading tuple element outside the group model");

    auto index = [n](int i, int j) { return (i - 1) * n + (j - 1); }; // 1-based pair
    std::vector<GroupValue> degrees(static_cast<size_t>(n) * n);
    std::vector<std::string> names(static_cast<size_t>(n) * n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            degrees[index(i, j)] = spec.group.compose(spec.tuple[i - 1], spec.group.invert(spec.tuple[j - 1]));
            names[index(i, j)] = n <= 9 ? "e" + std::to_string(i) + std::to_string(j)
                                        : "e" + std::to_string(i) + "_" + std::to_string(j);
        }
    }

    // e_{ij} e_{pq} = delta_{jp} e_{iq}
    StructureConstants constants;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int p = 1; p <= n; ++p)
                constants[{index(i, j), index(j, p)}] = {{index(i, p), Rational(1)}};

    std::vector<Rational> unit(static_cast<size_t>(n) * n, Rational(0));
    for (int i = 1; i <= n; ++i)
        unit[index(i, i)] = 1;
    return GradedAlgebra::trusted(spec.group, std::move(degrees), std::move(constants), std::move(unit),
                                  std::move(names));
}

GradedAlgebra make_twisted_group_algebra(const GroupModel& model, const Cocycle& cocycle) {
    if (!model.finite())
        throw Error("twisted group algebras need a finite group");
    const std::vector<GroupValue> elements = model.elements();
    const GroupValue eps = model.identity();

    auto value = [&](const GroupValue& g, const GroupValue& h) -> const Rational& {
        auto it = cocycle.find({g, h});
        if (it == cocycle.end())
            throw CocycleViolation("cocycle undefined at (" + model.render_element(g) + "," +
                                   model.render_element(h) + ")");
        if (it->second == 0)
            throw CocycleViolation("cocycle vanishes at (" + model.render_element(g) + "," + model.render_element(h) +
                                   ")");
        return it->second;
    };
    for (const GroupValue& g : elements) {
        if (value(eps, g) != 1 || value(g, eps) != 1)
            throw CocycleViolation("cocycle is not normalized at " + model.render_element(g));
    }
    for (const GroupValue& g : elements)
        for (const GroupValue& h : elements)
            for (const GroupValue& k : elements) {
                const GroupValue gh = model.compose(g, h);
                const GroupValue hk = model.compose(h, k);
                if (value(g, h) * value(gh, k) != value(h, k) * value(g, hk))
                    throw CocycleViolation("cocycle identity fails at (" + model.render_element(g) + "," +
                                           model.render_element(h) + "," + model.render_element(k) + ")");
            }

    auto index_of = [&](const GroupValue& g) {
        return static_cast<int>(std::lower_bound(elements.begin(), elements.end(), g) - elements.begin());
    };
    StructureConstants constants;
    std::vector<GroupValue> degrees = elements;
    std::vector<std::string> names;
    std::vector<Rational> unit(elements.size(), Rational(0));
    for (size_t i = 0; i < elements.size(); ++i) {
        names.push_back("u" + model.render_element(elements[i]));
        for (size_t j = 0; j < elements.size(); ++j) {
            const GroupValue gh = model.compose(elements[i], elements[j]);
            constants[{static_cast<int>(i), static_cast<int>(j)}] = {{index_of(gh), value(elements[i], elements[j])}};
        }
    }
    unit[index_of(eps)] = 1;
    return GradedAlgebra::trusted(model, std::move(degrees), std::move(constants), std::move(unit), std::move(names));
}

GradedAlgebra make_group_algebra(const GroupModel& model) {
    Cocycle trivial;
    for (const GroupValue& g : model.elements())
        for (const GroupValue& h : model.elements())
            trivial[{g, h}] = 1;
    return make_twisted_group_algebra(model, trivial);
}

GradedAlgebra with_trivial_grading(const StructureConstants& constants, const std::vector<Rational>& unit,
                                   const std::vector<std::string>& basis_names) {
    GroupModel trivial = GroupModel::cyclic(1);
    std::vector<GroupValue> degrees(unit.size(), trivial.identity());
    return GradedAlgebra::checked(std::move(trivial), std::move(degrees), constants, unit, basis_names);
}

} // namespace gfrob
