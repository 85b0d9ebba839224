#pragma once

// Shared fixtures for the test suites: small classical algebras, random
// q-matrices, and table groups built from an independent source.

#include <array>
#include <random>
#include <vector>

#include "gfrob/constructors.hpp"
#include "gfrob/group.hpp"

namespace gfrob::testing {

// K[x]/(x^n) with basis 1, x, ..., x^{n-1}.
inline GradedAlgebra truncated_polynomial_algebra(int n) {
    StructureConstants c;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i + j < n)
                c[{i, j}] = {{i + j, Rational(1)}};
    std::vector<Rational> unit(n, Rational(0));
    unit[0] = 1;
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
        names.push_back(i == 0 ? "one" : "x" + std::to_string(i));
    return with_trivial_grading(c, unit, names);
}

// Upper-triangular 2x2 matrices, basis e11, e12, e22.
inline GradedAlgebra upper_triangular_2x2() {
    StructureConstants c;
    c[{0, 0}] = {{0, Rational(1)}}; // e11 e11 = e11
    c[{0, 1}] = {{1, Rational(1)}}; // e11 e12 = e12
    c[{1, 2}] = {{1, Rational(1)}}; // e12 e22 = e12
    c[{2, 2}] = {{2, Rational(1)}}; // e22 e22 = e22
    std::vector<Rational> unit{1, 0, 1};
    return with_trivial_grading(c, unit, {"e11", "e12", "e22"});
}

// Nonzero rational with small numerator and denominator.
inline Rational random_nonzero_rational(std::mt19937_64& rng) {
    int64_t num = 0;
    while (num == 0)
        num = static_cast<int64_t>(rng() % 21) - 10;
    const int64_t den = 1 + static_cast<int64_t>(rng() % 10);
    return Rational(num) / Rational(den);
}

inline QMatrix random_qmatrix(std::mt19937_64& rng, int n) {
    std::map<std::pair<int, int>, Rational> entries;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
            entries[{i, j}] = random_nonzero_rational(rng);
    return QMatrix(n, std::move(entries));
}

// q chosen to satisfy the closed-form symmetric-algebra condition: the
// entries q_{ij} with j < n are free, the last column is derived.
inline QMatrix random_symmetric_qmatrix(std::mt19937_64& rng, int n) {
    std::map<std::pair<int, int>, Rational> entries;
    for (int i = 1; i < n - 1; ++i)
        for (int j = i + 1; j <= n - 1; ++j)
            entries[{i, j}] = random_nonzero_rational(rng);
    for (int i = 1; i <= n - 1; ++i) {
        Rational value = 1;
        for (int p = 1; p < i; ++p)
            value *= entries.at({p, i});
        for (int p = i + 1; p <= n - 1; ++p)
            value /= entries.at({i, p});
        entries[{i, n}] = value;
    }
    return QMatrix(n, std::move(entries));
}

// S3 from brute-force permutation composition.
inline GroupModel s3_model() {
    std::vector<std::array<int, 3>> perms;
    std::vector<std::string> names;
    std::array<int, 3> p{0, 1, 2};
    do {
        perms.push_back(p);
        names.push_back("p" + std::to_string(p[0]) + std::to_string(p[1]) + std::to_string(p[2]));
    } while (std::next_permutation(p.begin(), p.end()));
    std::vector<std::vector<int>> cayley;
    for (const auto& a : perms) {
        std::vector<int> row;
        for (const auto& b : perms) {
            std::array<int, 3> ab{a[b[0]], a[b[1]], a[b[2]]};
            for (size_t i = 0; i < perms.size(); ++i)
                if (perms[i] == ab)
                    row.push_back(static_cast<int>(i));
        }
        cayley.push_back(std::move(row));
    }
    return GroupModel::table(std::move(names), std::move(cayley));
}

// A 2-cocycle on Z2 x Z2 that is not a coboundary: c((a,b),(c,d)) = (-1)^{bc}.
inline Cocycle nontrivial_z2z2_cocycle(const GroupModel& model) {
    Cocycle c;
    for (const GroupValue& g : model.elements())
        for (const GroupValue& h : model.elements())
            c[{g, h}] = (g.enc[1] * h.enc[0]) % 2 == 1 ? Rational(-1) : Rational(1);
    return c;
}

} // namespace gfrob::testing
