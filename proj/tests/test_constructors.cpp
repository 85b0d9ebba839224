#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gfrob/constructors.hpp"
#include "gfrob/decide.hpp"
#include "test_support.hpp"

using namespace gfrob;

namespace {

// Independent oracle for the A(q) structure constants: normal-form rewriting
// of words in the generators, using X_j X_i -> q_ij X_i X_j for i < j and
// X_i X_i -> 0, until the word is strictly increasing.
struct NormalForm {
    Rational coeff;     // 0 when the word dies
    std::vector<int> word; // strictly increasing generator indices, 1-based
};

NormalForm rewrite(const QMatrix& q, std::vector<int> word) {
    Rational coeff = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t k = 0; k + 1 < word.size(); ++k) {
            if (word[k] == word[k + 1])
                return {0, {}};
            if (word[k] > word[k + 1]) {
                coeff *= q.q(word[k + 1], word[k]);
                std::swap(word[k], word[k + 1]);
                changed = true;
            }
        }
    }
    return {coeff, std::move(word)};
}

std::vector<int> mask_to_word(int mask, int n) {
    std::vector<int> word;
    for (int i = 1; i <= n; ++i)
        if (mask & (1 << (i - 1)))
            word.push_back(i);
    return word;
}

GroupValue z(int64_t k) {
    return GroupValue{{k}};
}

} // namespace

TEST_CASE("A(q) structure constants match the rewriting oracle") {
    std::mt19937_64 rng(100);
    for (int n = 2; n <= 4; ++n) {
        const QMatrix q = testing::random_qmatrix(rng, n);
        const GradedAlgebra a = make_aq(q, AqGrading::BoolVec);
        const int dim = 1 << n;
        for (int g = 0; g < dim; ++g) {
            for (int h = 0; h < dim; ++h) {
                std::vector<int> word = mask_to_word(g, n);
                const std::vector<int> right = mask_to_word(h, n);
                word.insert(word.end(), right.begin(), right.end());
                const NormalForm nf = rewrite(q, std::move(word));
                auto it = a.constants().find({g, h});
                if (nf.coeff == 0) {
                    CHECK(it == a.constants().end());
                } else {
                    REQUIRE(it != a.constants().end());
                    REQUIRE(it->second.size() == 1);
                    CHECK(it->second[0].first == (g | h));
                    CHECK(it->second[0].second == nf.coeff);
                    CHECK(mask_to_word(g | h, n) == nf.word);
                }
            }
        }
    }
}

TEST_CASE("A(q) basics") {
    QMatrix q(2, {{{1, 2}, Rational(3)}});
    const GradedAlgebra a = make_aq(q, AqGrading::Integer);
    CHECK(a.dim() == 4);
    CHECK(a.component(z(0)).size() == 1);
    CHECK(a.component(z(1)).size() == 2);
    CHECK(a.component(z(2)).size() == 1);

    // e_g e_g = 0 for g != 0
    std::mt19937_64 rng(3);
    for (int n = 2; n <= 4; ++n) {
        const GradedAlgebra b = make_aq(testing::random_qmatrix(rng, n), AqGrading::BoolVec);
        for (size_t g = 1; g < b.dim(); ++g)
            CHECK(b.constants().find({static_cast<int>(g), static_cast<int>(g)}) == b.constants().end());
    }

    CHECK_THROWS_AS(QMatrix(2, {}), Error);
    CHECK_THROWS_AS(QMatrix(2, {{{1, 2}, Rational(0)}}), Error);
    CHECK_THROWS_AS(QMatrix(2, {{{1, 2}, Rational(1)}, {{2, 1}, Rational(1)}}), Error);
    CHECK_THROWS_AS(QMatrix(1, {}), Error);
}

TEST_CASE("every constructed algebra validates") {
    std::mt19937_64 rng(14);
    for (int n = 2; n <= 4; ++n)
        for (AqGrading grading : {AqGrading::BoolVec, AqGrading::Integer, AqGrading::Trivial})
            CHECK(make_aq(testing::random_qmatrix(rng, n), grading).validate().passed());

    for (int n = 1; n <= 3; ++n) {
        std::vector<GroupValue> tuple;
        for (int i = 0; i < n; ++i)
            tuple.push_back(z(rng() % 4));
        CHECK(make_good_matrix({GroupModel::cyclic(4), tuple}).validate().passed());
    }

    CHECK(make_group_algebra(GroupModel::cyclic(8)).validate().passed());
    CHECK(make_group_algebra(GroupModel::bool_vec(3)).validate().passed());
    CHECK(make_group_algebra(gfrob::testing::s3_model()).validate().passed());
    GroupModel z2z2 = GroupModel::bool_vec(2);
    CHECK(make_twisted_group_algebra(z2z2, gfrob::testing::nontrivial_z2z2_cocycle(z2z2)).validate().passed());
}

TEST_CASE("koszul_dual_q") {
    QMatrix q(2, {{{1, 2}, Rational(2)}});
    CHECK(koszul_dual_q(q).q(1, 2) == Rational(-1, 2));

    // all-ones (commutative polynomials) dualize to all-minus-ones (exterior)
    std::map<std::pair<int, int>, Rational> ones;
    for (int i = 1; i < 3; ++i)
        for (int j = i + 1; j <= 3; ++j)
            ones[{i, j}] = 1;
    const QMatrix dual = koszul_dual_q(QMatrix(3, ones));
    for (int i = 1; i < 3; ++i)
        for (int j = i + 1; j <= 3; ++j)
            CHECK(dual.q(i, j) == -1);

    // involution on random instances
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const QMatrix random = testing::random_qmatrix(rng, n);
        CHECK(koszul_dual_q(koszul_dual_q(random)) == random);
    }
}

TEST_CASE("exterior algebra") {
    const GradedAlgebra e2 = make_exterior(2, AqGrading::Trivial);
    // x2 x1 = -x1 x2
    REQUIRE(e2.constants().count({2, 1}) == 1);
    CHECK(e2.constants().at({2, 1})[0] == std::pair<int, Rational>{3, Rational(-1)});

    CHECK(decide_graded_symmetric(make_exterior(3, AqGrading::Trivial)).yes);
    CHECK_FALSE(decide_graded_symmetric(make_exterior(4, AqGrading::Trivial)).yes);
}

TEST_CASE("the closed-form symmetric condition") {
    // n = 2: both products are empty, so the condition reads q12 = 1
    CHECK(aq_symmetric_condition(QMatrix(2, {{{1, 2}, Rational(1)}})));
    CHECK_FALSE(aq_symmetric_condition(QMatrix(2, {{{1, 2}, Rational(3)}})));

    // all q = -1: holds iff n is odd
    auto all_minus_one = [](int n) {
        std::map<std::pair<int, int>, Rational> entries;
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j)
                entries[{i, j}] = -1;
        return QMatrix(n, entries);
    };
    CHECK(aq_symmetric_condition(all_minus_one(3)));
    CHECK_FALSE(aq_symmetric_condition(all_minus_one(4)));
    CHECK(aq_symmetric_condition(all_minus_one(5)));

    // worked instance: q12 = 2, q13 = 1/2, q23 = 2
    QMatrix worked(3, {{{1, 2}, Rational(2)}, {{1, 3}, Rational(1, 2)}, {{2, 3}, Rational(2)}});
    CHECK(aq_symmetric_condition(worked));

    // generated instances satisfy it by construction
    std::mt19937_64 rng(9);
    for (int n = 2; n <= 4; ++n)
        for (int trial = 0; trial < 5; ++trial)
            CHECK(aq_symmetric_condition(testing::random_symmetric_qmatrix(rng, n)));
}

TEST_CASE("the closed-form condition matches the symmetric decision") {
    std::mt19937_64 rng(10);
    for (int n = 2; n <= 4; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            const QMatrix q = testing::random_qmatrix(rng, n);
            const GradedAlgebra a = make_aq(q, AqGrading::Trivial);
            CHECK(aq_symmetric_condition(q) == decide_graded_symmetric(a).yes);
        }
    }
}

TEST_CASE("good gradings of matrix algebras") {
    const GradedAlgebra m2 = make_good_matrix({GroupModel::cyclic(2), {z(0), z(1)}});
    CHECK(m2.dim() == 4);
    // tuple (0,1): e11, e22 in degree 0; e12, e21 in degree 1
    CHECK(m2.degree(0) == z(0)); // e11
    CHECK(m2.degree(1) == z(1)); // e12
    CHECK(m2.degree(2) == z(1)); // e21
    CHECK(m2.degree(3) == z(0)); // e22
    CHECK(m2.component(z(0)) == std::vector<int>{0, 3});

    // e12 e21 = e11, e12 e12 = 0
    CHECK(m2.constants().at({1, 2})[0] == std::pair<int, Rational>{0, Rational(1)});
    CHECK(m2.constants().count({1, 1}) == 0);

    // a constant tuple gives the trivial grading
    const GradedAlgebra m3 = make_good_matrix({GroupModel::cyclic(3), {z(2), z(2), z(2)}});
    CHECK(m3.support() == std::vector<GroupValue>{m3.group().identity()});

    CHECK_THROWS_AS(make_good_matrix({GroupModel::cyclic(2), {}}), Error);
    CHECK_THROWS_AS(make_good_matrix({GroupModel::cyclic(2), {z(3)}}), ElementOutOfModel);
}

TEST_CASE("twisted group algebras") {
    // trivial cocycle on Z2: the group algebra, epsilon-graded Frobenius and
    // graded symmetric
    const GradedAlgebra kz2 = make_group_algebra(GroupModel::cyclic(2));
    CHECK(kz2.dim() == 2);
    CHECK(decide_sigma_frobenius(kz2, kz2.group().identity()).yes);
    CHECK(decide_graded_symmetric(kz2).yes);

    // every group algebra over a small group is graded symmetric
    for (const GroupModel& model : {GroupModel::cyclic(5), GroupModel::bool_vec(2), gfrob::testing::s3_model()})
        CHECK(decide_graded_symmetric(make_group_algebra(model)).yes);

    // cocycle violations carry a witness
    GroupModel z2 = GroupModel::cyclic(2);
    Cocycle bad;
    for (const GroupValue& g : z2.elements())
        for (const GroupValue& h : z2.elements())
            bad[{g, h}] = 1;
    bad[{z(1), z(1)}] = 0;
    CHECK_THROWS_AS(make_twisted_group_algebra(z2, bad), CocycleViolation);

    bad[{z(1), z(1)}] = 1;
    bad[{z(0), z(1)}] = 2; // not normalized
    CHECK_THROWS_WITH_AS(make_twisted_group_algebra(z2, bad), doctest::Contains("normalized"), CocycleViolation);

    Cocycle partial;
    CHECK_THROWS_WITH_AS(make_twisted_group_algebra(z2, partial), doctest::Contains("undefined"), CocycleViolation);

    // the identity itself: scale c(1,1) on Z/3 inconsistently
    GroupModel z3 = GroupModel::cyclic(3);
    Cocycle inconsistent;
    for (const GroupValue& g : z3.elements())
        for (const GroupValue& h : z3.elements())
            inconsistent[{g, h}] = 1;
    inconsistent[{z(1), z(1)}] = 5;
    CHECK_THROWS_WITH_AS(make_twisted_group_algebra(z3, inconsistent), doctest::Contains("identity fails"),
                         CocycleViolation);

    CHECK_THROWS_AS(make_twisted_group_algebra(GroupModel::integers(), {}), Error);
}

TEST_CASE("with_trivial_grading") {
    const GradedAlgebra kx = gfrob::testing::truncated_polynomial_algebra(2);
    CHECK(kx.dim() == 2);
    CHECK(kx.support().size() == 1);

    const GradedAlgebra ut = gfrob::testing::upper_triangular_2x2();
    CHECK(ut.dim() == 3);
    CHECK(ut.validate().passed());

    // forgetting the degrees keeps the products
    std::mt19937_64 rng(12);
    const GradedAlgebra graded = make_aq(testing::random_qmatrix(rng, 2), AqGrading::BoolVec);
    const GradedAlgebra forgotten = with_trivial_grading(graded.constants(), graded.unit());
    std::vector<Rational> u{1, 2, 3, 4}, v{-1, 0, 5, Rational(1, 2)};
    CHECK(graded.multiply(u, v) == forgotten.multiply(u, v));

    // non-associative constants are rejected: x^2 = y, x y = 1 but y x = 0,
    // so (x x) x = 1 while x (x x) = 0
    StructureConstants assoc_fail;
    assoc_fail[{0, 0}] = {{0, Rational(1)}};
    assoc_fail[{0, 1}] = {{1, Rational(1)}};
    assoc_fail[{0, 2}] = {{2, Rational(1)}};
    assoc_fail[{1, 0}] = {{1, Rational(1)}};
    assoc_fail[{2, 0}] = {{2, Rational(1)}};
    assoc_fail[{1, 1}] = {{2, Rational(1)}};
    assoc_fail[{1, 2}] = {{0, Rational(1)}};
    CHECK_THROWS_AS(with_trivial_grading(assoc_fail, {1, 0, 0}), ValidationError);
}
