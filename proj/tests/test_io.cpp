#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <json.hpp>

#include "gfrob/decide.hpp"
#include "gfrob/io.hpp"
#include "test_support.hpp"

using namespace gfrob;

namespace {

const char* kx2_file = R"(# K[x]/(x^2), trivially graded
group Z/1
basis one 0
basis x 0
unit 1 0
c 0 0 0 1
c 0 1 1 1
c 1 0 1 1
)";

std::vector<GradedAlgebra> family_corpus() {
    std::mt19937_64 rng(19);
    std::vector<GradedAlgebra> out;
    out.push_back(make_aq(testing::random_qmatrix(rng, 2), AqGrading::BoolVec));
    out.push_back(make_aq(testing::random_qmatrix(rng, 3), AqGrading::Integer));
    out.push_back(make_exterior(3, AqGrading::Trivial));
    out.push_back(make_good_matrix({GroupModel::cyclic(3), {GroupValue{{0}}, GroupValue{{1}}, GroupValue{{2}}}}));
    out.push_back(make_group_algebra(gfrob::testing::s3_model()));
    out.push_back(gfrob::testing::upper_triangular_2x2());
    return out;
}

} // namespace

TEST_CASE("parsing a hand-written file") {
    const GradedAlgebra a = parse_algebra_file(kx2_file);
    CHECK(a.dim() == 2);
    CHECK(a.basis_name(1) == "x");
    CHECK(a.group().order() == 1);
    CHECK(a.c(1, 0, 1) == 1);
    CHECK(a.c(1, 1, 0) == 0);
}

TEST_CASE("serialization round-trips every constructed family") {
    for (const GradedAlgebra& a : family_corpus()) {
        const std::string text = serialize_algebra(a);
        const GradedAlgebra b = parse_algebra_file(text);
        CHECK(b.constants() == a.constants());
        CHECK(b.degrees() == a.degrees());
        CHECK(b.unit() == a.unit());
        CHECK(b.basis_names() == a.basis_names());
        CHECK(serialize_algebra(b) == text);
        CHECK(algebra_hash(b) == algebra_hash(a));
    }
}

TEST_CASE("parse errors carry locations") {
    CHECK_THROWS_WITH_AS(parse_algebra_file("group Z/1\nbasis a 0\nunit 1\nc 0 0 9 1\n"),
                         doctest::Contains("out of range"), ParseError);
    CHECK_THROWS_WITH_AS(parse_algebra_file("group Z/1\nbasis a 0\nunit 1\nc 0 0 0 1\nc 0 0 0 2\n"),
                         doctest::Contains("duplicate"), ParseError);
    CHECK_THROWS_AS(parse_algebra_file("basis a 0\nunit 1\n"), ParseError);       // no group
    CHECK_THROWS_AS(parse_algebra_file("group Z/1\nunit 1\n"), ParseError);       // no basis
    CHECK_THROWS_AS(parse_algebra_file("group Z/1\nbasis a 0\n"), ParseError);    // no unit
    CHECK_THROWS_AS(parse_algebra_file("group Z/1\nbasis a 0\nunit 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_algebra_file("group Z/1\nbasis a 0\nbasis a 0\nunit 1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_algebra_file("group Z/1\nbasis a 0\nunit 1\nwhat 1\n"), ParseError);
    CHECK_THROWS_AS(parse_algebra_file("group Z/9000000000000000000\n"), ParseError);
}

TEST_CASE("invalid algebras are rejected with their validation report") {
    // tampered A(q) at n = 3: associativity violation with a witness triple
    std::mt19937_64 rng(23);
    const GradedAlgebra good = make_aq(testing::random_qmatrix(rng, 3), AqGrading::BoolVec);
    StructureConstants constants = good.constants();
    constants[{2, 1}][0].second += 1;
    const GradedAlgebra bad = GradedAlgebra::trusted(good.group(), good.degrees(), constants, good.unit());
    try {
        parse_algebra_file(serialize_algebra(bad));
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        REQUIRE_FALSE(e.report.passed());
        CHECK(e.report.violations[0].kind == ViolationKind::AssociativityFailure);
        CHECK(e.report.violations[0].indices.size() == 4);
    }
}

TEST_CASE("hashes separate different algebras") {
    const auto corpus = family_corpus();
    for (size_t i = 0; i < corpus.size(); ++i)
        for (size_t j = i + 1; j < corpus.size(); ++j)
            CHECK(algebra_hash(corpus[i]) != algebra_hash(corpus[j]));
}

TEST_CASE("a machine Yes report re-verifies independently") {
    std::mt19937_64 rng(29);
    const GradedAlgebra a = make_aq(testing::random_qmatrix(rng, 2), AqGrading::BoolVec);
    const GroupValue tau{{1, 1}};
    PitOptions opt;
    const Decision d = decide_sigma_frobenius(a, tau, opt);
    ReportContext ctx{"check-frobenius", a.group().render_element(tau), opt};
    const std::string machine = decision_report(a, ctx, d, ReportFormat::Machine);

    const auto j = nlohmann::json::parse(machine);
    REQUIRE(j["verdict"] == "yes");
    // reconstruct alpha from the report alone and re-verify every block by
    // exact evaluation
    std::vector<Rational> alpha;
    std::vector<int> indices;
    for (const auto& entry : j["certificate"]["alpha"]) {
        indices.push_back(entry["index"].get<int>());
        alpha.push_back(parse_rational(entry["value"].get<std::string>()));
    }
    CHECK(indices == a.component(tau));
    for (const auto& row : j["blocks"]) {
        const GroupValue g = a.group().parse_element(row["g"].get<std::string>());
        const LinearFormMatrix blk = build_p_block(a, tau, g);
        REQUIRE(row["rows"].get<size_t>() == blk.rows());
        if (row["status"] == "ok") {
            const Rational det = determinant(eval_at(blk, alpha));
            CHECK(det != 0);
            CHECK(rational_to_string(det) == row["det"].get<std::string>());
        }
    }
}

TEST_CASE("text and machine renderings carry the same data") {
    const GradedAlgebra a = gfrob::testing::upper_triangular_2x2();
    PitOptions opt;
    const Decision d = decide_sigma_frobenius(a, a.group().identity(), opt);
    ReportContext ctx{"check-frobenius", a.group().render_element(a.group().identity()), opt};
    const std::string text = decision_report(a, ctx, d, ReportFormat::Text);
    const std::string machine = decision_report(a, ctx, d, ReportFormat::Machine);

    const auto j = nlohmann::json::parse(machine);
    CHECK(j["verdict"] == "no");
    CHECK(j["witness"]["kind"] == "identically-zero-det");
    // every scalar leaf of the machine document appears in the text rendering
    CHECK(text.find("identically-zero-det") != std::string::npos);
    CHECK(text.find("verdict: no") != std::string::npos);
    CHECK(text.find(algebra_hash(a)) != std::string::npos);
    CHECK(text.find("zero-det") != std::string::npos);
}

TEST_CASE("reports are deterministic") {
    std::mt19937_64 rng(31);
    const GradedAlgebra a = make_aq(testing::random_qmatrix(rng, 3), AqGrading::Integer);
    PitOptions opt;
    opt.seed = 99;
    ReportContext ctx{"scan-sigma", std::nullopt, opt};
    const std::string first = scan_report(a, ctx, scan_sigma(a, opt), ReportFormat::Machine);
    const std::string second = scan_report(a, ctx, scan_sigma(a, opt), ReportFormat::Machine);
    CHECK(first == second);
}

TEST_CASE("validation and faithfulness reports") {
    const GradedAlgebra a = gfrob::testing::upper_triangular_2x2();
    ReportContext vctx{"validate", std::nullopt, std::nullopt};
    CHECK(validation_report(vctx, a.validate(), ReportFormat::Text).find("verdict: valid") != std::string::npos);

    std::mt19937_64 rng(37);
    const GradedAlgebra aq = make_aq(testing::random_qmatrix(rng, 2), AqGrading::Integer);
    const FaithfulnessResult r = is_sigma_faithful(aq, GroupValue{{0}});
    ReportContext fctx{"check-faithful", "0", std::nullopt};
    const std::string report = faithful_report(aq, fctx, r, ReportFormat::Machine);
    const auto j = nlohmann::json::parse(report);
    CHECK(j["verdict"] == "no");
    CHECK(j["witness"]["kind"] == "rank-deficiency");
}
