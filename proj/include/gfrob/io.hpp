#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "gfrob/algebra.hpp"
#include "gfrob/decide.hpp"

namespace gfrob {

// Algebra file format: '#' starts a comment, then
//   group <group description>
//   basis <name> <degree>          (one line per basis element, in order)
//   unit <m rationals>
//   c <i> <j> <l> <rational>       (0-based indices, omitted entries are 0)
// Parses, range-checks (ParseError) and validates (ValidationError).
GradedAlgebra parse_algebra_file(std::string_view text);

// Canonical serialization; parse(serialize(a)) reproduces a exactly.
std::string serialize_algebra(const GradedAlgebra& a);

// 16 hex digits, FNV-1a over the canonical serialization.
std::string algebra_hash(const GradedAlgebra& a);

enum class ReportFormat { Text, Machine };

struct ReportContext {
    std::string command;
    std::optional<std::string> sigma; // rendered group element
    std::optional<PitOptions> options;
};

// Every report exists in two renderings carrying identical data: Machine is
// one JSON document, Text a YAML-like view of the same tree.
std::string decision_report(const GradedAlgebra& a, const ReportContext& ctx, const Decision& d, ReportFormat fmt);
std::string faithful_report(const GradedAlgebra& a, const ReportContext& ctx, const FaithfulnessResult& r,
                            ReportFormat fmt);
std::string scan_report(const GradedAlgebra& a, const ReportContext& ctx,
                        const std::vector<std::pair<GroupValue, Decision>>& rows, ReportFormat fmt);
std::string theorem_a_report(const GradedAlgebra& a, const ReportContext& ctx, const std::vector<Rational>& alpha,
                             const TheoremAReport& r, ReportFormat fmt);
std::string validation_report(const ReportContext& ctx, const ValidationReport& r, ReportFormat fmt);

} // namespace gfrob
