#include "gfrob/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

namespace gfrob {

using ordered_json = nlohmann::ordered_json;

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok)
        tokens.push_back(tok);
    return tokens;
}

int parse_index(const std::string& tok, int bound, int line_no) {
    size_t used = 0;
    int value;
    try {
        value = std::stoi(tok, &used);
    } catch (const std::exception&) {
        throw ParseError("expected an index, got '" + tok + "'", line_no);
    }
    if (used != tok.size())
        throw ParseError("expected an index, got '" + tok + "'", line_no);
    if (value < 0 || value >= bound)
        throw ParseError("index " + tok + " out of range [0," + std::to_string(bound) + ")", line_no);
    return value;
}

} // namespace

GradedAlgebra parse_algebra_file(std::string_view text) {
    std::optional<GroupModel> group;
    std::vector<std::string> names;
    std::vector<std::string> degree_texts;
    std::vector<std::string> unit_tokens;
    std::vector<std::tuple<std::string, std::string, std::string, std::string, int>> c_lines;
    bool saw_unit = false;

    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::vector<std::string> tokens = tokenize(raw);
        if (tokens.empty())
            continue;
        const std::string& key = tokens[0];
        if (key == "group") {
            if (group)
                throw ParseError("duplicate group line", line_no);
            std::string descr = raw.substr(raw.find("group") + 5);
            try {
                group = GroupModel::parse(descr);
            } catch (const Error& e) {
                throw ParseError(e.what(), line_no);
            }
        } else if (key == "basis") {
            if (tokens.size() < 3)
                throw ParseError("basis line needs a name and a degree", line_no);
            std::string rest = raw.substr(raw.find("basis") + 5);
            std::istringstream bs(rest);
            std::string name;
            bs >> name;
            std::string degree;
            std::getline(bs, degree);
            names.push_back(name);
            degree_texts.push_back(degree);
            if (std::count(names.begin(), names.end(), name) > 1)
                throw ParseError("duplicate basis name '" + name + "'", line_no);
        } else if (key == "unit") {
            if (saw_unit)
                throw ParseError("duplicate unit line", line_no);
            saw_unit = true;
            unit_tokens.assign(tokens.begin() + 1, tokens.end());
        } else if (key == "c") {
            if (tokens.size() != 5)
                throw ParseError("c line needs i j l value", line_no);
            c_lines.emplace_back(tokens[1], tokens[2], tokens[3], tokens[4], line_no);
        } else {
            throw ParseError("unknown keyword '" + key + "'", line_no);
        }
    }

    if (!group)
        throw ParseError("missing group line");
    if (names.empty())
        throw ParseError("no basis lines");
    if (!saw_unit)
        throw ParseError("missing unit line");
    const int m = static_cast<int>(names.size());
    if (unit_tokens.size() != names.size())
        throw ParseError("unit has " + std::to_string(unit_tokens.size()) + " entries, expected " +
                         std::to_string(m));

    std::vector<GroupValue> degrees;
    for (const std::string& d : degree_texts) {
        try {
            degrees.push_back(group->parse_element(d));
        } catch (const Error& e) {
            throw ParseError(std::string("bad degree: ") + e.what());
        }
    }
    std::vector<Rational> unit;
    for (const std::string& u : unit_tokens)
        unit.push_back(parse_rational(u));

    StructureConstants constants;
    std::set<std::tuple<int, int, int>> seen;
    for (const auto& [si, sj, sl, sv, ln] : c_lines) {
        const int i = parse_index(si, m, ln);
        const int j = parse_index(sj, m, ln);
        const int l = parse_index(sl, m, ln);
        if (!seen.insert({i, j, l}).second)
            throw ParseError("duplicate constant (" + si + "," + sj + "," + sl + ")", ln);
        const Rational value = parse_rational(sv);
        if (value != 0)
            constants[{i, j}].emplace_back(l, value);
    }

    return GradedAlgebra::checked(std::move(*group), std::move(degrees), std::move(constants), std::move(unit),
                                  std::move(names));
}

std::string serialize_algebra(const GradedAlgebra& a) {
    std::string out = "group " + a.group().describe() + "\n";
    for (size_t i = 0; i < a.dim(); ++i)
        out += "basis " + a.basis_name(static_cast<int>(i)) + " " + a.group().render_element(a.degree(static_cast<int>(i))) + "\n";
    out += "unit";
    for (const Rational& u : a.unit())
        out += " " + rational_to_string(u);
    out += "\n";
    for (const auto& [ij, row] : a.constants())
        for (const auto& [l, value] : row)
            out += "c " + std::to_string(ij.first) + " " + std::to_string(ij.second) + " " + std::to_string(l) + " " +
                   rational_to_string(value) + "\n";
    return out;
}

std::string algebra_hash(const GradedAlgebra& a) {
    const std::string data = serialize_algebra(a);
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

namespace {

const char* block_status_name(BlockStatus s) {
    switch (s) {
    case BlockStatus::Empty:
        return "empty";
    case BlockStatus::Ok:
        return "ok";
    case BlockStatus::SizeMismatch:
        return "size-mismatch";
    case BlockStatus::ZeroDet:
        return "zero-det";
    case BlockStatus::Unchecked:
        return "unchecked";
    }
    return "?";
}

const char* strategy_name(Strategy s) {
    switch (s) {
    case Strategy::Auto:
        return "auto";
    case Strategy::Randomized:
        return "randomized";
    case Strategy::Symbolic:
        return "symbolic";
    }
    return "?";
}

ordered_json header(const GradedAlgebra* a, const ReportContext& ctx) {
    ordered_json j;
    j["tool"] = "gfrob";
    j["command"] = ctx.command;
    if (a) {
        ordered_json alg;
        alg["hash"] = algebra_hash(*a);
        alg["group"] = a->group().describe();
        alg["dim"] = a->dim();
        j["algebra"] = std::move(alg);
    }
    if (ctx.sigma)
        j["sigma"] = *ctx.sigma;
    if (ctx.options) {
        ordered_json o;
        o["strategy"] = strategy_name(ctx.options->strategy);
        o["seed"] = ctx.options->seed;
        o["trials"] = ctx.options->trials;
        o["sample_bound"] = ctx.options->sample_bound;
        j["options"] = std::move(o);
    }
    return j;
}

ordered_json block_table_json(const GradedAlgebra& a, const std::vector<BlockInfo>& table) {
    ordered_json rows = ordered_json::array();
    for (const BlockInfo& b : table) {
        ordered_json r;
        r["g"] = a.group().render_element(b.g);
        r["rows"] = b.rows;
        r["cols"] = b.cols;
        r["status"] = block_status_name(b.status);
        if (b.det)
            r["det"] = rational_to_string(*b.det);
        rows.push_back(std::move(r));
    }
    return rows;
}

ordered_json witness_json(const GradedAlgebra& a, const Witness& w) {
    ordered_json j;
    if (const auto* dm = std::get_if<DimensionMismatchWitness>(&w)) {
        j["kind"] = "dimension-mismatch";
        j["g"] = a.group().render_element(dm->g);
        j["rows"] = dm->rows;
        j["cols"] = dm->cols;
    } else if (const auto* rd = std::get_if<RankDeficiencyWitness>(&w)) {
        j["kind"] = "rank-deficiency";
        j["g"] = a.group().render_element(rd->g);
        j["rank"] = rd->rank;
        j["needed"] = rd->needed;
    } else if (const auto* zd = std::get_if<IdenticallyZeroDetWitness>(&w)) {
        j["kind"] = "identically-zero-det";
        j["g"] = a.group().render_element(zd->g);
    } else if (std::holds_alternative<ZeroSigmaComponentWitness>(w)) {
        j["kind"] = "zero-sigma-component";
    } else {
        j["kind"] = "no-symmetric-solution";
    }
    return j;
}

ordered_json decision_json(const GradedAlgebra& a, const Decision& d) {
    ordered_json j;
    j["verdict"] = d.yes ? "yes" : "no";
    if (d.certificate) {
        ordered_json alpha = ordered_json::array();
        for (size_t k = 0; k < d.certificate->alpha.size(); ++k) {
            ordered_json entry;
            entry["index"] = d.certificate->alpha_index[k];
            entry["basis"] = a.basis_name(d.certificate->alpha_index[k]);
            entry["value"] = rational_to_string(d.certificate->alpha[k]);
            alpha.push_back(std::move(entry));
        }
        ordered_json cert;
        cert["alpha"] = std::move(alpha);
        j["certificate"] = std::move(cert);
    }
    if (d.witness)
        j["witness"] = witness_json(a, *d.witness);
    if (!d.block_table.empty())
        j["blocks"] = block_table_json(a, d.block_table);
    return j;
}

// YAML-like rendering of the same tree the machine format prints.
void render_text_node(const ordered_json& j, std::string& out, int indent, bool list_item);

std::string scalar_text(const ordered_json& j) {
    if (j.is_string())
        return j.get<std::string>();
    if (j.is_boolean())
        return j.get<bool>() ? "true" : "false";
    return j.dump();
}

void render_text_node(const ordered_json& j, std::string& out, int indent, bool list_item) {
    const std::string pad(static_cast<size_t>(indent), ' ');
    if (j.is_object()) {
        bool first = true;
        for (const auto& [key, value] : j.items()) {
            const std::string lead = list_item && first ? pad.substr(0, pad.size() - 2) + "- " : pad;
            first = false;
            if (value.is_object() || value.is_array()) {
                if (value.empty()) {
                    out += lead + key + ": " + (value.is_array() ? "[]" : "{}") + "\n";
                } else {
                    out += lead + key + ":\n";
                    render_text_node(value, out, indent + 2, false);
                }
            } else {
                out += lead + key + ": " + scalar_text(value) + "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& item : j) {
            if (item.is_object()) {
                render_text_node(item, out, indent + 2, true);
            } else {
                out += pad + "- " + scalar_text(item) + "\n";
            }
        }
    } else {
        out += pad + scalar_text(j) + "\n";
    }
}

std::string render(const ordered_json& j, ReportFormat fmt) {
    if (fmt == ReportFormat::Machine)
        return j.dump(2) + "\n";
    std::string out;
    render_text_node(j, out, 0, false);
    return out;
}

} // namespace

std::string decision_report(const GradedAlgebra& a, const ReportContext& ctx, const Decision& d, ReportFormat fmt) {
    ordered_json j = header(&a, ctx);
    const ordered_json body = decision_json(a, d);
    for (const auto& [key, value] : body.items())
        j[key] = value;
    return render(j, fmt);
}

std::string faithful_report(const GradedAlgebra& a, const ReportContext& ctx, const FaithfulnessResult& r,
                            ReportFormat fmt) {
    ordered_json j = header(&a, ctx);
    j["verdict"] = r.faithful ? "yes" : "no";
    if (!r.faithful) {
        ordered_json w;
        w["kind"] = "rank-deficiency";
        w["g"] = a.group().render_element(r.witness_g);
        w["rank"] = r.rank;
        w["needed"] = r.needed;
        j["witness"] = std::move(w);
    }
    return render(j, fmt);
}

std::string scan_report(const GradedAlgebra& a, const ReportContext& ctx,
                        const std::vector<std::pair<GroupValue, Decision>>& rows, ReportFormat fmt) {
    ordered_json j = header(&a, ctx);
    ordered_json results = ordered_json::array();
    ordered_json yes_at = ordered_json::array();
    for (const auto& [sigma, d] : rows) {
        ordered_json r;
        r["sigma"] = a.group().render_element(sigma);
        const ordered_json body = decision_json(a, d);
        for (const auto& [key, value] : body.items())
            r[key] = value;
        results.push_back(std::move(r));
        if (d.yes)
            yes_at.push_back(a.group().render_element(sigma));
    }
    j["results"] = std::move(results);
    j["yes_at"] = std::move(yes_at);
    j["note"] = "degrees outside the support are all no (zero sigma-component)";
    return render(j, fmt);
}

std::string theorem_a_report(const GradedAlgebra& a, const ReportContext& ctx, const std::vector<Rational>& alpha,
                             const TheoremAReport& r, ReportFormat fmt) {
    ordered_json j = header(&a, ctx);
    ordered_json av = ordered_json::array();
    for (const Rational& x : alpha)
        av.push_back(rational_to_string(x));
    j["alpha"] = std::move(av);
    ordered_json c;
    c["full_matrix_invertible"] = r.full_rank;
    c["epsilon_corner_and_cg_ranks"] = r.epsilon_route;
    c["all_blocks_invertible"] = r.blockwise;
    j["conditions"] = std::move(c);
    j["consistent"] = r.consistent();
    return render(j, fmt);
}

std::string validation_report(const ReportContext& ctx, const ValidationReport& r, ReportFormat fmt) {
    ordered_json j;
    j["tool"] = "gfrob";
    j["command"] = ctx.command;
    j["verdict"] = r.passed() ? "valid" : "invalid";
    if (!r.passed()) {
        ordered_json v = ordered_json::array();
        for (const Violation& violation : r.violations) {
            ordered_json item;
            switch (violation.kind) {
            case ViolationKind::GradingMismatch:
                item["kind"] = "grading-mismatch";
                break;
            case ViolationKind::AssociativityFailure:
                item["kind"] = "associativity";
                break;
            case ViolationKind::UnitFailure:
                item["kind"] = "unit";
                break;
            case ViolationKind::UnitSupport:
                item["kind"] = "unit-support";
                break;
            }
            item["indices"] = violation.indices;
            item["detail"] = violation.detail;
            v.push_back(std::move(item));
        }
        j["violations"] = std::move(v);
    }
    return render(j, fmt);
}

} // namespace gfrob
