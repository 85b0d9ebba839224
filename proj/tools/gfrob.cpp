// gfrob -- decide graded Frobenius / graded symmetric / faithfulness
// questions about finite-dimensional group-graded algebras given by
// structure constants, with exact certificates or refutation witnesses.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gfrob/constructors.hpp"
#include "gfrob/decide.hpp"
#include "gfrob/io.hpp"

namespace {

using namespace gfrob;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct CommonArgs {
    std::string file;
    std::string sigma;
    std::string strategy = "auto";
    uint64_t seed = 0;
    int trials = 4;
    int64_t sample_bound = 65536;
    std::string format = "text";
};

void add_pit_flags(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--strategy", args.strategy, "auto | randomized | symbolic")
        ->check(CLI::IsMember({"auto", "randomized", "symbolic"}));
    cmd->add_option("--seed", args.seed, "seed for the randomized path");
    cmd->add_option("--trials", args.trials, "sampling trials before the symbolic fallback")->check(CLI::PositiveNumber);
    cmd->add_option("--sample-bound", args.sample_bound, "samples are drawn from [1, bound]")
        ->check(CLI::PositiveNumber);
}

void add_format_flag(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--format", args.format, "text | machine")->check(CLI::IsMember({"text", "machine"}));
}

PitOptions pit_options(const CommonArgs& args) {
    PitOptions opt;
    opt.strategy = args.strategy == "symbolic"     ? Strategy::Symbolic
                   : args.strategy == "randomized" ? Strategy::Randomized
                                                   : Strategy::Auto;
    opt.seed = args.seed;
    opt.trials = args.trials;
    opt.sample_bound = args.sample_bound;
    return opt;
}

ReportFormat report_format(const CommonArgs& args) {
    return args.format == "machine" ? ReportFormat::Machine : ReportFormat::Text;
}

// Splits "a,b,c" at top-level commas, respecting parentheses.
std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::string current;
    int depth = 0;
    for (char c : text) {
        if (c == '(')
            ++depth;
        if (c == ')')
            --depth;
        if (c == ',' && depth == 0) {
            out.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    out.push_back(current);
    return out;
}

QMatrix parse_q_flag(int n, const std::string& text) {
    std::map<std::pair<int, int>, Rational> entries;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ';')) {
        if (item.empty())
            continue;
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw Error("bad --q item '" + item + "', expected i,j=value");
        auto comma = item.find(',');
        if (comma == std::string::npos || comma > eq)
            throw Error("bad --q item '" + item + "', expected i,j=value");
        const int i = std::stoi(item.substr(0, comma));
        const int j = std::stoi(item.substr(comma + 1, eq - comma - 1));
        entries[{i, j}] = parse_rational(item.substr(eq + 1));
    }
    return QMatrix(n, std::move(entries));
}

struct MakeArgs {
    std::string family;
    int n = 2;
    std::string q;
    std::string grading = "z2n";
    std::string group;
    std::string tuple;
    std::string output;
    std::string format = "text";
};

AqGrading parse_grading(const std::string& g) {
    if (g == "z")
        return AqGrading::Integer;
    if (g == "z2n")
        return AqGrading::BoolVec;
    return AqGrading::Trivial;
}

GradedAlgebra run_make(const MakeArgs& args) {
    if (args.family == "aq") {
        if (args.q.empty())
            throw Error("--family aq needs --q");
        return make_aq(parse_q_flag(args.n, args.q), parse_grading(args.grading));
    }
    if (args.family == "exterior")
        return make_exterior(args.n, parse_grading(args.grading));
    if (args.family == "matrix") {
        if (args.group.empty() || args.tuple.empty())
            throw Error("--family matrix needs --group and --tuple");
        GroupModel model = GroupModel::parse(args.group);
        std::string inner = args.tuple;
        if (inner.size() >= 2 && inner.front() == '(' && inner.back() == ')')
            inner = inner.substr(1, inner.size() - 2);
        std::vector<GroupValue> tuple;
        for (const std::string& part : split_commas(inner))
            tuple.push_back(model.parse_element(part));
        return make_good_matrix({std::move(model), std::move(tuple)});
    }
    if (args.family == "group-algebra") {
        if (args.group.empty())
            throw Error("--family group-algebra needs --group");
        return make_group_algebra(GroupModel::parse(args.group));
    }
    throw Error("unknown family '" + args.family + "'");
}

int emit(const std::string& report, int exit_code) {
    std::cout << report;
    return exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact decision procedures for graded Frobenius and graded symmetric algebras"};
    app.require_subcommand(1);

    CommonArgs args;
    MakeArgs make_args;
    std::string alpha_flag;

    CLI::App* validate = app.add_subcommand("validate", "check grading, associativity and unit axioms of a file");
    validate->add_option("file", args.file)->required();
    add_format_flag(validate, args);

    CLI::App* frob = app.add_subcommand("check-frobenius", "is the algebra sigma-graded Frobenius?");
    frob->add_option("file", args.file)->required();
    frob->add_option("--sigma", args.sigma, "group element")->required();
    add_pit_flags(frob, args);
    add_format_flag(frob, args);

    CLI::App* sym = app.add_subcommand("check-symmetric", "is the algebra graded symmetric?");
    sym->add_option("file", args.file)->required();
    add_pit_flags(sym, args);
    add_format_flag(sym, args);

    CLI::App* faithful = app.add_subcommand("check-faithful", "is the algebra left sigma-faithful?");
    faithful->add_option("file", args.file)->required();
    faithful->add_option("--sigma", args.sigma, "group element")->required();
    add_format_flag(faithful, args);

    CLI::App* dual = app.add_subcommand("check-dual-iso", "is (A_sigma)* isomorphic to A_epsilon?");
    dual->add_option("file", args.file)->required();
    dual->add_option("--sigma", args.sigma, "group element")->required();
    add_pit_flags(dual, args);
    add_format_flag(dual, args);

    CLI::App* scan = app.add_subcommand("scan-sigma", "decide sigma-graded Frobenius for every sigma in the support");
    scan->add_option("file", args.file)->required();
    add_pit_flags(scan, args);
    add_format_flag(scan, args);

    CLI::App* thma = app.add_subcommand("theorem-a", "evaluate the three invertibility conditions at a fixed alpha");
    thma->add_option("file", args.file)->required();
    thma->add_option("--sigma", args.sigma, "group element")->required();
    thma->add_option("--alpha", alpha_flag, "comma-separated rationals over J_sigma")->required();
    add_format_flag(thma, args);

    CLI::App* make_cmd = app.add_subcommand("make", "construct a built-in algebra family and print its file");
    make_cmd->add_option("--family", make_args.family, "aq | exterior | matrix | group-algebra")->required();
    make_cmd->add_option("--n", make_args.n, "generators (aq, exterior) or matrix size");
    make_cmd->add_option("--q", make_args.q, "parameters, e.g. \"1,2=3;1,3=-1/2;2,3=5\"");
    make_cmd->add_option("--grading", make_args.grading, "z | z2n | trivial")
        ->check(CLI::IsMember({"z", "z2n", "trivial"}));
    make_cmd->add_option("--group", make_args.group, "grading group (matrix, group-algebra)");
    make_cmd->add_option("--tuple", make_args.tuple, "good-grading tuple, e.g. \"(0,1)\"");
    make_cmd->add_option("-o,--output", make_args.output, "write the file here instead of stdout");

    CLI::App* koszul = app.add_subcommand("koszul-dual", "print the Koszul-dual parameters q' = -1/q");
    koszul->add_option("--n", make_args.n)->required();
    koszul->add_option("--q", make_args.q)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError; // --help exits 0, usage errors exit 2
    }

    try {
        const auto started = std::chrono::steady_clock::now();
        int code = kExitError;

        if (app.got_subcommand(validate)) {
            ReportContext ctx{"validate", std::nullopt, std::nullopt};
            try {
                GradedAlgebra a = parse_algebra_file(read_file(args.file));
                code = emit(validation_report(ctx, a.validate(), report_format(args)), kExitYes);
            } catch (const ValidationError& e) {
                code = emit(validation_report(ctx, e.report, report_format(args)), kExitNo);
            }
        } else if (app.got_subcommand(frob)) {
            GradedAlgebra a = parse_algebra_file(read_file(args.file));
            GroupValue sigma = a.group().parse_element(args.sigma);
            Decision d = decide_sigma_frobenius(a, sigma, pit_options(args));
            ReportContext ctx{"check-frobenius", a.group().render_element(sigma), pit_options(args)};
            code = emit(decision_report(a, ctx, d, report_format(args)), d.yes ? kExitYes : kExitNo);
        } else if (app.got_subcommand(sym)) {
            GradedAlgebra a = parse_algebra_file(read_file(args.file));
            Decision d = decide_graded_symmetric(a, pit_options(args));
            ReportContext ctx{"check-symmetric", std::nullopt, pit_options(args)};
            code = emit(decision_report(a, ctx, d, report_format(args)), d.yes ? kExitYes : kExitNo);
        } else if (app.got_subcommand(faithful)) {
            GradedAlgebra a = parse_algebra_file(read_file(args.file));
            GroupValue sigma = a.group().parse_element(args.sigma);
            FaithfulnessResult r = is_sigma_faithful(a, sigma);
            ReportContext ctx{"check-faithful", a.group().render_element(sigma), std::nullopt};
            code = emit(faithful_report(a, ctx, r, report_format(args)), r.faithful ? kExitYes : kExitNo);
        } else if (app.got_subcommand(dual)) {
            GradedAlgebra a = parse_algebra_file(read_file(args.file));
            GroupValue sigma = a.group().parse_element(args.sigma);
            Decision d = decide_dual_component_iso(a, sigma, pit_options(args));
            ReportContext ctx{"check-dual-iso", a.group().render_element(sigma), pit_options(args)};
            code = emit(decision_report(a, ctx, d, report_format(args)), d.yes ? kExitYes : kExitNo);
        } else if (app.got_subcommand(scan)) {
            GradedAlgebra a = parse_algebra_file(read_file(args.file));
            auto rows = scan_sigma(a, pit_options(args));
            ReportContext ctx{"scan-sigma", std::nullopt, pit_options(args)};
            bool any_yes = std::any_of(rows.begin(), rows.end(), [](const auto& r) { return r.second.yes; });
            code = emit(scan_report(a, ctx, rows, report_format(args)), any_yes ? kExitYes : kExitNo);
        } else if (app.got_subcommand(thma)) {
            GradedAlgebra a = parse_algebra_file(read_file(args.file));
            GroupValue sigma = a.group().parse_element(args.sigma);
            std::vector<Rational> alpha;
            if (!alpha_flag.empty())
                for (const std::string& part : split_commas(alpha_flag))
                    alpha.push_back(parse_rational(part));
            TheoremAReport r = check_theorem_a(a, sigma, alpha);
            ReportContext ctx{"theorem-a", a.group().render_element(sigma), std::nullopt};
            code = emit(theorem_a_report(a, ctx, alpha, r, report_format(args)), r.consistent() ? kExitYes : kExitNo);
        } else if (app.got_subcommand(make_cmd)) {
            GradedAlgebra a = run_make(make_args);
            const std::string text = serialize_algebra(a);
            if (make_args.output.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(make_args.output);
                if (!out)
                    throw Error("cannot write '" + make_args.output + "'");
                out << text;
            }
            code = kExitYes;
        } else if (app.got_subcommand(koszul)) {
            QMatrix dual_q = koszul_dual_q(parse_q_flag(make_args.n, make_args.q));
            std::string out;
            for (int i = 1; i < dual_q.n(); ++i)
                for (int j = i + 1; j <= dual_q.n(); ++j)
                    out += (out.empty() ? "" : ";") + std::to_string(i) + "," + std::to_string(j) + "=" +
                           rational_to_string(dual_q.q(i, j));
            std::cout << out << "\n";
            code = kExitYes;
        }

        const auto elapsed =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
        std::cerr << "# " << elapsed.count() << " ms\n";
        return code;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
