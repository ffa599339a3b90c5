// Command-line front end: analyze, zeta and verify.
//
// Exit codes: 0 success, 1 an internal consistency check failed, 2 bad input.

#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qgraph/error.hpp"
#include "qgraph/io.hpp"
#include "qgraph/report.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInconsistent = 1;
constexpr int kInputError = 2;

int input_error(const std::string& path, const qgraph::Error& err) {
    std::cerr << path << ": " << qgraph::to_string(err.code()) << ": " << err.what() << '\n';
    return kInputError;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral determinants and spanning trees of quantum graphs"};
    app.require_subcommand(1);

    std::string path;
    double length = 1.0;
    bool json = false;
    std::vector<double> s_values;
    double cutoff = 0.0;

    auto* analyze = app.add_subcommand("analyze", "Determinants, tree counts, T_Gamma and bounds for a graph file");
    analyze->add_option("graph", path, "Graph file")->required();
    analyze->add_option("--length", length, "Edge length for files without lengths")->check(CLI::PositiveNumber);
    analyze->add_flag("--json", json, "Machine-readable output");
    analyze->add_option("--s", s_values, "Zeta arguments (equilateral graphs)")->delimiter(',');
    analyze->add_option("--cutoff", cutoff, "Wavenumber cutoff for the direct zeta sum (default 200/l)");

    auto* zeta = app.add_subcommand("zeta", "Hurwitz-formula vs direct-sum spectral zeta values");
    zeta->add_option("graph", path, "Graph file")->required();
    zeta->add_option("--length", length, "Edge length for files without lengths")->check(CLI::PositiveNumber);
    zeta->add_option("--s", s_values, "Zeta arguments")->delimiter(',')->required();
    zeta->add_option("--cutoff", cutoff, "Wavenumber cutoff for the direct sum (default 200/l)");
    zeta->add_flag("--json", json, "Machine-readable output");

    qgraph::VerifyOptions verify_options;
    auto* verify = app.add_subcommand("verify", "Randomised property sweep with a fixed seed");
    verify->add_option("--seed", verify_options.seed, "PCG32 seed");
    verify->add_option("--trials", verify_options.trials, "Number of random graphs")->check(CLI::NonNegativeNumber);
    verify->add_option("--max-v", verify_options.max_v, "Largest vertex count")->check(CLI::Range(2, 10));
    verify->add_flag("--json", json, "Machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    if (*analyze) {
        try {
            const auto mg = qgraph::read_graph_file(path, length);
            qgraph::AnalysisOptions options;
            options.zeta_s = s_values;
            if (cutoff > 0.0) options.zeta_cutoff = cutoff;
            const auto report = qgraph::analyze(mg, options);
            if (json) {
                std::cout << qgraph::dump_json(qgraph::to_json(report)) << '\n';
            } else {
                std::cout << qgraph::to_text(report);
            }
            return report.consistent() ? kOk : kInconsistent;
        } catch (const qgraph::Error& err) {
            return input_error(path, err);
        }
    }

    if (*zeta) {
        try {
            const auto mg = qgraph::read_graph_file(path, length);
            const double k = cutoff > 0.0 ? cutoff : 200.0 / mg.min_length();
            for (double s : s_values) {
                if (s == 0.5) {
                    throw qgraph::Error(qgraph::ErrorCode::HalfLinePole, "s = 1/2 is a pole of the spectral zeta function");
                }
                if (!(s > 1.0)) {
                    throw qgraph::Error(qgraph::ErrorCode::SNotConvergent,
                                        "s = " + std::to_string(s) + " refused: the direct sum needs s > 1");
                }
            }
            const auto rows = qgraph::zeta_table(mg, s_values, k);
            bool agree = true;
            if (json) {
                nlohmann::json out = nlohmann::json::array();
                for (const auto& row : rows) out.push_back(qgraph::to_json(row));
                std::cout << qgraph::dump_json(nlohmann::json{{"schema", qgraph::kReportSchema}, {"rows", out}}) << '\n';
            } else {
                std::cout << std::setprecision(15);
                std::cout << "s\thurwitz\tdirect\ttail_bound\n";
                for (const auto& row : rows) {
                    std::cout << row.s << '\t' << row.hurwitz << '\t' << *row.direct << '\t' << *row.tail_bound
                              << (row.agree ? "" : "\tDISAGREE") << '\n';
                }
            }
            for (const auto& row : rows) agree = agree && row.agree;
            return agree ? kOk : kInconsistent;
        } catch (const qgraph::Error& err) {
            return input_error(path, err);
        }
    }

    if (*verify) {
        try {
            const auto summary = qgraph::run_verify(verify_options);
            if (json) {
                std::cout << qgraph::dump_json(summary.to_json()) << '\n';
            } else {
                std::cout << summary.to_string();
            }
            return summary.all_passed() ? kOk : kInconsistent;
        } catch (const qgraph::Error& err) {
            std::cerr << "verify: " << err.what() << '\n';
            return kInputError;
        }
    }
    return kInputError;
}
