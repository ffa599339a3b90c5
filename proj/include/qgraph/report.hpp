#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "qgraph/bounds.hpp"
#include "qgraph/graph.hpp"
#include "qgraph/quantum_det.hpp"
#include "qgraph/spanning_trees.hpp"

namespace qgraph {

inline constexpr int kReportSchema = 1;

struct ZetaRow {
    double s = 0.0;
    double hurwitz = 0.0;
    std::optional<double> direct;
    std::optional<double> tail_bound;
    std::optional<double> cutoff;
    bool agree = true;  ///< |hurwitz - direct| <= tail_bound when both exist
};

/// Per-s comparison of the Hurwitz representation against the truncated
/// eigenvalue sum. The direct sum is only formed for s > 1. Throws
/// NotEquilateral, HalfLinePole.
std::vector<ZetaRow> zeta_table(const MetricGraph& mg, const std::vector<double>& s_values, double cutoff_k);

struct AnalysisOptions {
    std::vector<double> zeta_s;          ///< empty: no zeta table
    std::optional<double> zeta_cutoff;   ///< default 200 / l
};

struct AnalysisReport {
    int vertex_count = 0;
    int edge_count = 0;
    int betti = 0;
    int diameter = 0;
    std::vector<int> degrees;
    std::vector<double> lengths;
    bool equilateral = false;

    double det_prime_l = 0.0;
    double det_prime_delta = 0.0;
    double det_prime_r = 0.0;
    double det_prime_quantum = 0.0;  ///< Friedlander route
    std::optional<double> det_prime_quantum_closed_form;  ///< equilateral only
    std::optional<double> det_prime_quantum_zeta;         ///< equilateral only

    std::vector<std::pair<TreeMethod, std::int64_t>> tree_counts;
    TreeEstimate estimate;
    std::optional<double> relaxed_threshold;
    std::vector<BoundReport> bounds;
    std::vector<ZetaRow> zeta;

    std::vector<std::string> failures;
    bool consistent() const { return failures.empty(); }
};

/// Everything the toolkit knows how to compute about one metric graph, with
/// the cross-checks between routes recorded in `failures`.
AnalysisReport analyze(const MetricGraph& mg, const AnalysisOptions& options = {});

nlohmann::json to_json(const AnalysisReport& report);
nlohmann::json to_json(const BoundReport& bound);
nlohmann::json to_json(const ZetaRow& row);
std::string to_text(const AnalysisReport& report);

/// Pretty-printed JSON with keys sorted and every float written with 17
/// significant digits, so that equal values always produce equal bytes.
std::string dump_json(const nlohmann::json& value);

// Randomised property sweep ------------------------------------------------

struct VerifyOptions {
    std::uint64_t seed = 42;
    int trials = 100;
    int max_v = 7;
};

struct CheckTally {
    std::string name;
    int passed = 0;
    int failed = 0;
};

struct VerifySummary {
    VerifyOptions options;
    std::vector<CheckTally> checks;
    std::vector<std::string> failures;  ///< first few failure messages

    bool all_passed() const;
    std::string to_string() const;
    nlohmann::json to_json() const;
};

/// Runs tree-count agreement, equilateral recovery for l in {0.5, 1, e},
/// route agreement, recovery under the certified spread and the bound
/// suite on `trials` random connected graphs with 2..max_v vertices, all
/// drawn from one PCG32 stream seeded with `seed`.
VerifySummary run_verify(const VerifyOptions& options);

} // namespace qgraph
