#include "qgraph/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <map>
#include <numbers>
#include <sstream>

#include "qgraph/error.hpp"
#include "qgraph/laplacian.hpp"
#include "qgraph/random.hpp"
#include "qgraph/zeta.hpp"

namespace qgraph {

namespace {

bool close_rel(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b)); }

std::vector<std::pair<TreeMethod, std::int64_t>> all_tree_counts(const DiscreteGraph& g, std::vector<std::string>& failures) {
    std::vector<std::pair<TreeMethod, std::int64_t>> counts;
    auto attempt = [&](auto&& fn) {
        try {
            const TreeCount c = fn();
            counts.emplace_back(c.method, c.count);
        } catch (const Error& err) {
            failures.push_back(std::string("tree count: ") + err.what());
        }
    };
    if (brute_force_feasible(g)) attempt([&] { return count_brute_force(g); });
    attempt([&] { return count_matrix_tree(g); });
    attempt([&] { return count_det_prime_over_v(g); });
    attempt([&] { return count_harmonic(g); });
    if (const auto d = regular_degree(g)) attempt([&] { return count_regular(g, *d); });
    return counts;
}

} // namespace

std::vector<ZetaRow> zeta_table(const MetricGraph& mg, const std::vector<double>& s_values, double cutoff_k) {
    if (!mg.is_equilateral()) throw Error(ErrorCode::NotEquilateral, "zeta table needs an equilateral graph");
    const double length = mg.min_length();
    std::vector<ZetaRow> rows;
    for (double s : s_values) {
        ZetaRow row;
        row.s = s;
        row.hurwitz = zeta_hurwitz(mg.graph(), length, s).value;
        if (s > 1.0) {
            const auto direct = zeta_direct_sum(mg.graph(), length, s, cutoff_k);
            row.direct = direct.value;
            row.tail_bound = direct.tail_bound;
            row.cutoff = direct.truncation_k;
            const double diff = row.hurwitz - direct.value;
            row.agree = diff >= -1e-12 * std::abs(row.hurwitz) && diff <= *direct.tail_bound;
        }
        rows.push_back(row);
    }
    return rows;
}

AnalysisReport analyze(const MetricGraph& mg, const AnalysisOptions& options) {
    const DiscreteGraph& g = mg.graph();
    AnalysisReport r;
    const GraphShape sh = shape(g);
    r.vertex_count = g.vertex_count();
    r.edge_count = g.edge_count();
    r.betti = sh.betti;
    r.diameter = sh.diameter;
    r.degrees = sh.degree_sequence;
    r.lengths.assign(mg.lengths().begin(), mg.lengths().end());
    r.equilateral = mg.is_equilateral();

    r.det_prime_l = det_prime(spectrum(combinatorial_laplacian(g)));
    r.det_prime_delta = det_prime(spectrum(harmonic_laplacian(g)));
    r.det_prime_r = det_prime(spectrum(weighted_r(mg)));
    r.det_prime_quantum = det_prime_friedlander(mg).value;

    r.tree_counts = all_tree_counts(g, r.failures);
    const std::int64_t reference = r.tree_counts.empty() ? 0 : r.tree_counts.front().second;
    for (const auto& [method, count] : r.tree_counts) {
        if (count != reference) {
            r.failures.push_back("tree count by " + std::string(to_string(method)) + " is " + std::to_string(count) +
                                 ", expected " + std::to_string(reference));
        }
    }

    r.estimate = tree_estimator(mg);
    if (r.estimate.spread_ok && r.estimate.nearest != reference) {
        r.failures.push_back("certified T_Gamma rounds to " + std::to_string(r.estimate.nearest));
    }
    if (r.estimate.relaxed_star_ok.value_or(false) && r.estimate.nearest != reference) {
        r.failures.push_back("star estimate within l/2 rounds to " + std::to_string(r.estimate.nearest));
    }
    try {
        r.relaxed_threshold = relaxed_threshold(g, r.estimate.reference_length);
    } catch (const Error&) {
        // M >= V: no relaxation
    }

    if (r.equilateral) {
        const double length = mg.min_length();
        r.det_prime_quantum_closed_form = det_prime_equilateral(g, length).value;
        r.det_prime_quantum_zeta = det_via_zeta(g, length);
        if (!close_rel(r.det_prime_quantum, *r.det_prime_quantum_closed_form, 1e-9)) {
            r.failures.push_back("Friedlander and closed-form determinants disagree");
        }
        if (!close_rel(*r.det_prime_quantum_zeta, *r.det_prime_quantum_closed_form, 1e-10)) {
            r.failures.push_back("zeta and closed-form determinants disagree");
        }
        if (r.estimate.nearest != reference) {
            r.failures.push_back("equilateral T_Gamma rounds to " + std::to_string(r.estimate.nearest));
        }
    }

    const BoundReport mckay = mckay_lower(g);
    const UpperBoundsReport upper = upper_bounds(g);
    r.bounds = {mckay, upper.vertex_count, upper.edge_degree_sum};
    if (r.estimate.spread > 0.0) {
        const double l = r.estimate.reference_length;
        const double delta = r.estimate.spread;
        const NormBoundReport norm = norm_bound(mg, l, delta);
        r.bounds.push_back(norm.bound);
        r.bounds.push_back(norm.intermediate);
        for (auto& b : eigenvalue_drift(mg, l, delta)) r.bounds.push_back(std::move(b));
        r.bounds.push_back(weyl_drift(mg, l));
        const DetDriftReport drift = det_drift(mg, l, delta);
        if (drift.guard_ok) r.bounds.push_back(drift.bound);
    }
    for (const auto& b : r.bounds) {
        if (!b.holds) r.failures.push_back("bound " + b.name + " violated");
    }

    if (!options.zeta_s.empty()) {
        r.zeta = zeta_table(mg, options.zeta_s, options.zeta_cutoff.value_or(200.0 / mg.min_length()));
        for (const auto& row : r.zeta) {
            if (!row.agree) r.failures.push_back("zeta routes disagree at s = " + std::to_string(row.s));
        }
    }
    return r;
}

nlohmann::json to_json(const BoundReport& b) {
    return {{"name", b.name},
            {"lhs", b.lhs},
            {"rhs", b.rhs},
            {"holds", b.holds},
            {"slack", b.slack},
            {"strict", b.comparison == Comparison::Strict}};
}

nlohmann::json to_json(const ZetaRow& row) {
    nlohmann::json j = {{"s", row.s}, {"hurwitz", row.hurwitz}, {"agree", row.agree}};
    j["direct"] = row.direct ? nlohmann::json(*row.direct) : nlohmann::json(nullptr);
    j["tail_bound"] = row.tail_bound ? nlohmann::json(*row.tail_bound) : nlohmann::json(nullptr);
    j["cutoff"] = row.cutoff ? nlohmann::json(*row.cutoff) : nlohmann::json(nullptr);
    return j;
}

nlohmann::json to_json(const AnalysisReport& r) {
    using nlohmann::json;
    json j;
    j["schema"] = kReportSchema;
    j["graph"] = {{"V", r.vertex_count}, {"E", r.edge_count}, {"betti", r.betti}, {"diameter", r.diameter},
                  {"degrees", r.degrees}, {"lengths", r.lengths}, {"equilateral", r.equilateral}};
    json dets = {{"L", r.det_prime_l}, {"Delta", r.det_prime_delta}, {"R", r.det_prime_r},
                 {"quantum", r.det_prime_quantum}};
    dets["quantum_closed_form"] = r.det_prime_quantum_closed_form ? json(*r.det_prime_quantum_closed_form) : json(nullptr);
    dets["quantum_zeta"] = r.det_prime_quantum_zeta ? json(*r.det_prime_quantum_zeta) : json(nullptr);
    j["determinants"] = dets;

    json trees = json::object();
    for (const auto& [method, count] : r.tree_counts) trees[std::string(to_string(method))] = count;
    j["tree_counts"] = trees;

    json est = {{"t_gamma", r.estimate.t_gamma},
                {"nearest", r.estimate.nearest},
                {"reference_length", r.estimate.reference_length},
                {"spread", r.estimate.spread},
                {"delta_threshold", r.estimate.delta_threshold},
                {"spread_ok", r.estimate.spread_ok}};
    est["relaxed_star_ok"] = r.estimate.relaxed_star_ok ? json(*r.estimate.relaxed_star_ok) : json(nullptr);
    est["relaxed_threshold"] = r.relaxed_threshold ? json(*r.relaxed_threshold) : json(nullptr);
    j["estimate"] = est;

    json bounds = json::array();
    for (const auto& b : r.bounds) bounds.push_back(to_json(b));
    j["bounds"] = bounds;
    json zeta = json::array();
    for (const auto& row : r.zeta) zeta.push_back(to_json(row));
    j["zeta"] = zeta;
    j["consistent"] = r.consistent();
    j["failures"] = r.failures;
    return j;
}

std::string to_text(const AnalysisReport& r) {
    std::ostringstream out;
    out << std::setprecision(12);
    out << "graph: V=" << r.vertex_count << " E=" << r.edge_count << " betti=" << r.betti << " diameter=" << r.diameter
        << (r.equilateral ? " (equilateral)" : "") << '\n';
    out << "degrees:";
    for (int d : r.degrees) out << ' ' << d;
    out << "\n\ndeterminants\n";
    out << "  det'(L)      " << r.det_prime_l << '\n';
    out << "  det'(Delta)  " << r.det_prime_delta << '\n';
    out << "  det'(R)      " << r.det_prime_r << '\n';
    out << "  det'(quantum, Friedlander)  " << r.det_prime_quantum << '\n';
    if (r.det_prime_quantum_closed_form) out << "  det'(quantum, closed form)  " << *r.det_prime_quantum_closed_form << '\n';
    if (r.det_prime_quantum_zeta) out << "  det'(quantum, zeta)         " << *r.det_prime_quantum_zeta << '\n';

    out << "\nspanning trees\n";
    for (const auto& [method, count] : r.tree_counts) out << "  " << std::left << std::setw(18) << to_string(method) << count << '\n';
    out << "\nestimate\n";
    out << "  T_Gamma     " << r.estimate.t_gamma << " (nearest " << r.estimate.nearest << ")\n";
    out << "  spread      " << r.estimate.spread << " vs threshold " << r.estimate.delta_threshold
        << (r.estimate.spread_ok ? "  certified" : "  not certified") << '\n';
    if (r.estimate.relaxed_star_ok) out << "  star spread <= l/2: " << (*r.estimate.relaxed_star_ok ? "yes" : "no") << '\n';
    if (r.relaxed_threshold) out << "  relaxed threshold  " << *r.relaxed_threshold << '\n';

    out << "\nbounds\n";
    for (const auto& b : r.bounds) {
        out << "  " << std::left << std::setw(36) << b.name << b.lhs << (b.comparison == Comparison::Strict ? " < " : " <= ")
            << b.rhs << (b.holds ? "  ok" : "  VIOLATED") << '\n';
    }
    if (!r.zeta.empty()) {
        out << "\nzeta\n";
        for (const auto& row : r.zeta) {
            out << "  s=" << row.s << "  hurwitz=" << row.hurwitz;
            if (row.direct) out << "  direct=" << *row.direct << "  tail<=" << *row.tail_bound;
            out << (row.agree ? "" : "  DISAGREE") << '\n';
        }
    }
    out << '\n' << (r.consistent() ? "consistent" : "INCONSISTENT") << '\n';
    for (const auto& f : r.failures) out << "  " << f << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------

bool VerifySummary::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckTally& c) { return c.failed == 0; });
}

std::string VerifySummary::to_string() const {
    std::ostringstream out;
    out << "verify seed=" << options.seed << " trials=" << options.trials << " max_v=" << options.max_v << '\n';
    for (const auto& c : checks) {
        out << "  " << std::left << std::setw(24) << c.name << " passed " << std::setw(6) << c.passed << " failed "
            << c.failed << '\n';
    }
    for (const auto& f : failures) out << "  failure: " << f << '\n';
    out << (all_passed() ? "PASS" : "FAIL") << '\n';
    return out.str();
}

nlohmann::json VerifySummary::to_json() const {
    nlohmann::json checks_json = nlohmann::json::array();
    for (const auto& c : checks) checks_json.push_back({{"name", c.name}, {"passed", c.passed}, {"failed", c.failed}});
    return {{"schema", kReportSchema},
            {"seed", options.seed},
            {"trials", options.trials},
            {"max_v", options.max_v},
            {"checks", checks_json},
            {"failures", failures},
            {"pass", all_passed()}};
}

VerifySummary run_verify(const VerifyOptions& options) {
    if (options.max_v < 2 || options.max_v > 10) throw Error(ErrorCode::NotApplicable, "--max-v must be in 2..10");
    if (options.trials < 0) throw Error(ErrorCode::NotApplicable, "--trials must be non-negative");

    VerifySummary summary;
    summary.options = options;
    const std::vector<std::string> names = {"tree_counts_agree", "equilateral_recovery", "route_agreement",
                                            "spread_recovery", "bounds"};
    std::map<std::string, CheckTally> tally;
    for (const auto& n : names) tally[n].name = n;

    auto record = [&](const std::string& name, bool ok, int trial, const std::string& detail) {
        (ok ? tally[name].passed : tally[name].failed) += 1;
        if (!ok && summary.failures.size() < 20) {
            summary.failures.push_back("trial " + std::to_string(trial) + " " + name + ": " + detail);
        }
    };

    Pcg32 rng(options.seed);
    for (int trial = 0; trial < options.trials; ++trial) {
        const DiscreteGraph g = random_connected_graph(rng, 2, options.max_v);
        const int v = g.vertex_count();
        const int e = g.edge_count();
        std::int64_t reference = 0;

        try {
            std::vector<std::string> problems;
            const auto counts = all_tree_counts(g, problems);
            reference = counts.front().second;
            bool same = problems.empty();
            for (const auto& [method, count] : counts) same = same && count == reference;
            record("tree_counts_agree", same, trial, problems.empty() ? "methods disagree" : problems.front());
        } catch (const Error& err) {
            record("tree_counts_agree", false, trial, err.what());
        }

        try {
            bool ok = true;
            for (double l : {0.5, 1.0, std::numbers::e}) {
                const double t = t_gamma_equilateral(g, l);
                ok = ok && std::llround(t) == reference &&
                     std::abs(t - static_cast<double>(reference)) <= 1e-6 * std::max(1.0, static_cast<double>(reference));
            }
            record("equilateral_recovery", ok, trial, "T_Gamma does not round to the tree count");
        } catch (const Error& err) {
            record("equilateral_recovery", false, trial, err.what());
        }

        try {
            const double l = rng.uniform(0.5, 2.0);
            const double closed = det_prime_equilateral(g, l).value;
            const double friedlander = det_prime_friedlander(equilateral(g, l)).value;
            record("route_agreement", close_rel(closed, friedlander, 1e-9), trial, "determinant routes disagree");
        } catch (const Error& err) {
            record("route_agreement", false, trial, err.what());
        }

        try {
            const double l = rng.uniform(0.5, 2.0);
            const double delta = 0.9 * threshold_delta(g, l);
            const MetricGraph mg = attach_lengths(g, random_lengths(rng, g, l, delta));
            const double t = t_gamma(mg, l);
            const double t_tilde = t_gamma_equilateral(g, l);
            const double bound = delta / l * std::pow(static_cast<double>(v), v) * std::pow(2.0, e + v - 1) *
                                 std::sqrt(2.0 * e * v);
            record("spread_recovery", std::llround(t) == reference && std::abs(t - t_tilde) < bound, trial,
                   "T_Gamma = " + std::to_string(t));
        } catch (const Error& err) {
            record("spread_recovery", false, trial, err.what());
        }

        try {
            const double l = rng.uniform(0.5, 2.0);
            const double delta = rng.uniform(0.01, 0.5) * l;
            const MetricGraph mg = attach_lengths(g, random_lengths(rng, g, l, delta));
            bool ok = true;
            std::string which;
            auto check = [&](const BoundReport& b) {
                if (!b.holds && ok) which = b.name;
                ok = ok && b.holds;
            };
            const NormBoundReport norm = norm_bound(mg, l, delta);
            check(norm.bound);
            check(norm.intermediate);
            for (const auto& b : eigenvalue_drift(mg, l, delta)) check(b);
            check(weyl_drift(mg, l));
            const DetDriftReport drift = det_drift(mg, l, delta);
            if (drift.guard_ok) check(drift.bound);
            check(mckay_lower(g));
            const UpperBoundsReport upper = upper_bounds(g);
            check(upper.vertex_count);
            check(upper.edge_degree_sum);
            record("bounds", ok, trial, which + " violated");
        } catch (const Error& err) {
            record("bounds", false, trial, err.what());
        }
    }

    for (const auto& n : names) summary.checks.push_back(tally[n]);
    return summary;
}

namespace {

void dump_into(std::string& out, const nlohmann::json& v, int depth) {
    const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
    const std::string close_pad(static_cast<std::size_t>(2 * depth), ' ');
    if (v.is_object()) {
        if (v.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (const auto& [key, item] : v.items()) {
            if (!first) out += ",\n";
            first = false;
            out += pad + nlohmann::json(key).dump() + ": ";
            dump_into(out, item, depth + 1);
        }
        out += "\n" + close_pad + "}";
    } else if (v.is_array()) {
        if (v.empty()) {
            out += "[]";
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i > 0) out += ",\n";
            out += pad;
            dump_into(out, v[i], depth + 1);
        }
        out += "\n" + close_pad + "]";
    } else if (v.is_number_float()) {
        const double x = v.get<double>();
        if (!std::isfinite(x)) {
            out += "null";
            return;
        }
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", x);
        out += buf;
    } else {
        out += v.dump();
    }
}

} // namespace

std::string dump_json(const nlohmann::json& value) {
    std::string out;
    dump_into(out, value, 0);
    return out;
}

} // namespace qgraph
