#include <CLI11.hpp>

#include <iostream>
#include <optional>

#include "cpk/analysis.hpp"
#include "cpk/bruteforce.hpp"
#include "cpk/report_io.hpp"

namespace {

using namespace cpk;

constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceLimit = 3;

struct RunConfig {
    int max_n = 12;
    int depth = 6;
    std::string tol = "1e-6";
    int threads = 1;
    std::string format = "json";
    int brute_guard = 10;
};

json seed_tables() {
    json fixtures;
    fixtures["reduction"] = {{"394176", "263154"}};
    fixtures["overlap_sets"] = {{"14253", {2, 4}},
                                {"132", {2}},
                                {"1234", {1, 2, 3}},
                                {"1324", {2, 3}}};
    fixtures["nonoverlapping_examples"] = {"132", "1243", "1342", "21534", "34671285"};
    fixtures["min_overlap"] = {{"2413", 2}, {"2143", 2}, {"1324", 2},
                               {"1423", 2}, {"1243", 3}};
    fixtures["occurrences"] = {{"pattern", "132"}, {"text", "15243"}, {"count", 2}};
    fixtures["cluster_numbers_k23"] = {
        {"2413", {{"6,2", 2}, {"7,2", 9}, {"8,3", 5}, {"9,3", 108}, {"10,3", 234}}},
        {"2143", {{"6,2", 1}, {"7,2", 9}, {"8,3", 1}, {"9,3", 30}, {"10,3", 234}}},
        {"1324", {{"6,2", 2}, {"7,2", 1}, {"8,3", 5}, {"9,3", 4}, {"10,3", 1}}},
        {"1423", {{"6,2", 1}, {"7,2", 4}, {"8,3", 1}, {"9,3", 16}, {"10,3", 28}}}};
    fixtures["two_clusters_132"] = {{"n", 5},
                                    {"k", 2},
                                    {"count", 3},
                                    {"clusters", {"13254", "14253", "15243"}},
                                    {"tuple", {1, 3}}};
    fixtures["class_counts"] = {{"3", 2}, {"4", 7}, {"5", 25}, {"6", 92}};
    fixtures["class_representatives_m4"] = {"1234", "2413", "2143",
                                            "1324", "1423", "1342", "1243"};
    fixtures["constants"] = {{"C_approx", "1.276"}, {"c_approx", "1.051"}};
    json eq9 = json::array();
    for (int m : {4, 5, 6})
        eq9.push_back({{"m", m},
                       {"d_tau_2", m},
                       {"d_upsilon_2", binomial(2 * m - 3, m - 2).get_str()},
                       {"d_upsilon_3",
                        Int(binomial(2 * m - 3, m - 2) * binomial(3 * m - 4, m - 2)).get_str()}});
    fixtures["eq9_closed_forms"] = std::move(eq9);
    fixtures["anomaly_pair"] = {{"sigma", "23567184"}, {"tau", "34671285"}};
    fixtures["delta_sizes"] = {{"5", 5}, {"6", 8}, {"7", 11}, {"8", 15}};
    fixtures["nonoverlap_ratio_lower_bound"] = "0.364";
    fixtures["fig1_linear_extension"] = {{"pattern", "14253"},
                                         {"tuple", {1, 3, 7}},
                                         {"assignment", {1, 6, 2, 8, 3, 11, 4, 9, 5, 10, 7}}};
    fixtures["monotone_omega_signs_m3"] = {1, -1, 0, 1, -1, 0, 1, -1};
    return fixtures;
}

Pattern parse_pattern_or_exit(const std::string& text) {
    return Pattern(text);  // invalid_input_error handled by main
}

int cmd_avoiders(const RunConfig& cfg, const std::string& pattern_text,
                 const std::string& method) {
    const Pattern sigma = parse_pattern_or_exit(pattern_text);
    const bool want_cluster = method == "cluster" || method == "both";
    const bool want_brute = method == "brute" || method == "both";

    std::optional<std::vector<Int>> cluster_alpha;
    if (want_cluster) {
        ClusterConfig ccfg;
        ccfg.linext.max_elements = std::max(26, cfg.max_n);
        ccfg.threads = cfg.threads;
        cluster_alpha = avoider_counts(sigma, cfg.max_n, ccfg);
    }

    std::vector<std::optional<Int>> brute_alpha(static_cast<size_t>(cfg.max_n) + 1);
    if (want_brute) {
        BruteForceConfig bcfg;
        bcfg.guard = cfg.brute_guard;
        bcfg.threads = cfg.threads;
        if (method == "brute" && cfg.max_n > cfg.brute_guard)
            throw resource_limit_error("brute method needs max-n <= guard (" +
                                       std::to_string(cfg.brute_guard) + ")");
        for (int n = 0; n <= std::min(cfg.max_n, cfg.brute_guard); ++n)
            brute_alpha[static_cast<size_t>(n)] = count_avoiders_bruteforce(sigma, n, bcfg);
    }

    bool all_match = true;
    if (cfg.format == "csv") {
        if (method == "both")
            std::cout << "n,alpha_cluster,alpha_brute,match\n";
        else
            std::cout << "n,alpha_n\n";
        for (int n = 0; n <= cfg.max_n; ++n) {
            const auto& b = brute_alpha[static_cast<size_t>(n)];
            if (method == "both") {
                std::cout << n << "," << (*cluster_alpha)[static_cast<size_t>(n)].get_str() << ",";
                if (b) {
                    const bool match = *b == (*cluster_alpha)[static_cast<size_t>(n)];
                    all_match = all_match && match;
                    std::cout << b->get_str() << "," << (match ? "true" : "false");
                } else {
                    std::cout << ",";
                }
                std::cout << "\n";
            } else if (want_cluster) {
                std::cout << n << "," << (*cluster_alpha)[static_cast<size_t>(n)].get_str() << "\n";
            } else if (b) {
                std::cout << n << "," << b->get_str() << "\n";
            }
        }
    } else {
        json rows = json::array();
        json series = json::array();
        for (int n = 0; n <= cfg.max_n; ++n) {
            json row{{"n", n}};
            if (want_cluster) {
                const std::string a = (*cluster_alpha)[static_cast<size_t>(n)].get_str();
                row["alpha"] = a;
                series.push_back(a);
            }
            const auto& b = brute_alpha[static_cast<size_t>(n)];
            if (b) {
                if (method == "both") {
                    const bool match = *b == (*cluster_alpha)[static_cast<size_t>(n)];
                    all_match = all_match && match;
                    row["alpha_brute"] = b->get_str();
                    row["match"] = match;
                } else {
                    row["alpha"] = b->get_str();
                    series.push_back(b->get_str());
                }
            }
            rows.push_back(std::move(row));
        }
        json out{{"pattern", sigma.str()}, {"method", method}, {"rows", std::move(rows)}};
        out["series"] = std::move(series);
        std::cout << out.dump(2) << "\n";
    }
    return all_match ? 0 : kExitVerificationFailure;
}

int cmd_clusters(const RunConfig& cfg, const std::string& pattern_text, int max_k) {
    const Pattern sigma = parse_pattern_or_exit(pattern_text);
    ClusterConfig ccfg;
    ccfg.linext.max_elements = std::max(26, cfg.max_n);
    ccfg.threads = cfg.threads;
    ClusterEngine engine(sigma, ccfg);

    struct Row {
        int n, k;
        Int r;
    };
    std::vector<Row> rows;
    for (int n = sigma.length(); n <= cfg.max_n; ++n)
        for (int k = 1; k <= max_k; ++k) {
            if (n < engine.min_cluster_length(k) || n > engine.max_cluster_length(k))
                continue;
            const Int& r = engine.cluster_number(n, k);
            if (r != 0) rows.push_back(Row{n, k, r});
        }

    if (cfg.format == "csv") {
        std::cout << "pattern,n,k,r_nk\n";
        for (const Row& row : rows)
            std::cout << sigma.str() << "," << row.n << "," << row.k << ","
                      << row.r.get_str() << "\n";
    } else {
        json jrows = json::array();
        for (const Row& row : rows)
            jrows.push_back({{"n", row.n}, {"k", row.k}, {"r", row.r.get_str()}});
        json out{{"pattern", sigma.str()}, {"rows", std::move(jrows)}};
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

int cmd_growth(const RunConfig& cfg, const std::string& pattern_text, bool heuristic) {
    const Pattern sigma = parse_pattern_or_exit(pattern_text);
    BracketOptions opts;
    opts.depth = cfg.depth;
    opts.tol = parse_rational(cfg.tol);
    opts.mode = heuristic ? BracketMode::heuristic : BracketMode::certified;
    opts.threads = cfg.threads;
    const GrowthBracket bracket = bracket_growth_rate(sigma, opts);
    std::cout << to_json(bracket).dump(2) << "\n";
    return 0;
}

int cmd_classify(const RunConfig& cfg, int length, int max_n) {
    const EquivClassReport report = classify(length, max_n, cfg.threads);
    std::cout << to_json(report).dump(2) << "\n";
    return 0;
}

int cmd_census(const RunConfig& cfg, int length) {
    ClusterConfig ccfg;
    ccfg.threads = cfg.threads;
    const CensusReport report = census_nonoverlapping(length, ccfg);
    std::cout << to_json(report).dump(2) << "\n";
    return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite, int length) {
    VerificationReport report{.suite = suite};
    if (suite == "table1") {
        report = verify_table1(cfg.threads);
    } else if (suite == "theorems") {
        BracketOptions opts;
        opts.threads = cfg.threads;
        report = verify_theorem_orderings(length, opts);
    } else if (suite == "inequalities") {
        report = verify_inequality_suite(length, cfg.threads);
    } else if (suite == "derivative") {
        BracketOptions opts;
        opts.threads = cfg.threads;
        report = verify_derivative_suite(length, opts);
    } else if (suite == "anomaly-pair") {
        ClusterConfig ccfg;
        ccfg.threads = cfg.threads;
        report = verify_d_anomaly_pair(ccfg);
    } else {
        throw invalid_input_error("unknown suite: " + suite);
    }
    for (const CheckLine& line : report.lines)
        std::cerr << (line.passed ? "[pass] " : "[FAIL] ") << line.name
                  << (line.detail.empty() ? "" : " (" + line.detail + ")") << "\n";
    std::cout << to_json(report).dump(2) << "\n";
    return report.passed ? 0 : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cluster-method toolkit for consecutive permutation patterns"};
    app.require_subcommand(0, 1);
    app.fallthrough();

    RunConfig cfg;
    bool dump_seed_tables = false;
    app.add_option("--threads", cfg.threads, "worker threads")
        ->envname("CPK_THREADS");
    app.add_option("--format", cfg.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--brute-guard", cfg.brute_guard, "exhaustive enumeration cap");
    app.add_flag("--seed-tables", dump_seed_tables,
                 "dump the reference value fixtures as JSON and exit");

    std::string pattern_text, method = "cluster", suite = "table1";
    int length = 4, classify_max_n = 0, max_k = 3;
    bool heuristic = false, certified = false;

    CLI::App* avoiders = app.add_subcommand("avoiders", "avoider counts alpha_n");
    avoiders->add_option("pattern", pattern_text)->required();
    avoiders->add_option("--max-n", cfg.max_n);
    avoiders->add_option("--method", method)
        ->check(CLI::IsMember({"cluster", "brute", "both"}));

    CLI::App* clusters = app.add_subcommand("clusters", "cluster numbers r_nk");
    clusters->add_option("pattern", pattern_text)->required();
    clusters->add_option("--max-n", cfg.max_n);
    clusters->add_option("--max-k", max_k);

    CLI::App* growth = app.add_subcommand("growth", "growth rate bracket for rho^-1");
    growth->add_option("pattern", pattern_text)->required();
    growth->add_option("--k", cfg.depth);
    growth->add_option("--tol", cfg.tol);
    growth->add_flag("--certified", certified, "certified mode (default)");
    growth->add_flag("--heuristic", heuristic, "plain bisection on one truncation");

    CLI::App* classify_cmd = app.add_subcommand("classify", "c-Wilf equivalence classes");
    classify_cmd->add_option("--length", length)->required();
    classify_cmd->add_option("--max-n", classify_max_n);

    CLI::App* census = app.add_subcommand("census", "non-overlapping pattern census");
    census->add_option("--length", length)->required();

    CLI::App* verify = app.add_subcommand("verify", "verification suites");
    verify->add_option("--suite", suite)
        ->required()
        ->check(CLI::IsMember(
            {"table1", "theorems", "inequalities", "derivative", "anomaly-pair"}));
    verify->add_option("--length", length);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (dump_seed_tables) {
            std::cout << seed_tables().dump(2) << "\n";
            return 0;
        }
        if (avoiders->parsed()) return cmd_avoiders(cfg, pattern_text, method);
        if (clusters->parsed()) return cmd_clusters(cfg, pattern_text, max_k);
        if (growth->parsed()) return cmd_growth(cfg, pattern_text, heuristic && !certified);
        if (classify_cmd->parsed()) return cmd_classify(cfg, length, classify_max_n);
        if (census->parsed()) return cmd_census(cfg, length);
        if (verify->parsed()) return cmd_verify(cfg, suite, length);
        std::cerr << app.help();
        return kExitUsage;
    } catch (const resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResourceLimit;
    } catch (const invalid_input_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
