#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "depthlab/exact.hpp"
#include "depthlab/graph.hpp"
#include "depthlab/separators.hpp"

namespace depthlab {

enum class Regime { Dense, SparseSub, SparseCrit, SparseSuper, Regular, TreeStats };

std::string regime_name(Regime r);
Regime regime_from_name(std::string_view name);

/// Experiment configuration, loadable from a flat key=value text file.
/// Unknown keys are rejected.
struct ExperimentConfig {
    Regime regime = Regime::Dense;
    std::vector<int> n_values;  // must be sorted ascending
    double p = -1.0;            // dense
    double c = -1.0;            // sparse regimes
    int d = 0;                  // regular
    int tree_order = 0;         // tree_stats: sampled tree order k
    int trials = 1;
    std::uint64_t seed = 0;
    std::string out;
    std::string census_out;     // optional: per-(k,ell) census rows, sparse regimes
    int workers = 0;            // 0 = hardware concurrency
    int td_limit = kDefaultTreedepthComponentLimit;
    int tw_limit = kDefaultTreewidthLimit;
    int enum_limit = kDefaultSubsetEnumLimit;
    int path_limit = kDefaultPathSearchLimit;
    double diam_window_a = 10.0;   // acceptance window constant for the critical regime
    double dense_f_margin = 0.1;   // dense tail evaluated at f = f_threshold * (1 + margin)
    bool require_connected = true;  // regular regime: resample until connected

    void validate() const;
};

ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// One trial's measurements. Fields not applicable to the regime stay unset
/// and serialize as empty CSV cells. Wall time is kept in memory only so
/// that CSV output is byte-identical across re-runs of the same config.
struct ExperimentRecord {
    Regime regime = Regime::Dense;
    int n = 0;
    double param = 0.0;  // p (dense), c (sparse), d (regular)
    int trial = 0;
    std::uint64_t seed = 0;  // derived per-trial seed word
    long long m = 0;
    int largest_order = 0;  // n_c
    int max_excess = -1;    // ell_m
    std::optional<int> diam_largest;
    std::optional<int> td_exact;
    std::optional<int> deficiency;        // n - td_exact
    std::optional<int> td_exact_largest;  // exact td of the largest component only
    std::optional<int> td_lower;
    std::optional<int> td_upper_struct;
    std::optional<int> td_upper_greedy;
    std::optional<int> tw_exact;
    std::optional<int> tw_lower_expansion;
    std::optional<double> phi;
    std::optional<double> alpha;
    std::optional<double> lambda2;
    std::optional<double> tail_f;
    std::optional<double> tail_value;
    std::optional<double> td_over_loglog;
    std::optional<double> td_over_log;
    std::optional<double> td_over_n;
    double wall_ms = 0.0;  // not serialized
};

struct CensusRow {
    std::uint64_t seed = 0;
    int n = 0;
    double c = 0.0;
    int k = 0;
    int ell = 0;
    long long count = 0;
};

struct TreeStatsRow {
    std::uint64_t seed = 0;
    int k = 0;
    int height = 0;
    int diameter = 0;
};

struct ExperimentOutput {
    std::vector<ExperimentRecord> records;
    std::vector<CensusRow> census_rows;
    std::vector<TreeStatsRow> tree_rows;
};

/// Trials run on a bounded worker pool; output order is (n, trial)
/// regardless of completion order, so results are deterministic.
ExperimentOutput run_experiment(const ExperimentConfig& cfg);
ExperimentOutput run_dense(const ExperimentConfig& cfg);
ExperimentOutput run_sparse(const ExperimentConfig& cfg);
ExperimentOutput run_regular(const ExperimentConfig& cfg);
ExperimentOutput run_tree_stats(const ExperimentConfig& cfg);

// CSV serialization. Every file starts with "# schema=1".
std::string records_csv(const std::vector<ExperimentRecord>& records);
std::string census_csv(const std::vector<CensusRow>& rows);
std::string tree_stats_csv(const std::vector<TreeStatsRow>& rows);

struct VerifyConfig {
    std::uint64_t seed = 0;
    int graph_count = 200;  // sample size for the randomized batteries
};

struct VerifyViolation {
    std::string check;
    std::string detail;
    std::string graph;  // edge-list text of a counterexample, may be empty
};

struct VerifyReport {
    std::vector<std::string> checks;  // one line per check, "ok ..." or "FAIL ..."
    std::vector<VerifyViolation> violations;
    bool passed() const { return violations.empty(); }
    std::string summary() const;
};

/// Invariant battery over randomized and exhaustive small instances:
/// sandwich inequality, vertex-deletion bound, edge monotonicity, component
/// decomposition, balanced-partition contrapositive, constructor validity,
/// witness recompute, path family exactness.
VerifyReport verify_suite(const VerifyConfig& cfg);

}  // namespace depthlab
