// Acceptance suite: one line per criterion, exit 1 if any fail.
// Runs against the library's public surface (and the experiment runners the
// CLI wraps), with brute-force oracles where the criterion demands one.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "depthlab/census.hpp"
#include "depthlab/elimination.hpp"
#include "depthlab/exact.hpp"
#include "depthlab/experiments.hpp"
#include "depthlab/graph.hpp"
#include "depthlab/random.hpp"
#include "depthlab/separators.hpp"
#include "oracles.hpp"

using namespace depthlab;

namespace {

int failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s -- %s\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

int floor_log2(int x) {
    int r = 0;
    while (x > 1) {
        x >>= 1;
        ++r;
    }
    return r;
}

double median(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    std::size_t n = xs.size();
    return n % 2 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

void criterion1_figure_exactness() {
    bool ok = treedepth_exact(make_path(15)).value == 4 &&
              treedepth_exact(make_complete(4)).value == 4;
    for (int n = 1; n <= 16; ++n)
        ok = ok && treedepth_exact(make_path(n)).value == floor_log2(n) + 1;
    for (int n = 1; n <= 10; ++n) {
        ok = ok && treedepth_exact(make_complete(n)).value == n;
        ok = ok && treewidth_exact(make_complete(n)).value == n - 1;
    }
    report(1, "figure-1 exactness", ok, "P_15, K_4, all P_n (n<=16), all K_n (n<=10)");
}

void criterion2_sandwich() {
    int tested = 0, violations = 0, attempt = 0;
    while (tested < 200) {
        int n = 4 + attempt % 9;
        double p = 0.1 * (1 + (attempt / 9) % 9);
        Graph g = sample_gnp(n, p, RandomSeed{derive_seed(2024, {2, static_cast<std::uint64_t>(attempt)}), 0});
        ++attempt;
        if (g.size() == 0) continue;  // tw = 0: the upper inequality is vacuous
        ++tested;
        int td = treedepth_exact(g).value;
        int tw = treewidth_exact(g).value;
        if (!(tw <= td && td <= tw * (std::log2(static_cast<double>(n)) + 1.0) + 1e-9))
            ++violations;
    }
    report(2, "sandwich inequality", violations == 0,
           "200 graphs, n<=12, p in {0.1..0.9}: " + std::to_string(violations) + " violations");
}

void criterion3_small_oracle() {
    long long graphs = 0, mismatches = 0;
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : oracle::all_graphs(n)) {
            ++graphs;
            if (treedepth_exact(g).value != oracle::brute_treedepth(g)) ++mismatches;
        }
    report(3, "small-n oracle equivalence", mismatches == 0,
           std::to_string(graphs) + " graphs on <=5 vertices vs forest enumeration");
}

void criterion4_kloks() {
    int counterexamples = 0, absences = 0;
    for (int i = 0; i < 100; ++i) {
        double p = 0.1 * (1 + i % 9);
        Graph g = sample_gnp(10, p, RandomSeed{derive_seed(2024, {4, static_cast<std::uint64_t>(i)}), 0});
        int tw = treewidth_exact(g).value;
        for (int k = 0; k <= 6; ++k) {
            if (!find_balanced_kpartition(g, k).has_value()) {
                ++absences;
                if (tw <= k) ++counterexamples;
            }
        }
    }
    report(4, "kloks contrapositive", counterexamples == 0,
           "100 graphs at n=10: " + std::to_string(absences) + " certified absences, " +
               std::to_string(counterexamples) + " counterexamples");
}

void criterion5_mean_height() {
    const int k = 1000, trials = 2000;
    double total = 0;
    for (int t = 0; t < trials; ++t) {
        Graph tree = sample_labeled_tree(
            k, RandomSeed{derive_seed(2024, {5, static_cast<std::uint64_t>(t)}), 0});
        total += tree_height_and_diameter(tree, 0).height;
    }
    double mean = total / trials;
    double target = std::sqrt(2.0 * M_PI * k);
    double rel = std::abs(mean - target) / target;
    char buf[128];
    std::snprintf(buf, sizeof buf, "mean H = %.2f vs sqrt(2 pi k) = %.2f (rel %.3f)", mean,
                  target, rel);
    report(5, "mean random-tree height", rel <= 0.15, buf);
}

void criterion6_tree_counts() {
    const int n = 30000, seeds = 20;
    const double c = 0.5;
    std::vector<double> sums(7, 0.0);
    for (int t = 0; t < seeds; ++t) {
        Graph g = sample_gnp(n, c / n,
                             RandomSeed{derive_seed(2024, {6, static_cast<std::uint64_t>(t)}), 0});
        auto census = classify(g);
        for (int k = 1; k <= 6; ++k) {
            auto it = census.tree_counts.find(k);
            sums[k] += it == census.tree_counts.end() ? 0.0 : static_cast<double>(it->second);
        }
    }
    bool ok = true;
    double worst = 0;
    for (int k = 1; k <= 6; ++k) {
        double mk = expected_tree_count(n, c, k);
        if (mk < 25) continue;
        double rel = std::abs(sums[k] / seeds - mk) / mk;
        worst = std::max(worst, rel);
        if (rel > 0.10) ok = false;
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "20 seeds of G(30000, c=0.5), k<=6: worst |Xbar-M|/M = %.4f",
                  worst);
    report(6, "tree-count law", ok, buf);
}

// Criteria 7 and 8 share the 50 critical-regime samples.
void criteria7_8_critical() {
    const int n = 100000, seeds = 50;
    int excess_ok = 0, window_ok = 0;
    const double scale = std::cbrt(static_cast<double>(n));
    for (int t = 0; t < seeds; ++t) {
        Graph g = sample_gnp(n, 1.0 / n,
                             RandomSeed{derive_seed(2024, {7, static_cast<std::uint64_t>(t)}), 0});
        auto comps = connected_components(g);
        const ComponentSummary* largest = &comps.front();
        int ell_m = -1;
        for (const auto& c : comps) {
            ell_m = std::max(ell_m, c.excess);
            if (c.order > largest->order) largest = &c;
        }
        if (ell_m <= 10) ++excess_ok;
        double ratio = diameter(g, largest->vertices) / scale;
        if (ratio >= 0.1 && ratio <= 10.0) ++window_ok;
    }
    report(7, "critical max excess", excess_ok * 100 >= seeds * 95,
           std::to_string(excess_ok) + "/50 trials with ell_m <= 10 (need >= 95%)");
    report(8, "critical diameter window", window_ok * 100 >= seeds * 90,
           std::to_string(window_ok) + "/50 trials with diam/n^(1/3) in [0.1, 10] (need >= 90%)");
}

void criterion9_dense_deficiency() {
    ExperimentConfig cfg;
    cfg.regime = Regime::Dense;
    cfg.n_values = {12, 16, 20};
    cfg.p = 0.5;
    cfg.trials = 30;
    cfg.seed = 2024;
    auto out = run_dense(cfg);
    bool ok = true;
    std::string detail;
    double prev = -1;
    for (std::size_t i = 0; i < cfg.n_values.size(); ++i) {
        int n = cfg.n_values[i];
        std::vector<double> defs;
        for (const auto& rec : out.records)
            if (rec.n == n) defs.push_back(static_cast<double>(*rec.deficiency));
        double med = median(defs);
        if (med < prev) ok = false;
        if (med > 3.0 * std::sqrt(2.0 * n)) ok = false;
        prev = med;
        char buf[48];
        std::snprintf(buf, sizeof buf, "n=%d med=%.1f cap=%.1f; ", n, med,
                      3.0 * std::sqrt(2.0 * n));
        detail += buf;
    }
    report(9, "dense deficiency envelope", ok, detail);
}

void criterion10_supercritical_trend() {
    ExperimentConfig cfg;
    cfg.regime = Regime::SparseSuper;
    cfg.n_values = {10, 20};
    cfg.c = 2.0;
    cfg.trials = 50;
    cfg.seed = 2024;
    auto out = run_sparse(cfg);
    std::vector<double> td10, td20;
    for (const auto& rec : out.records) {
        if (!rec.td_exact) continue;
        (rec.n == 10 ? td10 : td20).push_back(static_cast<double>(*rec.td_exact));
    }
    double m10 = median(td10), m20 = median(td20);
    char buf[96];
    std::snprintf(buf, sizeof buf, "median td(n=20) = %.1f vs 1.5 * median td(n=10) = %.2f", m20,
                  1.5 * m10);
    report(10, "supercritical trend proxy", m20 >= 1.5 * m10, buf);
}

void criterion11_expansion_bounds() {
    ExperimentConfig cfg;
    cfg.regime = Regime::Regular;
    cfg.n_values = {14};
    cfg.d = 3;
    cfg.trials = 50;
    cfg.seed = 2024;
    auto out = run_regular(cfg);
    int bad_tw = 0, bad_spectral = 0;
    for (const auto& rec : out.records) {
        if (!(*rec.tw_lower_expansion <= *rec.tw_exact)) ++bad_tw;
        if (!((1.0 - *rec.lambda2 / 3.0) / 2.0 <= *rec.phi + 1e-6)) ++bad_spectral;
    }
    report(11, "expansion bounds", bad_tw == 0 && bad_spectral == 0,
           "50 cubic graphs at n=14: " + std::to_string(bad_tw) + " tw-bound / " +
               std::to_string(bad_spectral) + " spectral violations");
}

void criterion12_determinism() {
    ExperimentConfig cfg;
    cfg.regime = Regime::SparseCrit;
    cfg.n_values = {100, 200};
    cfg.c = 1.0;
    cfg.trials = 3;
    cfg.seed = 31337;
    cfg.workers = 2;
    auto first = run_experiment(cfg);
    cfg.workers = 1;
    auto second = run_experiment(cfg);
    bool ok = records_csv(first.records) == records_csv(second.records) &&
              census_csv(first.census_rows) == census_csv(second.census_rows);

    ExperimentConfig dense;
    dense.regime = Regime::Dense;
    dense.n_values = {10};
    dense.p = 0.5;
    dense.trials = 4;
    dense.seed = 31337;
    ok = ok && records_csv(run_dense(dense).records) == records_csv(run_dense(dense).records);
    report(12, "experiment determinism", ok, "byte-identical CSV across reruns and worker counts");
}

}  // namespace

int main() {
    criterion1_figure_exactness();
    criterion2_sandwich();
    criterion3_small_oracle();
    criterion4_kloks();
    criterion5_mean_height();
    criterion6_tree_counts();
    criteria7_8_critical();
    criterion9_dense_deficiency();
    criterion10_supercritical_trend();
    criterion11_expansion_bounds();
    criterion12_determinism();
    if (failures) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all 12 acceptance criteria passed\n");
    return 0;
}
