// depthlab: tree-depth, tree-width, separators and expansion of graphs,
// plus seeded random-graph experiments. See README.md for the file formats.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "depthlab/census.hpp"
#include "depthlab/elimination.hpp"
#include "depthlab/exact.hpp"
#include "depthlab/experiments.hpp"
#include "depthlab/graph.hpp"
#include "depthlab/random.hpp"
#include "depthlab/separators.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

std::string join(const std::vector<int>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(xs[i]);
    }
    return s;
}

struct GenOptions {
    std::string model;
    int n = 0;
    double p = -1.0;
    double c = -1.0;
    long long m = -1;
    int d = -1;
    int k = 0;
    std::uint64_t seed = 0;
    std::uint64_t trial = 0;
    std::string out;
};

int run_gen(const GenOptions& opt) {
    depthlab::RandomSeed seed{opt.seed, opt.trial};
    depthlab::Graph g;
    if (opt.model == "gnp") {
        double p = opt.p;
        if (p < 0 && opt.c >= 0) p = depthlab::gnp_probability_from_c(opt.n, opt.c);
        if (p < 0) throw std::invalid_argument("gnp needs --p or --c");
        g = depthlab::sample_gnp(opt.n, p, seed);
    } else if (opt.model == "gnm") {
        if (opt.m < 0) throw std::invalid_argument("gnm needs --m");
        g = depthlab::sample_gnm(opt.n, opt.m, seed);
    } else if (opt.model == "regular") {
        if (opt.d < 0) throw std::invalid_argument("regular needs --d");
        g = depthlab::sample_regular(opt.n, opt.d, seed);
    } else if (opt.model == "tree") {
        if (opt.k < 1) throw std::invalid_argument("tree needs --k");
        g = depthlab::sample_labeled_tree(opt.k, seed);
    } else {
        throw std::invalid_argument("unknown model: " + opt.model);
    }
    write_text(opt.out, depthlab::format_edge_list(g));
    return kExitOk;
}

struct SolveOptions {
    std::string param = "td";
    std::string mode = "exact";
    std::string graph_file;
    std::string witness;
    int td_limit = depthlab::kDefaultTreedepthComponentLimit;
    int tw_limit = depthlab::kDefaultTreewidthLimit;
    int path_limit = depthlab::kDefaultPathSearchLimit;
    int enum_limit = depthlab::kDefaultSubsetEnumLimit;
};

int run_solve(const SolveOptions& opt) {
    depthlab::Graph g = depthlab::load_edge_list(opt.graph_file);
    if (opt.param == "td" && opt.mode == "exact") {
        auto result = depthlab::treedepth_exact(g, opt.td_limit);
        std::cout << "value=" << result.value << "\nmethod=exact\n";
        if (!opt.witness.empty()) {
            depthlab::save_forest(result.witness, opt.witness);
            std::cout << "witness=" << opt.witness << "\n";
        }
    } else if (opt.param == "td" && opt.mode == "bounds") {
        int lower = depthlab::td_lower_bound_path(g, opt.path_limit);
        auto upper_struct = depthlab::build_general_upper(g);
        auto upper_greedy = depthlab::greedy_heuristic(g);
        int hs = depthlab::height(upper_struct);
        int hg = depthlab::height(upper_greedy);
        std::cout << "lower=" << lower << "\nupper=" << std::min(hs, hg)
                  << "\nupper_struct=" << hs << "\nupper_greedy=" << hg << "\nmethod=bounds\n";
        if (!opt.witness.empty()) {
            depthlab::save_forest(hs <= hg ? upper_struct : upper_greedy, opt.witness);
            std::cout << "witness=" << opt.witness << "\n";
        }
    } else if (opt.param == "tw" && opt.mode == "exact") {
        auto result = depthlab::treewidth_exact(g, opt.tw_limit);
        std::cout << "value=" << result.value << "\nmethod=exact\n";
        if (!opt.witness.empty()) {
            std::ofstream out(opt.witness);
            if (!out) throw std::runtime_error("cannot write " + opt.witness);
            out << join(result.ordering) << "\n";
            std::cout << "witness=" << opt.witness << "\n";
        }
    } else if (opt.param == "tw" && opt.mode == "bounds") {
        // tw <= td - 1, so any elimination forest height gives an upper bound.
        int upper = depthlab::height(depthlab::greedy_heuristic(g)) - 1;
        int lower = 0;
        bool connected = depthlab::connected_components(g).size() == 1;
        if (connected && g.order() >= 2 && g.order() <= opt.enum_limit) {
            auto alpha = depthlab::vertex_expansion_exact(g, opt.enum_limit);
            lower = depthlab::tw_lower_from_expansion(alpha.num, alpha.den, g.order());
        }
        std::cout << "lower=" << lower << "\nupper=" << upper << "\nmethod=bounds\n";
    } else {
        throw std::invalid_argument("solve: --param td|tw with --mode exact|bounds");
    }
    return kExitOk;
}

int run_census(const std::string& graph_file, const std::string& out, std::uint64_t seed,
               double c) {
    depthlab::Graph g = depthlab::load_edge_list(graph_file);
    auto census = depthlab::classify(g);
    std::vector<depthlab::CensusRow> rows;
    for (const auto& [key, count] : census.histogram)
        rows.push_back({seed, g.order(), c, key.first, key.second, count});
    write_text(out, depthlab::census_csv(rows));
    return kExitOk;
}

int run_expand(const std::string& graph_file, int enum_limit, double tol) {
    depthlab::Graph g = depthlab::load_edge_list(graph_file);
    auto phi = depthlab::cheeger_exact(g, enum_limit);
    auto alpha = depthlab::vertex_expansion_exact(g, enum_limit);
    std::cout << "phi=" << phi.value << "\nphi_cut=" << phi.num << "\nphi_vol=" << phi.den
              << "\nphi_witness=" << join(phi.witness) << "\n";
    std::cout << "alpha=" << alpha.value << "\nalpha_num=" << alpha.num
              << "\nalpha_den=" << alpha.den << "\nalpha_witness=" << join(alpha.witness) << "\n";
    std::cout << "tw_lower_expansion="
              << depthlab::tw_lower_from_expansion(alpha.num, alpha.den, g.order()) << "\n";

    int d = g.order() > 0 ? g.degree(0) : 0;
    bool regular = true;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != d) regular = false;
    if (regular && g.order() >= 2) {
        auto spectral = depthlab::lambda2_estimate(g, tol);
        std::cout << "lambda2=" << spectral.lambda2
                  << "\nconductance_bound=" << spectral.conductance_bound
                  << "\nlambda2_residual=" << spectral.residual
                  << "\nlambda2_iterations=" << spectral.iterations << "\n";
    }
    return kExitOk;
}

int run_separate(const std::string& graph_file, int k, int limit) {
    depthlab::Graph g = depthlab::load_edge_list(graph_file);
    auto part = depthlab::find_balanced_kpartition(g, k, limit);
    std::cout << "k=" << k << "\n";
    if (part) {
        std::cout << "found=true\n";
        std::cout << "a=" << join(part->a) << "\n";
        std::cout << "s=" << join(part->s) << "\n";
        std::cout << "b=" << join(part->b) << "\n";
    } else {
        std::cout << "found=false\ncertified=absent\n";
        if (k <= g.order() - 4) std::cout << "implies=tw>" << k << "\n";
    }
    return kExitOk;
}

int run_experiment_cmd(const std::string& config_file) {
    auto cfg = depthlab::load_config(config_file);
    auto output = depthlab::run_experiment(cfg);
    if (cfg.regime == depthlab::Regime::TreeStats) {
        write_text(cfg.out, depthlab::tree_stats_csv(output.tree_rows));
    } else {
        write_text(cfg.out, depthlab::records_csv(output.records));
        if (!cfg.census_out.empty())
            write_text(cfg.census_out, depthlab::census_csv(output.census_rows));
    }
    double total_ms = 0;
    for (const auto& r : output.records) total_ms += r.wall_ms;
    std::cerr << "experiment: " << output.records.size() << " records, "
              << output.census_rows.size() << " census rows, " << output.tree_rows.size()
              << " tree rows, " << total_ms << " ms total trial time\n";
    if (cfg.regime == depthlab::Regime::SparseCrit) {
        // Diameter concentration summary for the critical regime: fraction of
        // trials with diam(largest) / n^(1/3) inside [1/A, A].
        int inside = 0, total = 0;
        for (const auto& r : output.records) {
            if (!r.diam_largest) continue;
            ++total;
            double ratio = *r.diam_largest / std::cbrt(static_cast<double>(r.n));
            if (ratio >= 1.0 / cfg.diam_window_a && ratio <= cfg.diam_window_a) ++inside;
        }
        if (total > 0)
            std::cerr << "diameter window [1/" << cfg.diam_window_a << ", " << cfg.diam_window_a
                      << "]: " << inside << "/" << total << " trials inside\n";
    }
    return kExitOk;
}

int run_verify(std::uint64_t seed, int count, const std::string& out_dir) {
    depthlab::VerifyConfig cfg;
    cfg.seed = seed;
    cfg.graph_count = count;
    auto report = depthlab::verify_suite(cfg);
    std::cout << report.summary();
    if (!report.passed()) {
        int index = 0;
        for (const auto& v : report.violations) {
            if (v.graph.empty()) continue;
            std::filesystem::path dir = out_dir.empty() ? "." : out_dir;
            std::filesystem::create_directories(dir);
            auto path = dir / ("counterexample_" + std::to_string(index++) + ".txt");
            std::ofstream out(path);
            out << v.graph;
            std::cout << "counterexample=" << path.string() << " (" << v.check << ")\n";
        }
        return kExitViolation;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tree-depth / tree-width laboratory"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* cmd_gen = app.add_subcommand("gen", "sample a random graph to an edge-list file");
    cmd_gen->add_option("--model", gen.model, "gnp|gnm|regular|tree")->required();
    cmd_gen->add_option("--n", gen.n, "vertex count");
    cmd_gen->add_option("--p", gen.p, "edge probability (gnp)");
    cmd_gen->add_option("--c", gen.c, "sparse density, p = c/n (gnp)");
    cmd_gen->add_option("--m", gen.m, "edge count (gnm)");
    cmd_gen->add_option("--d", gen.d, "degree (regular)");
    cmd_gen->add_option("--k", gen.k, "tree order (tree)");
    cmd_gen->add_option("--seed", gen.seed, "base seed");
    cmd_gen->add_option("--trial", gen.trial, "trial index");
    cmd_gen->add_option("--out", gen.out, "output file (default stdout)");

    SolveOptions solve;
    auto* cmd_solve = app.add_subcommand("solve", "tree-depth or tree-width of a graph file");
    cmd_solve->add_option("--param", solve.param, "td|tw")->required();
    cmd_solve->add_option("--mode", solve.mode, "exact|bounds (default exact)");
    cmd_solve->add_option("graph", solve.graph_file, "edge-list file")->required();
    cmd_solve->add_option("--witness", solve.witness, "witness output file");
    cmd_solve->add_option("--td-limit", solve.td_limit, "exact tree-depth component limit");
    cmd_solve->add_option("--tw-limit", solve.tw_limit, "exact tree-width order limit");
    cmd_solve->add_option("--path-limit", solve.path_limit, "exact longest-path limit");
    cmd_solve->add_option("--enum-limit", solve.enum_limit, "subset enumeration limit");

    std::string census_graph, census_out;
    std::uint64_t census_seed = 0;
    double census_c = 0.0;
    auto* cmd_census = app.add_subcommand("census", "component census of a graph file");
    cmd_census->add_option("graph", census_graph, "edge-list file")->required();
    cmd_census->add_option("--out", census_out, "output CSV (default stdout)");
    cmd_census->add_option("--seed", census_seed, "seed column stamp");
    cmd_census->add_option("--c", census_c, "density column stamp");

    std::string expand_graph;
    int expand_limit = depthlab::kDefaultSubsetEnumLimit;
    double expand_tol = 1e-9;
    auto* cmd_expand = app.add_subcommand("expand", "exact expansion constants of a graph file");
    cmd_expand->add_option("graph", expand_graph, "edge-list file")->required();
    cmd_expand->add_option("--enum-limit", expand_limit, "subset enumeration limit");
    cmd_expand->add_option("--tol", expand_tol, "eigenvalue residual tolerance");

    std::string sep_graph;
    int sep_k = 0;
    int sep_limit = depthlab::kDefaultPartitionSearchLimit;
    auto* cmd_sep = app.add_subcommand("separate", "balanced k-partition or certified absence");
    cmd_sep->add_option("graph", sep_graph, "edge-list file")->required();
    cmd_sep->add_option("--k", sep_k, "partition parameter (|S| = k+1)")->required();
    cmd_sep->add_option("--limit", sep_limit, "exhaustive search limit");

    std::string experiment_config;
    auto* cmd_exp = app.add_subcommand("experiment", "run a seeded experiment from a config file");
    cmd_exp->add_option("config", experiment_config, "key=value config file")->required();

    std::uint64_t verify_seed = 0;
    int verify_count = 200;
    std::string verify_dir;
    auto* cmd_verify = app.add_subcommand("verify", "run the invariant battery");
    cmd_verify->add_option("--seed", verify_seed, "base seed");
    cmd_verify->add_option("--count", verify_count, "random graphs per battery");
    cmd_verify->add_option("--out-dir", verify_dir, "directory for counterexample files");

    try {
        app.parse(argc, argv);
        if (cmd_gen->parsed()) return run_gen(gen);
        if (cmd_solve->parsed()) return run_solve(solve);
        if (cmd_census->parsed()) return run_census(census_graph, census_out, census_seed, census_c);
        if (cmd_expand->parsed()) return run_expand(expand_graph, expand_limit, expand_tol);
        if (cmd_sep->parsed()) return run_separate(sep_graph, sep_k, sep_limit);
        if (cmd_exp->parsed()) return run_experiment_cmd(experiment_config);
        if (cmd_verify->parsed()) return run_verify(verify_seed, verify_count, verify_dir);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
