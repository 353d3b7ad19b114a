#include "depthlab/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <type_traits>

#include "depthlab/census.hpp"
#include "depthlab/random.hpp"

namespace depthlab {

std::string regime_name(Regime r) {
    switch (r) {
        case Regime::Dense: return "dense";
        case Regime::SparseSub: return "sparse_sub";
        case Regime::SparseCrit: return "sparse_crit";
        case Regime::SparseSuper: return "sparse_super";
        case Regime::Regular: return "regular";
        case Regime::TreeStats: return "tree_stats";
    }
    throw std::logic_error("unreachable");
}

Regime regime_from_name(std::string_view name) {
    for (Regime r : {Regime::Dense, Regime::SparseSub, Regime::SparseCrit, Regime::SparseSuper,
                     Regime::Regular, Regime::TreeStats})
        if (regime_name(r) == name) return r;
    throw std::invalid_argument("unknown regime: " + std::string(name));
}

namespace {

bool is_sparse(Regime r) {
    return r == Regime::SparseSub || r == Regime::SparseCrit || r == Regime::SparseSuper;
}

std::uint64_t tag_hash(std::string_view s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (char ch : s) {
        h ^= static_cast<unsigned char>(ch);
        h *= 1099511628211ULL;
    }
    return h;
}

std::uint64_t trial_seed(const ExperimentConfig& cfg, int n, int trial) {
    return derive_seed(cfg.seed, {tag_hash(regime_name(cfg.regime)),
                                  static_cast<std::uint64_t>(n),
                                  static_cast<std::uint64_t>(trial)});
}

int floor_log2(int x) {
    int r = 0;
    while (x > 1) {
        x >>= 1;
        ++r;
    }
    return r;
}

// Runs count tasks on a bounded pool; task(i) must only touch slot i state.
template <typename Task>
void parallel_tasks(int workers, int count, Task&& task) {
    if (count <= 0) return;
    if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
    workers = std::max(1, std::min(workers, count));
    if (workers == 1) {
        for (int i = 0; i < count; ++i) task(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                try {
                    task(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

const ComponentSummary& largest_component(const std::vector<ComponentSummary>& comps) {
    const ComponentSummary* largest = &comps.front();
    for (const auto& c : comps)
        if (c.order > largest->order) largest = &c;
    return *largest;
}

}  // namespace

void ExperimentConfig::validate() const {
    if (trials < 1) throw std::invalid_argument("config: trials must be at least 1");
    if (workers < 0) throw std::invalid_argument("config: workers must be non-negative");
    if (regime == Regime::TreeStats) {
        if (tree_order < 1) throw std::invalid_argument("config: tree_stats needs k >= 1");
        return;
    }
    if (n_values.empty()) throw std::invalid_argument("config: no n values");
    for (std::size_t i = 0; i < n_values.size(); ++i) {
        if (n_values[i] < 1) throw std::invalid_argument("config: n values must be positive");
        if (i > 0 && n_values[i] <= n_values[i - 1])
            throw std::invalid_argument("config: n values must be sorted ascending");
    }
    switch (regime) {
        case Regime::Dense:
            if (!(p >= 0.0 && p <= 1.0))
                throw std::invalid_argument("config: dense regime needs p in [0,1]");
            if (n_values.back() > td_limit)
                throw std::invalid_argument(
                    "config: dense regime computes exact tree-depth; n exceeds td_limit");
            break;
        case Regime::SparseSub:
        case Regime::SparseCrit:
        case Regime::SparseSuper:
            if (!(c >= 0.0)) throw std::invalid_argument("config: sparse regime needs c >= 0");
            if (c > n_values.front())
                throw std::invalid_argument("config: c exceeds the smallest n (p would exceed 1)");
            break;
        case Regime::Regular:
            if (d < 1) throw std::invalid_argument("config: regular regime needs d >= 1");
            for (int n : n_values) {
                if ((static_cast<long long>(n) * d) % 2 != 0)
                    throw std::invalid_argument("config: n*d must be even");
                if (d >= n) throw std::invalid_argument("config: d must be less than n");
                if (n > enum_limit)
                    throw std::invalid_argument(
                        "config: regular regime enumerates expansion exactly; n exceeds enum_limit");
            }
            break;
        case Regime::TreeStats:
            break;
    }
    if (diam_window_a <= 1.0)
        throw std::invalid_argument("config: diam_window_A must exceed 1");
    if (dense_f_margin < 0.0)
        throw std::invalid_argument("config: dense_f_margin must be non-negative");
}

ExperimentConfig parse_config(std::string_view text) {
    ExperimentConfig cfg;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    auto trim = [](std::string s) {
        auto issp = [](unsigned char ch) { return std::isspace(ch); };
        while (!s.empty() && issp(s.front())) s.erase(s.begin());
        while (!s.empty() && issp(s.back())) s.pop_back();
        return s;
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key=value");
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        try {
            if (key == "regime") {
                cfg.regime = regime_from_name(value);
            } else if (key == "n") {
                cfg.n_values.clear();
                std::istringstream vs(value);
                std::string item;
                while (std::getline(vs, item, ','))
                    cfg.n_values.push_back(std::stoi(trim(item)));
            } else if (key == "p") {
                cfg.p = std::stod(value);
            } else if (key == "c") {
                cfg.c = std::stod(value);
            } else if (key == "d") {
                cfg.d = std::stoi(value);
            } else if (key == "k") {
                cfg.tree_order = std::stoi(value);
            } else if (key == "trials") {
                cfg.trials = std::stoi(value);
            } else if (key == "seed") {
                cfg.seed = std::stoull(value);
            } else if (key == "out") {
                cfg.out = value;
            } else if (key == "census_out") {
                cfg.census_out = value;
            } else if (key == "workers") {
                cfg.workers = std::stoi(value);
            } else if (key == "td_limit") {
                cfg.td_limit = std::stoi(value);
            } else if (key == "tw_limit") {
                cfg.tw_limit = std::stoi(value);
            } else if (key == "enum_limit") {
                cfg.enum_limit = std::stoi(value);
            } else if (key == "path_limit") {
                cfg.path_limit = std::stoi(value);
            } else if (key == "diam_window_A") {
                cfg.diam_window_a = std::stod(value);
            } else if (key == "dense_f_margin") {
                cfg.dense_f_margin = std::stod(value);
            } else if (key == "require_connected") {
                cfg.require_connected = std::stoi(value) != 0;
            } else {
                throw std::invalid_argument("config line " + std::to_string(lineno) +
                                            ": unknown key '" + key + "'");
            }
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception&) {
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": cannot parse value for '" + key + "'");
        }
    }
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

namespace {

// Census rows for one sampled graph, ordered by (k, ell).
void append_census_rows(std::vector<CensusRow>& rows, const ComponentCensus& census,
                        std::uint64_t seed, int n, double c) {
    for (const auto& [key, count] : census.histogram)
        rows.push_back({seed, n, c, key.first, key.second, count});
}

void fill_ratios(ExperimentRecord& rec) {
    int td_best = 0;
    if (rec.td_exact)
        td_best = *rec.td_exact;
    else if (rec.td_upper_struct && rec.td_upper_greedy)
        td_best = std::min(*rec.td_upper_struct, *rec.td_upper_greedy);
    else
        return;
    const double n = rec.n;
    if (n >= 5.0) rec.td_over_loglog = td_best / std::log2(std::log2(n));
    if (n >= 3.0) rec.td_over_log = td_best / std::log2(n);
    rec.td_over_n = td_best / n;
}

}  // namespace

ExperimentOutput run_dense(const ExperimentConfig& cfg) {
    cfg.validate();
    const int points = static_cast<int>(cfg.n_values.size());
    const int count = points * cfg.trials;
    ExperimentOutput out;
    out.records.resize(count);

    parallel_tasks(cfg.workers, count, [&](int idx) {
        const auto start = std::chrono::steady_clock::now();
        const int n = cfg.n_values[idx / cfg.trials];
        const int trial = idx % cfg.trials;
        ExperimentRecord& rec = out.records[idx];
        rec.regime = cfg.regime;
        rec.n = n;
        rec.param = cfg.p;
        rec.trial = trial;
        rec.seed = trial_seed(cfg, n, trial);

        Graph g = sample_gnp(n, cfg.p, RandomSeed{rec.seed, 0});
        rec.m = g.size();
        ComponentCensus census = classify(g);
        rec.largest_order = census.largest_order;
        rec.max_excess = census.max_excess;

        auto td = treedepth_exact(g, cfg.td_limit);
        rec.td_exact = td.value;
        rec.deficiency = n - td.value;
        rec.td_lower = td_lower_bound_path(g, cfg.path_limit);
        rec.td_upper_struct = height(build_general_upper(g));
        rec.td_upper_greedy = height(greedy_heuristic(g));

        if (cfg.p > 0.0) {
            DenseTail threshold_probe = dense_separator_tail(n, cfg.p, 1.0);
            const double f = threshold_probe.f_threshold * (1.0 + cfg.dense_f_margin);
            DenseTail tail = dense_separator_tail(n, cfg.p, f);
            rec.tail_f = f;
            rec.tail_value = tail.value;
        }
        fill_ratios(rec);
        rec.wall_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
    });
    return out;
}

ExperimentOutput run_sparse(const ExperimentConfig& cfg) {
    cfg.validate();
    if (!is_sparse(cfg.regime))
        throw std::invalid_argument("run_sparse: regime must be sparse_sub|sparse_crit|sparse_super");
    const int points = static_cast<int>(cfg.n_values.size());
    const int count = points * cfg.trials;
    ExperimentOutput out;
    out.records.resize(count);
    std::vector<std::vector<CensusRow>> census_per_task(count);

    parallel_tasks(cfg.workers, count, [&](int idx) {
        const auto start = std::chrono::steady_clock::now();
        const int n = cfg.n_values[idx / cfg.trials];
        const int trial = idx % cfg.trials;
        ExperimentRecord& rec = out.records[idx];
        rec.regime = cfg.regime;
        rec.n = n;
        rec.param = cfg.c;
        rec.trial = trial;
        rec.seed = trial_seed(cfg, n, trial);

        Graph g = sample_gnp(n, gnp_probability_from_c(n, cfg.c), RandomSeed{rec.seed, 0});
        rec.m = g.size();
        ComponentCensus census = classify(g);
        rec.largest_order = census.largest_order;
        rec.max_excess = census.max_excess;
        append_census_rows(census_per_task[idx], census, rec.seed, n, cfg.c);

        auto comps = connected_components(g);
        const ComponentSummary& giant = largest_component(comps);
        rec.diam_largest = diameter(g, giant.vertices);

        // Path lower bound: exact search when feasible, otherwise the
        // largest component's diameter (t = d + 1), same formula as
        // td_lower_bound_path without a second all-sources sweep.
        if (n <= cfg.path_limit)
            rec.td_lower = td_lower_bound_path(g, cfg.path_limit);
        else
            rec.td_lower = floor_log2(*rec.diam_largest + 1) + 1;

        rec.td_upper_struct = height(build_general_upper(g));
        rec.td_upper_greedy = height(greedy_heuristic(g));

        if (census.largest_order <= cfg.td_limit) {
            rec.td_exact = treedepth_exact(g, cfg.td_limit).value;
            rec.td_exact_largest = treedepth_exact(g.induced(giant.vertices), cfg.td_limit).value;
        }
        fill_ratios(rec);
        rec.wall_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
    });

    for (auto& rows : census_per_task)
        out.census_rows.insert(out.census_rows.end(), rows.begin(), rows.end());
    return out;
}

ExperimentOutput run_regular(const ExperimentConfig& cfg) {
    cfg.validate();
    if (cfg.regime != Regime::Regular)
        throw std::invalid_argument("run_regular: regime must be regular");
    const int points = static_cast<int>(cfg.n_values.size());
    const int count = points * cfg.trials;
    ExperimentOutput out;
    out.records.resize(count);

    parallel_tasks(cfg.workers, count, [&](int idx) {
        const auto start = std::chrono::steady_clock::now();
        const int n = cfg.n_values[idx / cfg.trials];
        const int trial = idx % cfg.trials;
        ExperimentRecord& rec = out.records[idx];
        rec.regime = cfg.regime;
        rec.n = n;
        rec.param = cfg.d;
        rec.trial = trial;
        rec.seed = trial_seed(cfg, n, trial);

        Graph g = sample_regular(n, cfg.d, RandomSeed{rec.seed, 0});
        bool connected = connected_components(g).size() == 1;
        if (cfg.require_connected) {
            // Exact expansion reports need one component; resample within
            // the trial's own stream until the pairing is connected.
            for (std::uint64_t attempt = 1; !connected; ++attempt) {
                if (attempt > 1000)
                    throw std::runtime_error("run_regular: no connected sample in 1000 attempts");
                g = sample_regular(n, cfg.d, RandomSeed{rec.seed, attempt});
                connected = connected_components(g).size() == 1;
            }
        }
        rec.m = g.size();
        ComponentCensus census = classify(g);
        rec.largest_order = census.largest_order;
        rec.max_excess = census.max_excess;

        if (connected) {
            ExpansionWitness phi = cheeger_exact(g, cfg.enum_limit);
            ExpansionWitness alpha = vertex_expansion_exact(g, cfg.enum_limit);
            SpectralReport spectral = lambda2_estimate(g);
            rec.phi = phi.value;
            rec.alpha = alpha.value;
            rec.lambda2 = spectral.lambda2;
            rec.tw_lower_expansion = tw_lower_from_expansion(alpha.num, alpha.den, n);
        }
        if (n <= cfg.tw_limit) rec.tw_exact = treewidth_exact(g, cfg.tw_limit).value;
        if (census.largest_order <= cfg.td_limit)
            rec.td_exact = treedepth_exact(g, cfg.td_limit).value;
        rec.td_lower = td_lower_bound_path(g, cfg.path_limit);
        rec.td_upper_struct = height(build_general_upper(g));
        rec.td_upper_greedy = height(greedy_heuristic(g));
        fill_ratios(rec);
        rec.wall_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
    });
    return out;
}

ExperimentOutput run_tree_stats(const ExperimentConfig& cfg) {
    cfg.validate();
    if (cfg.regime != Regime::TreeStats)
        throw std::invalid_argument("run_tree_stats: regime must be tree_stats");
    ExperimentOutput out;
    out.tree_rows.resize(cfg.trials);

    parallel_tasks(cfg.workers, cfg.trials, [&](int trial) {
        const std::uint64_t seed = trial_seed(cfg, cfg.tree_order, trial);
        Graph tree = sample_labeled_tree(cfg.tree_order, RandomSeed{seed, 0});
        // Root at the lowest label; by exchangeability this matches a
        // uniformly random root in distribution.
        TreeStats stats = tree_height_and_diameter(tree, 0);
        out.tree_rows[trial] = {seed, cfg.tree_order, stats.height, stats.diameter};
    });
    return out;
}

ExperimentOutput run_experiment(const ExperimentConfig& cfg) {
    switch (cfg.regime) {
        case Regime::Dense: return run_dense(cfg);
        case Regime::SparseSub:
        case Regime::SparseCrit:
        case Regime::SparseSuper: return run_sparse(cfg);
        case Regime::Regular: return run_regular(cfg);
        case Regime::TreeStats: return run_tree_stats(cfg);
    }
    throw std::logic_error("unreachable");
}

namespace {

std::string fmt_double(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

template <typename T>
std::string cell(const std::optional<T>& value) {
    if (!value) return "";
    if constexpr (std::is_same_v<T, double>)
        return fmt_double(*value);
    else
        return std::to_string(*value);
}

}  // namespace

std::string records_csv(const std::vector<ExperimentRecord>& records) {
    std::ostringstream out;
    out << "# schema=1\n";
    out << "regime,n,param,trial,seed,m,n_c,ell_m,diam_largest,td_exact,deficiency,"
           "td_exact_largest,td_lower,td_upper_struct,td_upper_greedy,tw_exact,"
           "tw_lower_expansion,phi,alpha,lambda2,tail_f,tail_value,"
           "td_over_loglog,td_over_log,td_over_n\n";
    for (const auto& r : records) {
        out << regime_name(r.regime) << ',' << r.n << ',' << fmt_double(r.param) << ','
            << r.trial << ',' << r.seed << ',' << r.m << ',' << r.largest_order << ','
            << r.max_excess << ',' << cell(r.diam_largest) << ',' << cell(r.td_exact) << ','
            << cell(r.deficiency) << ',' << cell(r.td_exact_largest) << ',' << cell(r.td_lower)
            << ',' << cell(r.td_upper_struct) << ',' << cell(r.td_upper_greedy) << ','
            << cell(r.tw_exact) << ',' << cell(r.tw_lower_expansion) << ',' << cell(r.phi) << ','
            << cell(r.alpha) << ',' << cell(r.lambda2) << ',' << cell(r.tail_f) << ','
            << cell(r.tail_value) << ',' << cell(r.td_over_loglog) << ',' << cell(r.td_over_log)
            << ',' << cell(r.td_over_n) << '\n';
    }
    return out.str();
}

std::string census_csv(const std::vector<CensusRow>& rows) {
    std::ostringstream out;
    out << "# schema=1\n";
    out << "seed,n,c,k,ell,count\n";
    for (const auto& r : rows)
        out << r.seed << ',' << r.n << ',' << fmt_double(r.c) << ',' << r.k << ',' << r.ell << ','
            << r.count << '\n';
    return out.str();
}

std::string tree_stats_csv(const std::vector<TreeStatsRow>& rows) {
    std::ostringstream out;
    out << "# schema=1\n";
    out << "seed,k,H,D\n";
    for (const auto& r : rows)
        out << r.seed << ',' << r.k << ',' << r.height << ',' << r.diameter << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------
// verify subcommand: the invariant battery.

namespace {

struct VerifyRunner {
    const VerifyConfig& cfg;
    VerifyReport report;

    void pass(const std::string& name, const std::string& detail) {
        report.checks.push_back("ok   " + name + " (" + detail + ")");
    }
    void fail(const std::string& name, const std::string& detail, const Graph* g) {
        report.checks.push_back("FAIL " + name + " (" + detail + ")");
        report.violations.push_back({name, detail, g ? format_edge_list(*g) : ""});
    }

    Graph random_graph(std::uint64_t tag, int index, int n, double p) {
        std::uint64_t s = derive_seed(cfg.seed, {tag, static_cast<std::uint64_t>(index)});
        return sample_gnp(n, p, RandomSeed{s, 0});
    }

    void check_paths() {
        for (int n = 1; n <= 16; ++n) {
            int expected = floor_log2(n) + 1;
            int got = treedepth_exact(make_path(n)).value;
            if (got != expected) {
                Graph p = make_path(n);
                fail("paths", "td(P_" + std::to_string(n) + ") = " + std::to_string(got) +
                                  ", expected " + std::to_string(expected),
                     &p);
                return;
            }
        }
        pass("paths", "td(P_n) = floor(log2 n)+1 for n <= 16");
    }

    void check_sandwich() {
        int tested = 0, attempt = 0;
        while (tested < cfg.graph_count) {
            int n = 4 + attempt % 9;                       // 4..12
            double p = 0.1 * (1 + (attempt / 9) % 9);      // 0.1..0.9
            Graph g = random_graph(tag_hash("sandwich"), attempt, n, p);
            ++attempt;
            if (g.size() == 0) continue;  // tw = 0 makes the inequality vacuous
            ++tested;
            int td = treedepth_exact(g).value;
            int tw = treewidth_exact(g).value;
            double upper = tw * (std::log2(static_cast<double>(n)) + 1.0);
            if (!(tw <= td && td <= upper + 1e-9)) {
                fail("sandwich",
                     "tw=" + std::to_string(tw) + " td=" + std::to_string(td) +
                         " bound=" + fmt_double(upper),
                     &g);
                return;
            }
        }
        pass("sandwich", std::to_string(tested) + " random graphs, n <= 12");
    }

    void check_exhaustive_small() {
        // Every graph on exactly 5 vertices: component decomposition and the
        // vertex-deletion inequality, both against the exact solver.
        for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
            std::vector<Edge> edges;
            int bit = 0;
            for (int u = 0; u < 5; ++u)
                for (int v = u + 1; v < 5; ++v, ++bit)
                    if (mask >> bit & 1) edges.emplace_back(u, v);
            Graph g = Graph::from_edges(5, edges);
            int td = treedepth_exact(g).value;

            int max_comp = 0;
            for (const auto& comp : connected_components(g))
                max_comp = std::max(max_comp, treedepth_exact(g.induced(comp.vertices)).value);
            if (td != max_comp) {
                fail("components", "td != max over components", &g);
                return;
            }
            for (int v = 0; v < 5; ++v) {
                std::vector<int> keep;
                for (int u = 0; u < 5; ++u)
                    if (u != v) keep.push_back(u);
                int td_del = treedepth_exact(g.induced(keep)).value;
                if (td_del < td - 1) {
                    fail("deletion", "td(G-v) < td(G) - 1 at v=" + std::to_string(v), &g);
                    return;
                }
            }
        }
        pass("components+deletion", "exhaustive over all graphs on 5 vertices");
    }

    void check_edge_monotonicity() {
        for (int i = 0; i < 40; ++i) {
            int n = 5 + i % 5;  // 5..9
            Graph g = random_graph(tag_hash("monotone"), i, n, 0.4);
            int td = treedepth_exact(g).value;
            for (std::size_t e = 0; e < g.edges().size(); ++e) {
                std::vector<Edge> edges = g.edges();
                edges.erase(edges.begin() + static_cast<long>(e));
                int td_sub = treedepth_exact(Graph::from_edges(n, edges)).value;
                if (td_sub > td) {
                    fail("monotonicity", "removing an edge increased td", &g);
                    return;
                }
            }
        }
        pass("monotonicity", "40 random graphs, every single-edge deletion");
    }

    void check_kloks() {
        for (int i = 0; i < 60; ++i) {
            double p = 0.1 * (1 + i % 9);
            Graph g = random_graph(tag_hash("kloks"), i, 10, p);
            int tw = treewidth_exact(g).value;
            for (int k = 0; k <= 6; ++k) {
                auto part = find_balanced_kpartition(g, k);
                if (part && !is_balanced_kpartition(g, *part)) {
                    fail("kloks", "reported partition fails its own check, k=" + std::to_string(k),
                         &g);
                    return;
                }
                if (!part && tw <= k) {
                    fail("kloks",
                         "absence certified at k=" + std::to_string(k) +
                             " but tw=" + std::to_string(tw),
                         &g);
                    return;
                }
            }
        }
        pass("kloks", "60 random graphs at n=10, k <= 6, both directions");
    }

    void check_constructors() {
        for (int i = 0; i < 60; ++i) {
            int n = 4 + i % 9;
            Graph g = random_graph(tag_hash("build"), i, n, 0.35);
            auto upper = build_general_upper(g);
            auto greedy = greedy_heuristic(g);
            if (!is_elimination_forest(upper, g) || !is_elimination_forest(greedy, g)) {
                fail("constructors", "builder output is not an elimination forest", &g);
                return;
            }
            int td = treedepth_exact(g).value;
            int lower = td_lower_bound_path(g);
            if (!(lower <= td && td <= height(upper) && td <= height(greedy))) {
                fail("constructors", "bound chain lower <= exact <= upper violated", &g);
                return;
            }
        }
        for (int i = 0; i < 40; ++i) {
            std::uint64_t s = derive_seed(cfg.seed, {tag_hash("trees"), static_cast<std::uint64_t>(i)});
            Graph t = sample_labeled_tree(2 + i % 40, RandomSeed{s, 0});
            auto forest = build_tree_centroid(t);
            if (!is_elimination_forest(forest, t) ||
                height(forest) > floor_log2(t.order()) + 1) {
                fail("constructors", "centroid build violates floor(log2 n)+1", &t);
                return;
            }
        }
        pass("constructors", "validity and bound chain on random graphs and trees");
    }

    void check_witnesses() {
        for (int i = 0; i < 30; ++i) {
            int n = 4 + i % 7;
            Graph g = random_graph(tag_hash("witness"), i, n, 0.5);
            if (connected_components(g).size() != 1) continue;
            auto td = treedepth_exact(g);
            if (!is_elimination_forest(td.witness, g) || height(td.witness) != td.value) {
                fail("witness", "tree-depth witness does not recompute", &g);
                return;
            }
            auto phi = cheeger_exact(g);
            long long cut = 0, vol = 0;
            std::vector<char> in_x(n, 0);
            for (int v : phi.witness) in_x[v] = 1;
            for (int v : phi.witness) {
                vol += g.degree(v);
                for (int w : g.neighbors(v))
                    if (!in_x[w]) ++cut;
            }
            if (cut != phi.num || vol != phi.den) {
                fail("witness", "cheeger witness does not recompute", &g);
                return;
            }
        }
        pass("witness", "tree-depth and cheeger witnesses recompute");
    }
};

}  // namespace

std::string VerifyReport::summary() const {
    std::ostringstream out;
    for (const auto& line : checks) out << line << '\n';
    out << (passed() ? "verify: all checks passed\n" : "verify: FAILURES detected\n");
    return out.str();
}

VerifyReport verify_suite(const VerifyConfig& cfg) {
    VerifyRunner runner{cfg, {}};
    runner.check_paths();
    runner.check_sandwich();
    runner.check_exhaustive_small();
    runner.check_edge_monotonicity();
    runner.check_kloks();
    runner.check_constructors();
    runner.check_witnesses();
    return runner.report;
}

}  // namespace depthlab
