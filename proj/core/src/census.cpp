#include "depthlab/census.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace depthlab {

long long ComponentCensus::component_count() const {
    long long total = 0;
    for (const auto& [key, count] : histogram) total += count;
    return total;
}

ComponentCensus classify(const Graph& g) {
    ComponentCensus census;
    for (const auto& comp : connected_components(g)) {
        ++census.histogram[{comp.order, comp.excess}];
        census.largest_order = std::max(census.largest_order, comp.order);
        census.max_excess = std::max(census.max_excess, comp.excess);
        if (comp.excess == -1) ++census.tree_counts[comp.order];
    }
    return census;
}

double log_expected_tree_count(double n, double c, int k) {
    if (k < 1) throw std::invalid_argument("expected_tree_count: k must be at least 1");
    if (!(c > 0)) throw std::invalid_argument("expected_tree_count: c must be positive");
    if (!(n > 0)) throw std::invalid_argument("expected_tree_count: n must be positive");
    const double kk = static_cast<double>(k);
    return std::log(n) + (kk - 2.0) * std::log(kk) - std::lgamma(kk + 1.0) +
           (kk - 1.0) * std::log(c) - kk * c;
}

double expected_tree_count(double n, double c, int k) {
    return std::exp(log_expected_tree_count(n, c, k));
}

namespace {

struct BfsResult {
    int farthest = 0;
    int dist = 0;
};

BfsResult bfs_far(const Graph& g, int source) {
    std::vector<int> dist(g.order(), -1);
    std::vector<int> queue{source};
    dist[source] = 0;
    BfsResult res{source, 0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        if (dist[v] > res.dist) {
            res.dist = dist[v];
            res.farthest = v;
        }
        for (int w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return res;
}

}  // namespace

TreeStats tree_height_and_diameter(const Graph& t, int root) {
    const int k = t.order();
    if (root < 0 || root >= k) throw std::invalid_argument("root out of range");
    if (t.size() != k - 1) throw std::invalid_argument("input is not a tree");

    std::vector<int> dist(k, -1);
    std::vector<int> queue{root};
    dist[root] = 0;
    int deepest = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        deepest = std::max(deepest, dist[v]);
        for (int w : t.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    if (static_cast<int>(queue.size()) != k)
        throw std::invalid_argument("input is not a tree (disconnected)");

    // Tree diameter by double BFS.
    BfsResult first = bfs_far(t, root);
    BfsResult second = bfs_far(t, first.farthest);

    TreeStats stats;
    stats.order = k;
    stats.height = deepest + 1;  // vertices on the longest root path
    stats.diameter = second.dist;
    return stats;
}

std::optional<double> mean_tree_diameter(const Graph& g, int k) {
    if (k < 1) return std::nullopt;
    double total = 0;
    long long count = 0;
    for (const auto& comp : connected_components(g)) {
        if (comp.kind != ComponentKind::Tree || comp.order != k) continue;
        Graph sub = g.induced(comp.vertices);
        total += tree_height_and_diameter(sub, 0).diameter;
        ++count;
    }
    if (count == 0) return std::nullopt;
    return total / static_cast<double>(count);
}

}  // namespace depthlab
