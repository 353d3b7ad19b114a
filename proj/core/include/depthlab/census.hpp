#pragma once

#include <map>
#include <optional>
#include <utility>

#include "depthlab/graph.hpp"

namespace depthlab {

/// Component-structure statistics: histogram over (order k, excess ell),
/// the largest order n_c, the maximum excess ell_m, and per-order tree
/// counts X_k (components with ell = -1).
struct ComponentCensus {
    std::map<std::pair<int, int>, long long> histogram;
    int largest_order = 0;   // n_c
    int max_excess = -1;     // ell_m; -1 when the graph is a forest
    std::map<int, long long> tree_counts;

    long long component_count() const;
};

ComponentCensus classify(const Graph& g);

/// Expected number of tree components of order k in G(n, c/n):
/// M_k = n k^(k-2) / k! * c^(k-1) * e^(-kc), evaluated in log space.
double expected_tree_count(double n, double c, int k);
double log_expected_tree_count(double n, double c, int k);

/// One sampled tree's height (vertices on the longest root-to-leaf path,
/// measured from the given root) and diameter (edges). Per sample
/// H <= D + 1 <= 2H.
struct TreeStats {
    int order = 0;
    int height = 0;    // H, in vertices
    int diameter = 0;  // D, in edges
};

/// Throws if t is not a tree or root is out of range.
TreeStats tree_height_and_diameter(const Graph& t, int root);

/// Mean diameter over tree components of order exactly k; nullopt when
/// there is no such component.
std::optional<double> mean_tree_diameter(const Graph& g, int k);

}  // namespace depthlab
