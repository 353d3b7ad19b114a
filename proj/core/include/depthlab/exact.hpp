#pragma once

#include <vector>

#include "depthlab/elimination.hpp"
#include "depthlab/graph.hpp"

namespace depthlab {

enum class Method { Exact, LowerBound, UpperBound };

inline constexpr int kDefaultTreedepthComponentLimit = 20;
inline constexpr int kDefaultTreewidthLimit = 18;

struct TreedepthResult {
    int value = 0;
    EliminationForest witness;  // valid elimination forest of height == value
    Method method = Method::Exact;
};

struct TreewidthResult {
    int value = 0;
    std::vector<int> ordering;  // elimination order, first eliminated first
    Method method = Method::Exact;
};

/// Exact tree-depth by the recursion td(C) = 1 + min_v td(C - v) over
/// connected vertex subsets, memoized on bitmasks per component; the graph
/// value is the max over components. Throws if any component exceeds
/// component_limit. Witness ties break toward the lowest vertex label.
TreedepthResult treedepth_exact(const Graph& g,
                                int component_limit = kDefaultTreedepthComponentLimit);

/// Exact tree-width as the minimum over elimination orderings of the maximum
/// residual back-degree, by subset dynamic programming over eliminated sets.
/// Throws if order() > limit.
TreewidthResult treewidth_exact(const Graph& g, int limit = kDefaultTreewidthLimit);

/// Lower bound floor(log2 t) + 1 from a path on t vertices: t is the exact
/// longest-path order when order() <= path_limit, otherwise diameter + 1 of
/// the largest component. Always a valid tree-depth lower bound.
int td_lower_bound_path(const Graph& g, int path_limit = kDefaultPathSearchLimit);

}  // namespace depthlab
