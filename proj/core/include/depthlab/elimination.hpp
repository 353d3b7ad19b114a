#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "depthlab/graph.hpp"

namespace depthlab {

/// Rooted forest on the vertices of a graph, stored as a parent array
/// (-1 for roots). Heights are counted in vertices: a single vertex has
/// height 1, the 15-vertex path admits a forest of height 4.
struct EliminationForest {
    int order = 0;
    std::vector<int> parent;  // parent[v] in [0, order) or -1
};

/// Structural check: parent array in range, no cycles.
bool is_valid_forest(const EliminationForest& f);

/// Max number of vertices on any root-to-leaf path. Throws on invalid input.
int height(const EliminationForest& f);

/// Graph joining every strict ancestor-descendant pair.
Graph closure(const EliminationForest& f);

/// True iff every edge of g joins an ancestor-descendant pair of f.
/// Throws if the vertex sets differ (order mismatch) or f is invalid.
bool is_elimination_forest(const EliminationForest& f, const Graph& g);

/// Recursive centroid decomposition of a tree. Height <= floor(log2 n) + 1.
/// Centroid ties break toward the lowest vertex label.
EliminationForest build_tree_centroid(const Graph& tree);

/// Unicyclic input: one cycle vertex becomes the sole root, the centroid
/// decomposition of what remains hangs beneath it. Height <= floor(log2 k) + 2.
EliminationForest build_unicyclic(const Graph& g);

/// Per-component accounting of build_general_upper: how many cycle vertices
/// were stacked above the centroid forest and the height bound
/// (removed + floor(log2 k) + 1, with removed <= excess + 1).
struct ComponentUpperBound {
    int order = 0;
    int excess = 0;
    int removed = 0;
    int height_bound = 0;
};

struct GeneralUpperResult {
    EliminationForest forest;
    std::vector<ComponentUpperBound> components;
};

/// Upper-bound constructor for arbitrary graphs: per component, delete cycle
/// vertices until a forest remains, stack them as a root chain above the
/// centroid decomposition of the residual trees.
GeneralUpperResult build_general_upper_report(const Graph& g);
EliminationForest build_general_upper(const Graph& g);

/// Min-degree elimination heuristic. Each eliminated vertex becomes a child
/// of the first-eliminated neighbor in its residual fill closure; always a
/// valid elimination forest, with no height guarantee.
EliminationForest greedy_heuristic(const Graph& g);

// Serialization: one line per vertex, "v parent", -1 for roots.
std::string format_forest(const EliminationForest& f);
EliminationForest parse_forest(std::string_view text);
EliminationForest load_forest(const std::filesystem::path& path);
void save_forest(const EliminationForest& f, const std::filesystem::path& path);

}  // namespace depthlab
