#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace depthlab {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1. Immutable after construction,
/// so values can be shared freely across threads.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Loops and parallel edges are
    /// rejected (std::invalid_argument), endpoints may come in any order.
    static Graph from_edges(int n, std::vector<Edge> edges);

    int order() const { return n_; }
    long long size() const { return static_cast<long long>(edges_.size()); }

    /// Neighbor list of v, sorted ascending.
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    /// Edges with u < v, lexicographically sorted.
    const std::vector<Edge>& edges() const { return edges_; }

    /// Induced subgraph; vertices relabeled 0..k-1 in the order given
    /// (must be ascending and duplicate-free).
    Graph induced(const std::vector<int>& vertices) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

enum class ComponentKind { Tree, Unicyclic, Complex };

/// One connected component: order k, excess ell = edges - k.
/// ell = -1 for trees, 0 for unicycles, > 0 for complex components.
struct ComponentSummary {
    std::vector<int> vertices;  // ascending
    int order = 0;
    long long edge_count = 0;
    int excess = 0;
    ComponentKind kind = ComponentKind::Tree;
};

std::vector<ComponentSummary> connected_components(const Graph& g);

/// Maximum shortest-path distance (in edges) between any two vertices of
/// `component`, by all-sources BFS. Throws if the set is not connected in g.
int diameter(const Graph& g, const std::vector<int>& component);

/// Diameter of the whole graph; requires g connected and non-empty.
int diameter(const Graph& g);

inline constexpr int kDefaultPathSearchLimit = 20;

/// Exact number of vertices on a longest simple path, by dynamic programming
/// over (vertex subset, endpoint) states. Throws if order() > limit; callers
/// with larger graphs should fall back to diameter-based bounds.
int longest_path_order(const Graph& g, int limit = kDefaultPathSearchLimit);

/// Some vertex lying on a cycle (found by DFS back-edge detection),
/// or nullopt iff g is a forest. Deterministic for a given graph.
std::optional<int> find_cycle_vertex(const Graph& g);

// Convenience constructions used all over the tests and the CLI.
Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);
Graph make_star(int leaves);

// Edge-list text format: first line "n m", then m lines "u v" with
// 0 <= u < v < n. Duplicates and loops are load errors.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);
Graph load_edge_list(const std::filesystem::path& path);
void save_edge_list(const Graph& g, const std::filesystem::path& path);

}  // namespace depthlab
