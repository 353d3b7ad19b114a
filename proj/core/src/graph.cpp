#include "depthlab/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace depthlab {

Graph Graph::from_edges(int n, std::vector<Edge> edges) {
    if (n < 0) throw std::invalid_argument("graph order must be non-negative");
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("loop edge rejected");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("parallel edge rejected");

    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.adj_.resize(n);
    for (const auto& [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

Graph Graph::induced(const std::vector<int>& vertices) const {
    std::vector<int> local(n_, -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
        if (i > 0 && vertices[i - 1] >= v)
            throw std::invalid_argument("vertex list must be ascending");
        local[v] = static_cast<int>(i);
    }
    std::vector<Edge> sub;
    for (int v : vertices)
        for (int w : adj_[v])
            if (v < w && local[w] >= 0) sub.emplace_back(local[v], local[w]);
    return Graph::from_edges(static_cast<int>(vertices.size()), std::move(sub));
}

std::vector<ComponentSummary> connected_components(const Graph& g) {
    const int n = g.order();
    std::vector<ComponentSummary> result;
    std::vector<bool> seen(n, false);
    std::vector<int> stack;
    for (int start = 0; start < n; ++start) {
        if (seen[start]) continue;
        ComponentSummary comp;
        stack.push_back(start);
        seen[start] = true;
        long long degree_sum = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.vertices.push_back(v);
            degree_sum += g.degree(v);
            for (int w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.vertices.begin(), comp.vertices.end());
        comp.order = static_cast<int>(comp.vertices.size());
        comp.edge_count = degree_sum / 2;
        comp.excess = static_cast<int>(comp.edge_count - comp.order);
        comp.kind = comp.excess < 0    ? ComponentKind::Tree
                    : comp.excess == 0 ? ComponentKind::Unicyclic
                                       : ComponentKind::Complex;
        result.push_back(std::move(comp));
    }
    return result;
}

namespace {

// BFS over a locally indexed vertex set; dist is reused across calls.
int bfs_ecc(const std::vector<std::vector<int>>& adj, int source, std::vector<int>& dist,
            int* reached = nullptr) {
    std::fill(dist.begin(), dist.end(), -1);
    std::vector<int> queue;
    queue.reserve(adj.size());
    queue.push_back(source);
    dist[source] = 0;
    int ecc = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        ecc = dist[v];
        for (int w : adj[v]) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    if (reached) *reached = static_cast<int>(queue.size());
    return ecc;
}

std::vector<std::vector<int>> local_adjacency(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> local(g.order(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex out of range");
        if (local[v] >= 0) throw std::invalid_argument("duplicate vertex in component");
        local[v] = static_cast<int>(i);
    }
    std::vector<std::vector<int>> adj(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (int w : g.neighbors(vertices[i]))
            if (local[w] >= 0) adj[i].push_back(local[w]);
    return adj;
}

}  // namespace

int diameter(const Graph& g, const std::vector<int>& component) {
    if (component.empty()) throw std::invalid_argument("empty component");
    auto adj = local_adjacency(g, component);
    const int k = static_cast<int>(component.size());
    std::vector<int> dist(k);
    int diam = 0;
    for (int s = 0; s < k; ++s) {
        int reached = 0;
        int ecc = bfs_ecc(adj, s, dist, &reached);
        if (reached != k) throw std::invalid_argument("vertex set is not connected");
        diam = std::max(diam, ecc);
    }
    return diam;
}

int diameter(const Graph& g) {
    std::vector<int> all(g.order());
    for (int v = 0; v < g.order(); ++v) all[v] = v;
    return diameter(g, all);
}

int longest_path_order(const Graph& g, int limit) {
    const int n = g.order();
    if (limit > 24)
        throw std::invalid_argument("longest_path_order: limits above 24 are not supported");
    if (n > limit)
        throw std::invalid_argument(
            "longest_path_order: graph order exceeds the exact-search limit; "
            "use the diameter-based fallback");
    if (n == 0) return 0;

    int best = 1;
    // Per component: dp[mask] = bitset of endpoints v such that some simple
    // path visits exactly `mask` and ends at v.
    for (const auto& comp : connected_components(g)) {
        const int k = comp.order;
        auto adj = local_adjacency(g, comp.vertices);
        std::vector<std::uint32_t> nbr_mask(k, 0);
        for (int v = 0; v < k; ++v)
            for (int w : adj[v]) nbr_mask[v] |= (1u << w);

        std::vector<std::uint32_t> dp(std::size_t{1} << k, 0);
        for (int v = 0; v < k; ++v) dp[std::uint32_t{1} << v] = (1u << v);
        for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
            std::uint32_t ends = dp[mask];
            if (!ends) continue;
            best = std::max(best, std::popcount(mask));
            std::uint32_t rest = ends;
            while (rest) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                std::uint32_t ext = nbr_mask[v] & ~mask;
                while (ext) {
                    int w = std::countr_zero(ext);
                    ext &= ext - 1;
                    dp[mask | (1u << w)] |= (1u << w);
                }
            }
        }
    }
    return best;
}

std::optional<int> find_cycle_vertex(const Graph& g) {
    const int n = g.order();
    // Iterative DFS; an edge to a gray (on-stack) non-parent vertex is a back
    // edge and its gray endpoint lies on a cycle.
    enum : char { White, Gray, Black };
    std::vector<char> color(n, White);
    std::vector<int> parent(n, -1);
    std::vector<std::size_t> next(n, 0);
    std::vector<int> stack;
    for (int start = 0; start < n; ++start) {
        if (color[start] != White) continue;
        color[start] = Gray;
        stack.push_back(start);
        while (!stack.empty()) {
            int v = stack.back();
            const auto& nbrs = g.neighbors(v);
            if (next[v] < nbrs.size()) {
                int w = nbrs[next[v]++];
                if (color[w] == White) {
                    color[w] = Gray;
                    parent[w] = v;
                    stack.push_back(w);
                } else if (color[w] == Gray && w != parent[v]) {
                    return w;
                }
            } else {
                color[v] = Black;
                stack.pop_back();
            }
        }
    }
    return std::nullopt;
}

Graph make_path(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, std::move(edges));
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(0, n - 1);
    return Graph::from_edges(n, std::move(edges));
}

Graph make_complete(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, std::move(edges));
}

Graph make_star(int leaves) {
    std::vector<Edge> edges;
    for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph::from_edges(leaves + 1, std::move(edges));
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long n = 0, m = 0;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing 'n m' header");
    if (n < 0 || m < 0) throw std::invalid_argument("edge list: negative header field");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u = 0, v = 0;
        if (!(in >> u >> v)) throw std::invalid_argument("edge list: truncated edge lines");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge list: endpoint out of range");
        if (!(u < v)) throw std::invalid_argument("edge list: edges must satisfy u < v");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    long long extra;
    if (in >> extra) throw std::invalid_argument("edge list: trailing data");
    return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph load_edge_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str());
}

void save_edge_list(const Graph& g, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << format_edge_list(g);
}

}  // namespace depthlab
