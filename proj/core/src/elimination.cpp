#include "depthlab/elimination.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace depthlab {

namespace {

// Depth of every vertex (root = 1), or empty if the parent relation is not
// a forest (out-of-range parents, self-loops, cycles).
std::vector<int> compute_depths(const EliminationForest& f) {
    const int n = f.order;
    if (static_cast<int>(f.parent.size()) != n) return {};
    std::vector<int> depth(n, 0);  // 0 = unresolved
    std::vector<int> chain;
    for (int v = 0; v < n; ++v) {
        if (depth[v] != 0) continue;
        int u = v;
        chain.clear();
        while (true) {
            if (u < 0 || u >= n) return {};
            if (depth[u] != 0) break;
            depth[u] = -1;  // on the current chain
            chain.push_back(u);
            int p = f.parent[u];
            if (p == -1) break;
            if (p < -1 || p >= n) return {};
            if (depth[p] == -1) return {};  // cycle
            u = p;
        }
        int base = 0;
        if (!chain.empty()) {
            int top = chain.back();
            int p = f.parent[top];
            base = (p == -1) ? 0 : depth[p];
        }
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) depth[*it] = ++base;
    }
    return depth;
}

}  // namespace

bool is_valid_forest(const EliminationForest& f) {
    if (f.order < 0) return false;
    return !compute_depths(f).empty() || f.order == 0;
}

int height(const EliminationForest& f) {
    if (f.order == 0) return 0;
    auto depth = compute_depths(f);
    if (depth.empty()) throw std::invalid_argument("invalid elimination forest");
    return *std::max_element(depth.begin(), depth.end());
}

Graph closure(const EliminationForest& f) {
    auto depth = compute_depths(f);
    if (depth.empty() && f.order != 0) throw std::invalid_argument("invalid elimination forest");
    std::vector<Edge> edges;
    for (int v = 0; v < f.order; ++v)
        for (int a = f.parent[v]; a != -1; a = f.parent[a])
            edges.emplace_back(std::min(v, a), std::max(v, a));
    return Graph::from_edges(f.order, std::move(edges));
}

bool is_elimination_forest(const EliminationForest& f, const Graph& g) {
    if (f.order != g.order())
        throw std::invalid_argument("forest and graph must share the vertex set");
    auto depth = compute_depths(f);
    if (depth.empty() && f.order != 0) throw std::invalid_argument("invalid elimination forest");
    for (const auto& [u, v] : g.edges()) {
        int a = u, b = v;
        if (depth[a] < depth[b]) std::swap(a, b);
        while (depth[a] > depth[b]) a = f.parent[a];
        if (a != b) return false;
    }
    return true;
}

namespace {

// Shared machinery for the constructive builders. Works on a local adjacency
// list with an alive mask so pieces can be carved off without copying; the
// scratch arrays are reused and cleaned per piece, keeping each decomposition
// step linear in the piece size.
struct ForestBuilder {
    const std::vector<std::vector<int>>& adj;
    std::vector<char> alive;
    std::vector<int> parent;
    std::vector<char> seen_;
    std::vector<int> par_, sub_;

    explicit ForestBuilder(const std::vector<std::vector<int>>& a)
        : adj(a),
          alive(a.size(), 1),
          parent(a.size(), -1),
          seen_(a.size(), 0),
          par_(a.size(), -2),
          sub_(a.size(), 1) {}

    std::vector<int> collect_piece(int start) {
        std::vector<int> piece{start};
        seen_[start] = 1;
        for (std::size_t head = 0; head < piece.size(); ++head)
            for (int w : adj[piece[head]])
                if (alive[w] && !seen_[w]) {
                    seen_[w] = 1;
                    piece.push_back(w);
                }
        for (int v : piece) seen_[v] = 0;
        return piece;
    }

    // Centroid decomposition of the alive tree piece containing start;
    // returns the piece root. Ties break toward the lowest label.
    int decompose(int start) {
        std::vector<int> order{start};
        par_[start] = -1;
        for (std::size_t head = 0; head < order.size(); ++head) {
            int v = order[head];
            for (int w : adj[v])
                if (alive[w] && par_[w] == -2) {
                    par_[w] = v;
                    order.push_back(w);
                }
        }
        const int size = static_cast<int>(order.size());
        if (size == 1) {
            par_[start] = -2;
            alive[start] = 0;
            return start;
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it)
            if (par_[*it] >= 0) sub_[par_[*it]] += sub_[*it];

        int centroid = -1, best = size + 1;
        std::vector<int> piece = order;
        std::sort(piece.begin(), piece.end());
        for (int v : piece) {
            int max_part = size - sub_[v];
            for (int w : adj[v])
                if (alive[w] && par_[w] == v) max_part = std::max(max_part, sub_[w]);
            if (max_part < best) {
                best = max_part;
                centroid = v;
            }
        }
        for (int v : order) {
            par_[v] = -2;
            sub_[v] = 1;
        }

        alive[centroid] = 0;
        for (int w : adj[centroid])
            if (alive[w]) {
                int child_root = decompose(w);
                parent[child_root] = centroid;
            }
        return centroid;
    }

    // A vertex on a cycle of the alive subgraph, or -1 if it is a forest.
    // DFS from the lowest alive label with neighbors in ascending order.
    int find_cycle() const {
        const int n = static_cast<int>(adj.size());
        enum : char { White, Gray, Black };
        std::vector<char> color(n, White);
        std::vector<int> par(n, -1);
        std::vector<std::size_t> next(n, 0);
        std::vector<int> stack;
        for (int s = 0; s < n; ++s) {
            if (!alive[s] || color[s] != White) continue;
            color[s] = Gray;
            stack.push_back(s);
            while (!stack.empty()) {
                int v = stack.back();
                if (next[v] < adj[v].size()) {
                    int w = adj[v][next[v]++];
                    if (!alive[w]) continue;
                    if (color[w] == White) {
                        color[w] = Gray;
                        par[w] = v;
                        stack.push_back(w);
                    } else if (color[w] == Gray && w != par[v]) {
                        return w;
                    }
                } else {
                    color[v] = Black;
                    stack.pop_back();
                }
            }
        }
        return -1;
    }
};

std::vector<std::vector<int>> plain_adjacency(const Graph& g) {
    std::vector<std::vector<int>> adj(g.order());
    for (int v = 0; v < g.order(); ++v) adj[v] = g.neighbors(v);
    return adj;
}

}  // namespace

EliminationForest build_tree_centroid(const Graph& tree) {
    const int n = tree.order();
    if (n == 0) return {0, {}};
    if (tree.size() != n - 1) throw std::invalid_argument("input is not a tree");
    auto comps = connected_components(tree);
    if (comps.size() != 1) throw std::invalid_argument("input is not a tree (disconnected)");

    auto adj = plain_adjacency(tree);
    ForestBuilder builder(adj);
    builder.decompose(0);
    return {n, std::move(builder.parent)};
}

EliminationForest build_unicyclic(const Graph& g) {
    const int n = g.order();
    auto comps = connected_components(g);
    if (comps.size() != 1 || g.size() != n)
        throw std::invalid_argument("input is not unicyclic (need connected, excess 0)");

    auto adj = plain_adjacency(g);
    ForestBuilder builder(adj);
    int root = builder.find_cycle();
    if (root < 0) throw std::invalid_argument("input is not unicyclic (no cycle found)");
    builder.alive[root] = 0;
    for (int w : adj[root])
        if (builder.alive[w]) {
            int piece_root = builder.decompose(w);
            builder.parent[piece_root] = root;
        }
    return {n, std::move(builder.parent)};
}

GeneralUpperResult build_general_upper_report(const Graph& g) {
    const int n = g.order();
    GeneralUpperResult result;
    result.forest.order = n;
    result.forest.parent.assign(n, -1);
    if (n == 0) return result;

    auto floor_log2 = [](int x) {
        int r = 0;
        while (x > 1) {
            x >>= 1;
            ++r;
        }
        return r;
    };

    for (const auto& comp : connected_components(g)) {
        Graph sub = g.induced(comp.vertices);
        auto adj = plain_adjacency(sub);
        ForestBuilder builder(adj);

        // Delete cycle vertices until the residual is a forest. Each
        // deletion kills at least one independent cycle, so at most
        // excess + 1 vertices are removed.
        std::vector<int> chain;
        for (int v = builder.find_cycle(); v != -1; v = builder.find_cycle()) {
            builder.alive[v] = 0;
            chain.push_back(v);
        }
        for (std::size_t i = 1; i < chain.size(); ++i)
            builder.parent[chain[i]] = chain[i - 1];

        const int hang = chain.empty() ? -1 : chain.back();
        for (int v = 0; v < sub.order(); ++v)
            if (builder.alive[v]) {
                int piece_root = builder.decompose(v);
                builder.parent[piece_root] = hang;
            }

        for (int v = 0; v < sub.order(); ++v)
            result.forest.parent[comp.vertices[v]] =
                builder.parent[v] == -1 ? -1 : comp.vertices[builder.parent[v]];

        ComponentUpperBound bound;
        bound.order = comp.order;
        bound.excess = comp.excess;
        bound.removed = static_cast<int>(chain.size());
        bound.height_bound = bound.removed + floor_log2(comp.order) + 1;
        result.components.push_back(bound);
    }
    return result;
}

EliminationForest build_general_upper(const Graph& g) {
    return build_general_upper_report(g).forest;
}

EliminationForest greedy_heuristic(const Graph& g) {
    const int n = g.order();
    EliminationForest forest{n, std::vector<int>(n, -1)};
    if (n == 0) return forest;

    std::vector<std::set<int>> adj(n);
    for (const auto& [u, v] : g.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<std::set<int>> bucket(n + 1);
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) {
        deg[v] = static_cast<int>(adj[v].size());
        bucket[deg[v]].insert(v);
    }
    auto move_bucket = [&](int v, int to) {
        bucket[deg[v]].erase(v);
        deg[v] = to;
        bucket[to].insert(v);
    };

    std::vector<int> pos(n, -1);
    std::vector<std::vector<int>> fill_nbrs(n);
    int min_deg = 0;
    for (int step = 0; step < n; ++step) {
        while (bucket[min_deg].empty()) ++min_deg;
        int v = *bucket[min_deg].begin();
        bucket[min_deg].erase(v);
        pos[v] = step;

        std::vector<int> nbrs(adj[v].begin(), adj[v].end());
        fill_nbrs[v] = nbrs;
        // Eliminate v: clique up its residual neighborhood.
        for (int u : nbrs) {
            adj[u].erase(v);
            move_bucket(u, deg[u] - 1);
        }
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                int a = nbrs[i], b = nbrs[j];
                if (adj[a].insert(b).second) {
                    adj[b].insert(a);
                    move_bucket(a, deg[a] + 1);
                    move_bucket(b, deg[b] + 1);
                }
            }
        adj[v].clear();
        if (!nbrs.empty()) min_deg = std::max(0, min_deg - 1);
    }

    for (int v = 0; v < n; ++v) {
        int best = -1;
        for (int u : fill_nbrs[v])
            if (best == -1 || pos[u] < pos[best]) best = u;
        forest.parent[v] = best;
    }
    return forest;
}

std::string format_forest(const EliminationForest& f) {
    std::ostringstream out;
    for (int v = 0; v < f.order; ++v) out << v << ' ' << f.parent[v] << '\n';
    return out.str();
}

EliminationForest parse_forest(std::string_view text) {
    std::istringstream in{std::string(text)};
    EliminationForest f;
    int v, p;
    while (in >> v >> p) {
        if (v != f.order) throw std::invalid_argument("forest file: vertices must be 0,1,2,...");
        f.parent.push_back(p);
        ++f.order;
    }
    if (!is_valid_forest(f)) throw std::invalid_argument("forest file: not a rooted forest");
    return f;
}

EliminationForest load_forest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_forest(buf.str());
}

void save_forest(const EliminationForest& f, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << format_forest(f);
}

}  // namespace depthlab
