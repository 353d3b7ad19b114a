#include "depthlab/exact.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace depthlab {

namespace {

int floor_log2(int x) {
    int r = 0;
    while (x > 1) {
        x >>= 1;
        ++r;
    }
    return r;
}

// Exact tree-depth of one connected component (<= 25 vertices), memoized on
// connected vertex subsets: td(S) = 1 + min_{v in S} max over components C
// of S-v of td(C).
struct TreedepthSolver {
    int k;
    std::vector<std::uint32_t> adj;
    std::vector<std::uint8_t> memo;  // 0 = unknown (td >= 1 everywhere)

    explicit TreedepthSolver(const Graph& sub) : k(sub.order()), adj(k, 0) {
        for (int v = 0; v < k; ++v)
            for (int w : sub.neighbors(v)) adj[v] |= (std::uint32_t{1} << w);
        memo.assign(std::size_t{1} << k, 0);
    }

    // Connected piece of `mask` containing its lowest bit.
    std::uint32_t first_component(std::uint32_t mask) const {
        std::uint32_t comp = mask & (~mask + 1);
        std::uint32_t frontier = comp;
        while (frontier) {
            std::uint32_t next = 0;
            for (std::uint32_t f = frontier; f;) {
                int u = std::countr_zero(f);
                f &= f - 1;
                next |= adj[u] & mask;
            }
            next &= ~comp;
            comp |= next;
            frontier = next;
        }
        return comp;
    }

    int solve(std::uint32_t mask) {  // mask connected, nonempty
        if ((mask & (mask - 1)) == 0) return 1;
        if (memo[mask]) return memo[mask];
        int best = std::popcount(mask);
        for (std::uint32_t bits = mask; bits;) {
            int v = std::countr_zero(bits);
            bits &= bits - 1;
            std::uint32_t rem = mask ^ (std::uint32_t{1} << v);
            int worst = 0;
            for (std::uint32_t rest = rem; rest && 1 + worst < best;) {
                std::uint32_t comp = first_component(rest);
                worst = std::max(worst, solve(comp));
                rest &= ~comp;
            }
            best = std::min(best, 1 + worst);
            if (best == 2) break;  // unbeatable for |mask| >= 2
        }
        memo[mask] = static_cast<std::uint8_t>(best);
        return best;
    }

    // Rebuilds an optimal forest from the memo; choices break toward the
    // lowest vertex label. parent_out uses local labels.
    int rebuild(std::uint32_t mask, int parent, std::vector<int>& parent_out) {
        if ((mask & (mask - 1)) == 0) {
            int v = std::countr_zero(mask);
            parent_out[v] = parent;
            return v;
        }
        const int target = solve(mask);
        for (std::uint32_t bits = mask; bits;) {
            int v = std::countr_zero(bits);
            bits &= bits - 1;
            std::uint32_t rem = mask ^ (std::uint32_t{1} << v);
            int worst = 0;
            for (std::uint32_t rest = rem; rest;) {
                std::uint32_t comp = first_component(rest);
                worst = std::max(worst, solve(comp));
                rest &= ~comp;
            }
            if (1 + worst == target) {
                parent_out[v] = parent;
                for (std::uint32_t rest = rem; rest;) {
                    std::uint32_t comp = first_component(rest);
                    rebuild(comp, v, parent_out);
                    rest &= ~comp;
                }
                return v;
            }
        }
        throw std::logic_error("treedepth memo inconsistent");
    }
};

}  // namespace

TreedepthResult treedepth_exact(const Graph& g, int component_limit) {
    if (component_limit > 25)
        throw std::invalid_argument("treedepth_exact: limits above 25 are not supported");
    TreedepthResult result;
    result.method = Method::Exact;
    result.witness.order = g.order();
    result.witness.parent.assign(g.order(), -1);
    result.value = 0;

    for (const auto& comp : connected_components(g)) {
        if (comp.order > component_limit)
            throw std::invalid_argument(
                "treedepth_exact: component exceeds the exact-solver limit");
        Graph sub = g.induced(comp.vertices);
        TreedepthSolver solver(sub);
        const std::uint32_t full = (comp.order == 32)
                                       ? ~std::uint32_t{0}
                                       : ((std::uint32_t{1} << comp.order) - 1);
        result.value = std::max(result.value, solver.solve(full));
        std::vector<int> local_parent(comp.order, -1);
        solver.rebuild(full, -1, local_parent);
        for (int v = 0; v < comp.order; ++v)
            result.witness.parent[comp.vertices[v]] =
                local_parent[v] == -1 ? -1 : comp.vertices[local_parent[v]];
    }
    return result;
}

namespace {

// Back-degree of v when eliminated right after the set S: the neighborhood
// of the vertices reachable from v through S, outside S and v itself.
int elimination_backdegree(const std::vector<std::uint32_t>& adj, std::uint32_t s, int v) {
    std::uint32_t reached = adj[v] & s;
    std::uint32_t boundary = adj[v];
    std::uint32_t frontier = reached;
    while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f;) {
            int u = std::countr_zero(f);
            f &= f - 1;
            next |= adj[u];
        }
        boundary |= next;
        next &= s & ~reached;
        reached |= next;
        frontier = next;
    }
    return std::popcount(boundary & ~s & ~(std::uint32_t{1} << v));
}

}  // namespace

TreewidthResult treewidth_exact(const Graph& g, int limit) {
    const int n = g.order();
    if (limit > 25) throw std::invalid_argument("treewidth_exact: limits above 25 are not supported");
    if (n > limit)
        throw std::invalid_argument("treewidth_exact: graph exceeds the exact-solver limit");

    TreewidthResult result;
    result.method = Method::Exact;
    if (n == 0) return result;

    std::vector<std::uint32_t> adj(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) adj[v] |= (std::uint32_t{1} << w);

    const std::size_t states = std::size_t{1} << n;
    std::vector<std::uint8_t> dp(states, 0);
    for (std::uint32_t s = 1; s < states; ++s) {
        int best = n;  // back-degree never exceeds n-1
        for (std::uint32_t bits = s; bits;) {
            int v = std::countr_zero(bits);
            bits &= bits - 1;
            std::uint32_t prev = s ^ (std::uint32_t{1} << v);
            int cand = std::max<int>(dp[prev], elimination_backdegree(adj, prev, v));
            best = std::min(best, cand);
            if (best == 0) break;
        }
        dp[s] = static_cast<std::uint8_t>(best);
    }

    const std::uint32_t full = static_cast<std::uint32_t>(states - 1);
    result.value = dp[full];

    result.ordering.assign(n, -1);
    std::uint32_t s = full;
    for (int slot = n - 1; slot >= 0; --slot) {
        for (std::uint32_t bits = s; bits;) {
            int v = std::countr_zero(bits);
            bits &= bits - 1;
            std::uint32_t prev = s ^ (std::uint32_t{1} << v);
            if (std::max<int>(dp[prev], elimination_backdegree(adj, prev, v)) == dp[s]) {
                result.ordering[slot] = v;
                s = prev;
                break;
            }
        }
        if (result.ordering[slot] < 0) throw std::logic_error("treewidth dp inconsistent");
    }
    return result;
}

int td_lower_bound_path(const Graph& g, int path_limit) {
    const int n = g.order();
    if (n == 0) return 0;
    int t;
    if (n <= path_limit) {
        t = longest_path_order(g, path_limit);
    } else {
        auto comps = connected_components(g);
        const ComponentSummary* largest = &comps.front();
        for (const auto& c : comps)
            if (c.order > largest->order) largest = &c;
        t = diameter(g, largest->vertices) + 1;
    }
    return floor_log2(t) + 1;
}

}  // namespace depthlab
