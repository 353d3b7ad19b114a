#include "depthlab/separators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "depthlab/random.hpp"

namespace depthlab {

namespace {

void check_partition(const Graph& g, const BalancedPartition& part) {
    std::vector<int> tag(g.order(), 0);
    auto mark = [&](const std::vector<int>& set) {
        for (int v : set) {
            if (v < 0 || v >= g.order()) throw std::invalid_argument("partition: vertex out of range");
            if (tag[v]) throw std::invalid_argument("partition: sets are not disjoint");
            tag[v] = 1;
        }
    };
    mark(part.a);
    mark(part.s);
    mark(part.b);
    for (int v = 0; v < g.order(); ++v)
        if (!tag[v]) throw std::invalid_argument("partition: sets do not cover the vertex set");
}

bool window_ok(long long side, long long rest) {
    // (n-k-1)/3 <= side <= 2(n-k-1)/3, in exact integer arithmetic.
    return 3 * side >= rest && 3 * side <= 2 * rest;
}

}  // namespace

bool is_balanced_kpartition(const Graph& g, const BalancedPartition& part) {
    check_partition(g, part);
    if (static_cast<int>(part.s.size()) != part.k + 1) return false;
    const long long rest = g.order() - part.k - 1;
    if (!window_ok(static_cast<long long>(part.a.size()), rest)) return false;
    if (!window_ok(static_cast<long long>(part.b.size()), rest)) return false;
    std::vector<char> in_b(g.order(), 0);
    for (int v : part.b) in_b[v] = 1;
    for (int v : part.a)
        for (int w : g.neighbors(v))
            if (in_b[w]) return false;
    return true;
}

std::optional<BalancedPartition> find_balanced_kpartition(const Graph& g, int k, int limit) {
    const int n = g.order();
    if (limit > 30) throw std::invalid_argument("find_balanced_kpartition: limit above 30");
    if (n > limit)
        throw std::invalid_argument("find_balanced_kpartition: graph exceeds the search limit");
    if (k < 0 || k + 1 > n) return std::nullopt;

    std::vector<std::uint32_t> adj(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) adj[v] |= (std::uint32_t{1} << w);

    const std::uint32_t full = (n == 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1);
    const int ssize = k + 1;
    const long long rest = n - ssize;

    // All separators S of size k+1 in ascending mask order (Gosper's hack).
    // A and B must be unions of components of g - S, so the side sizes are a
    // subset-sum over component orders.
    std::uint32_t s_mask = (std::uint32_t{1} << ssize) - 1;
    while (s_mask <= full) {
        const std::uint32_t outside = full & ~s_mask;

        std::vector<std::uint32_t> comps;
        for (std::uint32_t remaining = outside; remaining;) {
            std::uint32_t comp = remaining & (~remaining + 1);
            std::uint32_t frontier = comp;
            while (frontier) {
                std::uint32_t next = 0;
                for (std::uint32_t f = frontier; f;) {
                    int u = std::countr_zero(f);
                    f &= f - 1;
                    next |= adj[u] & remaining;
                }
                next &= ~comp;
                comp |= next;
                frontier = next;
            }
            comps.push_back(comp);
            remaining &= ~comp;
        }

        // prefix_sums[i] = achievable A-sizes using the first i components.
        std::vector<std::uint64_t> prefix_sums(comps.size() + 1);
        prefix_sums[0] = 1;  // sum 0
        for (std::size_t i = 0; i < comps.size(); ++i)
            prefix_sums[i + 1] =
                prefix_sums[i] | (prefix_sums[i] << std::popcount(comps[i]));

        int chosen = -1;
        for (int a = 0; a <= static_cast<int>(rest); ++a) {
            if (!window_ok(a, rest) || !window_ok(rest - a, rest)) continue;
            if (prefix_sums[comps.size()] >> a & 1) {
                chosen = a;
                break;
            }
        }
        if (chosen >= 0) {
            std::uint32_t a_mask = 0;
            int need = chosen;
            for (std::size_t i = comps.size(); i-- > 0;) {
                int size = std::popcount(comps[i]);
                if (need >= size && (prefix_sums[i] >> (need - size) & 1)) {
                    a_mask |= comps[i];
                    need -= size;
                }
            }
            BalancedPartition part;
            part.k = k;
            for (int v = 0; v < n; ++v) {
                std::uint32_t bit = std::uint32_t{1} << v;
                if (s_mask & bit)
                    part.s.push_back(v);
                else if (a_mask & bit)
                    part.a.push_back(v);
                else
                    part.b.push_back(v);
            }
            return part;
        }

        if (s_mask == 0) break;
        std::uint32_t c = s_mask & (~s_mask + 1);
        std::uint32_t r = s_mask + c;
        if (r > full || r < s_mask) break;
        s_mask = (((s_mask ^ r) >> 2) / c) | r;
    }
    return std::nullopt;
}

namespace {

void check_enumerable(const Graph& g, int limit, const char* who) {
    if (limit > 30) throw std::invalid_argument(std::string(who) + ": limit above 30");
    if (g.order() > limit)
        throw std::invalid_argument(std::string(who) + ": graph exceeds the enumeration limit");
    if (g.order() < 2)
        throw std::invalid_argument(std::string(who) + ": need at least 2 vertices");
    if (connected_components(g).size() != 1)
        throw std::invalid_argument(std::string(who) + ": graph must be connected");
}

}  // namespace

ExpansionWitness cheeger_exact(const Graph& g, int limit) {
    check_enumerable(g, limit, "cheeger_exact");
    const int n = g.order();
    std::vector<std::uint32_t> adj(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) adj[v] |= (std::uint32_t{1} << w);

    ExpansionWitness best;
    best.num = 1;
    best.den = 0;  // +infinity until the first candidate
    std::uint32_t best_mask = 0;
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    for (std::uint32_t x = 1; x <= full; ++x) {
        if (2 * std::popcount(x) > n) continue;
        long long cut = 0, vol = 0;
        for (std::uint32_t bits = x; bits;) {
            int v = std::countr_zero(bits);
            bits &= bits - 1;
            cut += std::popcount(adj[v] & ~x);
            vol += std::popcount(adj[v]);
        }
        if (cut * best.den < best.num * vol) {
            best.num = cut;
            best.den = vol;
            best_mask = x;
        }
    }
    best.value = static_cast<double>(best.num) / static_cast<double>(best.den);
    for (int v = 0; v < n; ++v)
        if (best_mask >> v & 1) best.witness.push_back(v);
    return best;
}

ExpansionWitness vertex_expansion_exact(const Graph& g, int limit) {
    check_enumerable(g, limit, "vertex_expansion_exact");
    const int n = g.order();
    std::vector<std::uint32_t> adj(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) adj[v] |= (std::uint32_t{1} << w);

    ExpansionWitness best;
    best.num = 1;
    best.den = 0;
    std::uint32_t best_mask = 0;
    const int max_size = (n + 1) / 2;
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    for (std::uint32_t x = 1; x <= full; ++x) {
        const int size = std::popcount(x);
        if (size > max_size) continue;
        std::uint32_t nbhd = 0;
        for (std::uint32_t bits = x; bits;) {
            int v = std::countr_zero(bits);
            bits &= bits - 1;
            nbhd |= adj[v];
        }
        long long outside = std::popcount(nbhd & ~x);
        if (outside * best.den < best.num * size) {
            best.num = outside;
            best.den = size;
            best_mask = x;
        }
    }
    best.value = static_cast<double>(best.num) / static_cast<double>(best.den);
    for (int v = 0; v < n; ++v)
        if (best_mask >> v & 1) best.witness.push_back(v);
    return best;
}

SpectralReport lambda2_estimate(const Graph& g, double tolerance, int max_iterations) {
    const int n = g.order();
    if (n < 2) throw std::invalid_argument("lambda2_estimate: need at least 2 vertices");
    const int d = g.degree(0);
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != d) throw std::invalid_argument("lambda2_estimate: graph is not regular");
    if (connected_components(g).size() != 1)
        throw std::invalid_argument("lambda2_estimate: graph must be connected");

    // Power iteration on A + dI (so every eigenvalue is shifted into [0, 2d]
    // and the target is dominant inside the deflated subspace), with the
    // all-ones top eigenvector projected out at every step.
    std::vector<double> x(n), y(n);
    for (int v = 0; v < n; ++v)
        x[v] = static_cast<double>(mix64(static_cast<std::uint64_t>(v) + 1) >> 11) * 0x1.0p-53 - 0.5;
    auto project = [&](std::vector<double>& vec) {
        double mean = 0;
        for (double t : vec) mean += t;
        mean /= n;
        for (double& t : vec) t -= mean;
    };
    auto norm = [&](const std::vector<double>& vec) {
        double s = 0;
        for (double t : vec) s += t * t;
        return std::sqrt(s);
    };
    project(x);
    double nx = norm(x);
    if (nx == 0) x[0] = 1, x[n - 1] = -1, nx = std::sqrt(2.0);
    for (double& t : x) t /= nx;

    SpectralReport report;
    for (int iter = 1; iter <= max_iterations; ++iter) {
        for (int v = 0; v < n; ++v) {
            double acc = d * x[v];
            for (int w : g.neighbors(v)) acc += x[w];
            y[v] = acc;
        }
        project(y);
        double theta = 0;
        for (int v = 0; v < n; ++v) theta += x[v] * y[v];
        double res = 0;
        for (int v = 0; v < n; ++v) {
            double r = y[v] - theta * x[v];
            res += r * r;
        }
        res = std::sqrt(res);
        report.iterations = iter;
        report.residual = res;
        if (res <= tolerance) {
            report.lambda2 = theta - d;
            report.conductance_bound = (1.0 - report.lambda2 / d) / 2.0;
            return report;
        }
        double ny = norm(y);
        if (ny < 1e-300) {  // x is (numerically) in the kernel of A + dI
            report.lambda2 = -d;
            report.conductance_bound = 1.0;
            return report;
        }
        for (int v = 0; v < n; ++v) x[v] = y[v] / ny;
    }
    throw std::runtime_error("lambda2_estimate: power iteration did not converge");
}

int tw_lower_from_expansion(double alpha, int n) {
    if (alpha < 0) throw std::invalid_argument("tw_lower_from_expansion: alpha must be >= 0");
    if (n < 1) throw std::invalid_argument("tw_lower_from_expansion: n must be >= 1");
    double value = (alpha * (n - 1) - 3.0) / (alpha + 3.0);
    if (value <= 0) return 0;
    // Nudge below before ceiling so float dust cannot overstate the bound.
    return static_cast<int>(std::ceil(value - 1e-9));
}

int tw_lower_from_expansion(long long num, long long den, int n) {
    if (num < 0 || den <= 0) throw std::invalid_argument("tw_lower_from_expansion: bad fraction");
    if (n < 1) throw std::invalid_argument("tw_lower_from_expansion: n must be >= 1");
    // ceil((num (n-1) - 3 den) / (num + 3 den)) in integer arithmetic.
    long long numer = num * (n - 1) - 3 * den;
    long long denom = num + 3 * den;
    if (numer <= 0) return 0;
    return static_cast<int>((numer + denom - 1) / denom);
}

DenseTail dense_separator_tail(int n, double p, double f) {
    if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("dense_separator_tail: need 0 < p <= 1");
    if (!(f > 0.0)) throw std::invalid_argument("dense_separator_tail: need f > 0");
    DenseTail tail;
    const double nn = static_cast<double>(n);
    tail.exponent = std::log(3.0) * nn - (2.0 * f * f / 9.0) * p * nn * nn;
    tail.value = std::exp(tail.exponent);
    tail.f_threshold = 3.0 * std::sqrt(std::log(3.0) / (2.0 * p * nn));
    tail.vanishing_regime = f > tail.f_threshold;
    return tail;
}

namespace {

double sparse_log_base(double c, double alpha, double delta, double gamma) {
    const double beta = alpha * (delta - gamma) / 3.0;
    // ln((e/g)^g (g e c / b)^b) = g (1 - ln g) + b (1 + ln g + ln c - ln b)
    return gamma * (1.0 - std::log(gamma)) +
           beta * (1.0 + std::log(gamma) + std::log(c) - std::log(beta));
}

}  // namespace

SparseTail sparse_cut_tail(double n, double c, double alpha, double delta, double gamma) {
    if (!(c > 0) || !(alpha > 0) || !(delta > 0))
        throw std::invalid_argument("sparse_cut_tail: c, alpha, delta must be positive");
    const double gamma_max = alpha * delta / (3.0 * c + alpha);
    if (!(gamma > 0 && gamma < gamma_max))
        throw std::invalid_argument(
            "sparse_cut_tail: gamma must lie in (0, alpha*delta/(3c+alpha))");
    SparseTail tail;
    tail.beta = alpha * (delta - gamma) / 3.0;
    tail.log_base = sparse_log_base(c, alpha, delta, gamma);
    tail.base = std::exp(tail.log_base);
    tail.log_value = std::log(gamma) + 2.0 * std::log(n) + n * tail.log_base;
    tail.value = std::exp(tail.log_value);
    return tail;
}

double sparse_gamma0(double c, double alpha, double delta, double tolerance) {
    if (!(c > 0) || !(alpha > 0) || !(delta > 0))
        throw std::invalid_argument("sparse_gamma0: c, alpha, delta must be positive");
    const double gamma_max = alpha * delta / (3.0 * c + alpha);
    double hi = gamma_max * (1.0 - 1e-12);
    if (sparse_log_base(c, alpha, delta, hi) < 0.0) return hi;

    double lo = gamma_max * 1e-12;
    while (sparse_log_base(c, alpha, delta, lo) >= 0.0) lo *= 1e-3;  // base -> 0 near 0
    while (hi - lo > tolerance) {
        double mid = 0.5 * (lo + hi);
        if (sparse_log_base(c, alpha, delta, mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return lo;  // base(lo) < 1 certified by the bisection invariant
}

double expansion_constant_explicit(double alpha, double delta, double c) {
    return (alpha * delta) * (alpha * delta) / (9.0 * std::exp(3.0) * c * c);
}

}  // namespace depthlab
