#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "depthlab/graph.hpp"

namespace depthlab {

inline constexpr int kDefaultPartitionSearchLimit = 15;
inline constexpr int kDefaultSubsetEnumLimit = 24;

/// (A, S, B) with |S| = k+1, no A-B edge, and
/// (n-k-1)/3 <= |A|, |B| <= 2(n-k-1)/3.
struct BalancedPartition {
    std::vector<int> a;
    std::vector<int> s;
    std::vector<int> b;
    int k = 0;
};

/// Checks all partition conditions. Throws if the three sets are not a
/// partition of V(g); returns false for violations of the size window,
/// |S| != k+1, or an A-B edge.
bool is_balanced_kpartition(const Graph& g, const BalancedPartition& part);

/// Exhaustive search over separators S of size k+1; the remaining components
/// are grouped into the two sides by subset-sum. Returns nullopt only when
/// no balanced k-partition exists (certified absence: by the contrapositive
/// of the balanced-partition lemma, absence with k <= n-4 implies tw > k).
/// Throws if order() > limit.
std::optional<BalancedPartition> find_balanced_kpartition(
    const Graph& g, int k, int limit = kDefaultPartitionSearchLimit);

/// An extremal cut ratio with its witness set. value == num / den exactly.
struct ExpansionWitness {
    long long num = 0;
    long long den = 1;
    double value = 0.0;
    std::vector<int> witness;  // ascending
};

/// Exact edge Cheeger constant: min over 0 < |X| <= n/2 of
/// e(X, V\X) / e(X, V), by full subset enumeration. Requires g connected
/// and order() <= limit.
ExpansionWitness cheeger_exact(const Graph& g, int limit = kDefaultSubsetEnumLimit);

/// Exact vertex expansion: min over 0 < |X| <= ceil(n/2) of |N(X)\X| / |X|.
/// Same preconditions as cheeger_exact.
ExpansionWitness vertex_expansion_exact(const Graph& g, int limit = kDefaultSubsetEnumLimit);

struct SpectralReport {
    double lambda2 = 0.0;        // second-largest adjacency eigenvalue
    double residual = 0.0;       // ||A x - lambda2 x|| at termination
    int iterations = 0;
    double conductance_bound = 0.0;  // (1 - lambda2/d) / 2, normalized form
};

/// Second-largest adjacency eigenvalue of a connected d-regular graph by
/// power iteration on A + dI with the all-ones eigenvector deflated (the
/// shift keeps the target dominant even when the smallest eigenvalue has
/// the largest magnitude, e.g. bipartite graphs). Also reports the
/// normalized conductance bound (1 - lambda2/d)/2, which is the form of
/// the spectral bound consistent with the edge Cheeger constant above;
/// the unnormalized (d - lambda2)/2 variant can exceed 1 and is not used.
SpectralReport lambda2_estimate(const Graph& g, double tolerance = 1e-9,
                                int max_iterations = 200000);

/// ceil((alpha (n-1) - 3) / (alpha + 3)), clamped at 0. A valid tree-width
/// lower bound whenever alpha is a certified vertex-expansion constant.
int tw_lower_from_expansion(double alpha, int n);
/// Same bound with alpha = num/den evaluated in exact integer arithmetic.
int tw_lower_from_expansion(long long num, long long den, int n);

/// Union bound exp((ln 3) n - (2 f^2 / 9) p n^2) on the existence of a
/// balanced k-partition with k <= (1-f) n in G(n,p).
struct DenseTail {
    double exponent = 0.0;
    double value = 0.0;
    double f_threshold = 0.0;      // 3 sqrt(ln 3 / (2 p n)); exponent sign flips here
    bool vanishing_regime = false;  // f > f_threshold
};

DenseTail dense_separator_tail(int n, double p, double f);

/// Union bound gamma n^2 ((e/gamma)^gamma (gamma e c / beta)^beta)^n on the
/// existence of a set S with |S| = gamma n and e(S, V) >= beta n in G(n,c/n),
/// where beta = alpha (delta - gamma) / 3. Requires
/// 0 < gamma < alpha delta / (3c + alpha).
struct SparseTail {
    double beta = 0.0;
    double log_base = 0.0;  // natural log of the per-vertex base
    double base = 0.0;
    double log_value = 0.0;
    double value = 0.0;
};

SparseTail sparse_cut_tail(double n, double c, double alpha, double delta, double gamma);

/// Largest gamma0 in (0, alpha delta / (3c + alpha)) with base < 1, located
/// by bisection to `tolerance`; the returned point is certified (base < 1
/// re-checked). The base tends to 0 as gamma -> 0, so gamma0 always exists.
double sparse_gamma0(double c, double alpha, double delta, double tolerance = 1e-9);

/// The explicit linear tree-width constant (alpha delta)^2 / (9 e^3 c^2):
/// tw >= const * n for G(n, c/n) holding an alpha-edge-expander of order
/// delta n.
double expansion_constant_explicit(double alpha, double delta, double c);

}  // namespace depthlab
