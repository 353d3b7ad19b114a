#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "depthlab/graph.hpp"

namespace depthlab {

/// splitmix64 finalizer (Steele/Lea/Flood constants). Used both as a seed
/// mixer and to expand a single seed into generator state.
std::uint64_t mix64(std::uint64_t x);

/// xoshiro256** (Blackman/Vigna). The generator and all integer/real
/// draws below are implemented here with fixed published constants, so a
/// (params, seed) pair reproduces the same graph on every build.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();
    /// Uniform in [0, 1), 53-bit resolution.
    double next_unit();
    /// Uniform in [0, bound), unbiased (bitmask rejection). bound >= 1.
    std::uint64_t next_below(std::uint64_t bound);

private:
    std::array<std::uint64_t, 4> state_;
};

/// A (base seed, trial index) pair. The per-trial stream is a pure function
/// of both, so concurrent trials with distinct indices are independent and
/// adding trials never perturbs existing ones.
struct RandomSeed {
    std::uint64_t base = 0;
    std::uint64_t trial = 0;

    std::uint64_t word() const;
    Rng stream() const { return Rng(word()); }
};

/// Mixes additional words (regime tags, n, trial, ...) into a base seed.
std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> words);

struct ModelParams {
    enum class Kind { Gnp, Gnm, Regular, LabeledTree };
    Kind kind = Kind::Gnp;
    int n = 0;
    double p = 0.0;     // Gnp
    long long m = 0;    // Gnm
    int d = 0;          // Regular
    int k = 0;          // LabeledTree

    void validate() const;  // throws std::invalid_argument
};

/// p = c/n for the sparse parameterization. Refuses c < 0 or c > n.
double gnp_probability_from_c(int n, double c);

/// G(n,p): every unordered pair independently an edge with probability p.
/// Skip-sampling, so sparse graphs cost O(n + m).
Graph sample_gnp(int n, double p, const RandomSeed& seed);

/// G(n,m): uniform over labeled graphs with exactly m edges.
Graph sample_gnm(int n, long long m, const RandomSeed& seed);

/// Configuration model G(n,d), rejection-resampled until simple.
/// Requires n*d even and d < n.
Graph sample_regular(int n, int d, const RandomSeed& seed);

/// Uniform labeled tree on k vertices via a uniform Prufer sequence.
Graph sample_labeled_tree(int k, const RandomSeed& seed);

Graph sample(const ModelParams& params, const RandomSeed& seed);

/// Prufer bijection helpers (k >= 2; sequence length k-2).
Graph prufer_decode(const std::vector<int>& seq, int k);
std::vector<int> prufer_encode(const Graph& tree);

}  // namespace depthlab
