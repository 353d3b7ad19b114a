#include "depthlab/random.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace depthlab {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed) {
    // Expand via the splitmix64 sequence, as recommended for xoshiro seeding.
    std::uint64_t s = seed;
    for (auto& word : state_) {
        s += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        word = z ^ (z >> 31);
    }
    if (state_[0] == 0 && state_[1] == 0 && state_[2] == 0 && state_[3] == 0) state_[0] = 1;
}

std::uint64_t Rng::next_u64() {
    const std::uint64_t result = std::rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = std::rotl(state_[3], 45);
    return result;
}

double Rng::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::next_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("next_below: bound must be positive");
    if ((bound & (bound - 1)) == 0) return next_u64() & (bound - 1);
    const int bits = 64 - std::countl_zero(bound - 1);
    const std::uint64_t mask = (bits == 64) ? ~0ULL : ((std::uint64_t{1} << bits) - 1);
    for (;;) {
        std::uint64_t x = next_u64() & mask;
        if (x < bound) return x;
    }
}

std::uint64_t RandomSeed::word() const {
    return mix64(mix64(base) ^ mix64(trial + 0x632be59bd9b4e019ULL));
}

std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> words) {
    std::uint64_t acc = mix64(base);
    for (std::uint64_t w : words) acc = mix64(acc ^ mix64(w + 0x632be59bd9b4e019ULL));
    return acc;
}

void ModelParams::validate() const {
    switch (kind) {
        case Kind::Gnp:
            if (n < 0) throw std::invalid_argument("gnp: n must be non-negative");
            if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gnp: p outside [0,1]");
            break;
        case Kind::Gnm: {
            if (n < 0) throw std::invalid_argument("gnm: n must be non-negative");
            long long pairs = static_cast<long long>(n) * (n - 1) / 2;
            if (m < 0 || m > pairs) throw std::invalid_argument("gnm: m out of range");
            break;
        }
        case Kind::Regular:
            if (n < 0) throw std::invalid_argument("regular: n must be non-negative");
            if (d < 0) throw std::invalid_argument("regular: d must be non-negative");
            if ((static_cast<long long>(n) * d) % 2 != 0)
                throw std::invalid_argument("regular: n*d must be even");
            if (d >= n && !(d == 0 && n == 0))
                throw std::invalid_argument("regular: d must be less than n");
            break;
        case Kind::LabeledTree:
            if (k < 1) throw std::invalid_argument("labeled_tree: k must be at least 1");
            break;
    }
}

double gnp_probability_from_c(int n, double c) {
    if (n <= 0) throw std::invalid_argument("c/n parameterization needs n >= 1");
    if (c < 0.0) throw std::invalid_argument("c must be non-negative");
    if (c > static_cast<double>(n)) throw std::invalid_argument("refusing c > n (p would exceed 1)");
    return c / static_cast<double>(n);
}

namespace {

// Linear index over pairs (u,v), u < v, lexicographic: row u starts at
// u*(2n-u-1)/2 and holds n-1-u pairs.
long long pair_count(int n) { return static_cast<long long>(n) * (n - 1) / 2; }

Edge pair_from_index(int n, long long idx) {
    // Binary search the row; rows are short near the end, so this stays exact.
    int lo = 0, hi = n - 1;
    auto row_start = [n](long long u) { return u * (2LL * n - u - 1) / 2; };
    while (lo < hi) {
        int mid = (lo + hi + 1) / 2;
        if (row_start(mid) <= idx)
            lo = mid;
        else
            hi = mid - 1;
    }
    int u = lo;
    int v = static_cast<int>(idx - row_start(u)) + u + 1;
    return {u, v};
}

}  // namespace

Graph sample_gnp(int n, double p, const RandomSeed& seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("sample_gnp: p outside [0,1]");
    const long long total = pair_count(n);
    std::vector<Edge> edges;
    if (p <= 0.0 || total == 0) return Graph::from_edges(n, std::move(edges));
    if (p >= 1.0) return make_complete(n);

    Rng rng = seed.stream();
    // Geometric skips over the pair sequence (Batagelj-Brandes).
    const double log_q = std::log1p(-p);
    long long idx = -1;
    int u = 0, v = 0;  // decoded cursor, advanced incrementally
    long long row_remaining = n - 1;
    for (;;) {
        double unit = rng.next_unit();
        if (unit == 0.0) unit = 0x1.0p-53;
        double skip_f = std::floor(std::log(unit) / log_q);
        long long skip = skip_f >= static_cast<double>(total) ? total
                                                              : static_cast<long long>(skip_f);
        idx += 1 + skip;
        if (idx >= total) break;
        long long step = 1 + skip;
        while (step > row_remaining) {
            step -= row_remaining;
            ++u;
            v = u;
            row_remaining = n - 1 - u;
        }
        v += static_cast<int>(step);
        row_remaining -= step;
        edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, std::move(edges));
}

Graph sample_gnm(int n, long long m, const RandomSeed& seed) {
    const long long total = pair_count(n);
    if (m < 0 || m > total) throw std::invalid_argument("sample_gnm: m out of range");
    Rng rng = seed.stream();

    // Rejection over pair indices; sample the complement when m is large.
    const bool complement = m > total / 2;
    const long long want = complement ? total - m : m;
    std::unordered_set<long long> chosen;
    chosen.reserve(static_cast<std::size_t>(want) * 2 + 16);
    while (static_cast<long long>(chosen.size()) < want)
        chosen.insert(static_cast<long long>(rng.next_below(static_cast<std::uint64_t>(total))));

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    if (complement) {
        for (long long idx = 0; idx < total; ++idx)
            if (!chosen.contains(idx)) edges.push_back(pair_from_index(n, idx));
    } else {
        for (long long idx : chosen) edges.push_back(pair_from_index(n, idx));
    }
    return Graph::from_edges(n, std::move(edges));
}

Graph sample_regular(int n, int d, const RandomSeed& seed) {
    ModelParams params;
    params.kind = ModelParams::Kind::Regular;
    params.n = n;
    params.d = d;
    params.validate();
    if (n == 0 || d == 0) return Graph::from_edges(n, {});

    Rng rng = seed.stream();
    std::vector<int> stubs(static_cast<std::size_t>(n) * d);
    for (int v = 0; v < n; ++v)
        std::fill_n(stubs.begin() + static_cast<std::size_t>(v) * d, d, v);

    // Pair half-edges by Fisher-Yates; reject the whole pairing unless simple.
    for (;;) {
        for (std::size_t i = stubs.size() - 1; i > 0; --i) {
            std::size_t j = static_cast<std::size_t>(rng.next_below(i + 1));
            std::swap(stubs[i], stubs[j]);
        }
        std::vector<Edge> edges;
        edges.reserve(stubs.size() / 2);
        bool simple = true;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int a = stubs[i], b = stubs[i + 1];
            if (a == b) {
                simple = false;
                break;
            }
            if (a > b) std::swap(a, b);
            edges.emplace_back(a, b);
        }
        if (!simple) continue;
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
        return Graph::from_edges(n, std::move(edges));
    }
}

Graph prufer_decode(const std::vector<int>& seq, int k) {
    if (k < 1) throw std::invalid_argument("prufer_decode: k must be at least 1");
    if (static_cast<int>(seq.size()) != std::max(0, k - 2))
        throw std::invalid_argument("prufer_decode: sequence length must be k-2");
    if (k == 1) return Graph::from_edges(1, {});
    std::vector<int> degree(k, 1);
    for (int s : seq) {
        if (s < 0 || s >= k) throw std::invalid_argument("prufer_decode: entry out of range");
        ++degree[s];
    }
    std::vector<Edge> edges;
    edges.reserve(k - 1);
    // Classic linear decode: `ptr` scans for the smallest untouched leaf and
    // a vertex freed by the current step may jump the queue when it is
    // smaller than the scan position.
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int s : seq) {
        edges.emplace_back(std::min(leaf, s), std::max(leaf, s));
        if (--degree[s] == 1 && s < ptr) {
            leaf = s;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, k - 1);
    return Graph::from_edges(k, std::move(edges));
}

std::vector<int> prufer_encode(const Graph& tree) {
    const int k = tree.order();
    if (k < 1) throw std::invalid_argument("prufer_encode: empty graph");
    if (tree.size() != k - 1) throw std::invalid_argument("prufer_encode: not a tree");
    if (k <= 2) {
        if (k == 2 && tree.size() != 1) throw std::invalid_argument("prufer_encode: not a tree");
        return {};
    }
    std::vector<int> degree(k);
    for (int v = 0; v < k; ++v) degree[v] = tree.degree(v);
    std::vector<bool> removed(k, false);
    std::vector<int> seq;
    seq.reserve(k - 2);
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int step = 0; step < k - 2; ++step) {
        removed[leaf] = true;
        int nbr = -1;
        for (int w : tree.neighbors(leaf))
            if (!removed[w]) {
                nbr = w;
                break;
            }
        if (nbr < 0) throw std::invalid_argument("prufer_encode: not a tree");
        seq.push_back(nbr);
        if (--degree[nbr] == 1 && nbr < ptr) {
            leaf = nbr;
        } else {
            ++ptr;
            while (ptr < k && degree[ptr] != 1) ++ptr;
            if (ptr >= k) throw std::invalid_argument("prufer_encode: not a tree");
            leaf = ptr;
        }
    }
    return seq;
}

Graph sample_labeled_tree(int k, const RandomSeed& seed) {
    if (k < 1) throw std::invalid_argument("sample_labeled_tree: k must be at least 1");
    if (k == 1) return Graph::from_edges(1, {});
    if (k == 2) return Graph::from_edges(2, {{0, 1}});
    Rng rng = seed.stream();
    std::vector<int> seq(k - 2);
    for (int& s : seq) s = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(k)));
    return prufer_decode(seq, k);
}

Graph sample(const ModelParams& params, const RandomSeed& seed) {
    params.validate();
    switch (params.kind) {
        case ModelParams::Kind::Gnp:
            return sample_gnp(params.n, params.p, seed);
        case ModelParams::Kind::Gnm:
            return sample_gnm(params.n, params.m, seed);
        case ModelParams::Kind::Regular:
            return sample_regular(params.n, params.d, seed);
        case ModelParams::Kind::LabeledTree:
            return sample_labeled_tree(params.k, seed);
    }
    throw std::logic_error("unreachable");
}

}  // namespace depthlab
