#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sbg/graph.hpp"

namespace sbg {

// Seeded generator with explicit draw helpers, so identical seeds give
// identical streams independent of the standard library's distribution
// implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // uniform in [0, n)
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

    // uniform in [lo, hi]
    int range(int lo, int hi) { return lo + below(hi - lo + 1); }

    bool chance(double p) { return static_cast<double>(next() >> 11) * 0x1.0p-53 < p; }

    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[below(static_cast<int>(v.size()))];
    }

private:
    std::mt19937_64 eng_;
};

// Per-pair category weights for the random model: the categories are
// no edge / single '+' / single '-' / parallel pair.
struct PairWeights {
    double none = 0.15, plus = 0.25, minus = 0.25, pair = 0.35;
};

SignedBiGraph random_signed_bigraph(Rng& rng, int n, const PairWeights& w = {});

// Rejection-sample a graph on at most max_n vertices that admits no
// q-coloring, ramping up density along the attempts.
SignedBiGraph random_non_q_colorable(Rng& rng, int max_n, int q, int max_attempts = 20000);

} // namespace sbg
