#include "sbg/random.hpp"

#include "sbg/coloring.hpp"

namespace sbg {

SignedBiGraph random_signed_bigraph(Rng& rng, int n, const PairWeights& w) {
    SignedBiGraph g;
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) {
        names.push_back("v" + std::to_string(i));
        g = g.add_vertex(names.back());
    }
    const double total = w.none + w.plus + w.minus + w.pair;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double x = (static_cast<double>(rng.next() >> 11) * 0x1.0p-53) * total;
            if (x < w.none) continue;
            if (x < w.none + w.plus) {
                g = g.add_edge(names[i], names[j], Sign::plus);
            } else if (x < w.none + w.plus + w.minus) {
                g = g.add_edge(names[i], names[j], Sign::minus);
            } else {
                g = g.add_edge(names[i], names[j], Sign::plus);
                g = g.add_edge(names[i], names[j], Sign::minus);
            }
        }
    return g;
}

SignedBiGraph random_non_q_colorable(Rng& rng, int max_n, int q, int max_attempts) {
    // chi <= 2n-2, so fewer than (q+3)/2 vertices can never work
    const int min_n = (q + 3 + 1) / 2;
    if (max_n < min_n)
        throw error("no graph on " + std::to_string(max_n) + " vertices can exceed chromatic number " +
                    std::to_string(q));
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        PairWeights w;
        if (attempt > max_attempts / 2) w = {0.02, 0.14, 0.14, 0.70};
        int n = rng.range(min_n, max_n);
        SignedBiGraph g = random_signed_bigraph(rng, n, w);
        if (!find_k_coloring(g, q)) return g;
    }
    throw error("failed to sample a non-" + std::to_string(q) + "-colorable graph");
}

} // namespace sbg
