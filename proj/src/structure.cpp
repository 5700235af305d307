#include "sbg/structure.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace sbg {

namespace {

bool multiplicity_everywhere(const SignedBiGraph& g, int lo, int hi) {
    const auto vs = g.vertices();
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j) {
            int m = g.multiplicity(vs[i], vs[j]);
            if (m < lo || m > hi) return false;
        }
    return true;
}

// Pairs with m(u,v) == 1, as index pairs into the sorted vertex list.
std::vector<std::pair<int, int>> deficient_pairs(const AdjacencyMatrix& m) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < m.n; ++i)
        for (int j = i + 1; j < m.n; ++j)
            if (std::popcount(m.at(i, j)) == 1) out.emplace_back(i, j);
    return out;
}

} // namespace

bool is_complete(const SignedBiGraph& g) { return multiplicity_everywhere(g, 1, 2); }
bool is_just_complete(const SignedBiGraph& g) { return multiplicity_everywhere(g, 1, 1); }
bool is_bi_complete(const SignedBiGraph& g) { return multiplicity_everywhere(g, 2, 2); }

std::optional<int> thinness(const SignedBiGraph& g) {
    const AdjacencyMatrix m = AdjacencyMatrix::from(g);
    for (int i = 0; i < m.n; ++i)
        for (int j = i + 1; j < m.n; ++j)
            if (m.at(i, j) == 0) return std::nullopt;
    auto deficient = deficient_pairs(m);
    std::set<int> touched;
    for (auto [i, j] : deficient) {
        if (!touched.insert(i).second || !touched.insert(j).second)
            return std::nullopt; // deficient pairs share a vertex: no k works
    }
    return static_cast<int>(deficient.size());
}

bool is_k_thin(const SignedBiGraph& g, int k) {
    if (k < 0) throw error("thinness parameter must be >= 0");
    auto t = thinness(g);
    return t && *t <= k;
}

std::optional<std::vector<std::array<std::string, 3>>> nabla_partition(const SignedBiGraph& g) {
    const AdjacencyMatrix m = AdjacencyMatrix::from(g);
    if (m.n == 0 || m.n % 3 != 0) return std::nullopt;
    for (int i = 0; i < m.n; ++i)
        for (int j = i + 1; j < m.n; ++j)
            if (m.at(i, j) == 0) return std::nullopt;

    // Inside a removed triangle only the negative edge survives, so each
    // vertex must see exactly two m=1 partners, both via a '-' edge, and
    // the partner relation must close into triangles.
    std::vector<std::vector<int>> partner(m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) {
            if (i == j) continue;
            if (std::popcount(m.at(i, j)) != 1) continue;
            if (m.at(i, j) != 2) return std::nullopt; // surviving edge must be negative
            partner[i].push_back(j);
        }
    std::vector<std::array<std::string, 3>> triples;
    std::vector<bool> placed(m.n, false);
    for (int i = 0; i < m.n; ++i) {
        if (placed[i]) continue;
        if (partner[i].size() != 2) return std::nullopt;
        int a = partner[i][0], b = partner[i][1];
        if (placed[a] || placed[b]) return std::nullopt;
        if (std::popcount(m.at(a, b)) != 1) return std::nullopt;
        if (partner[a].size() != 2 || partner[b].size() != 2) return std::nullopt;
        placed[i] = placed[a] = placed[b] = true;
        std::array<std::string, 3> t{m.names[i], m.names[a], m.names[b]};
        std::sort(t.begin(), t.end());
        triples.push_back(t);
    }
    return triples;
}

bool is_nabla_complete(const SignedBiGraph& g) { return nabla_partition(g).has_value(); }

std::vector<TripleCode> find_triples(const SignedBiGraph& g) {
    const AdjacencyMatrix m = AdjacencyMatrix::from(g);
    static constexpr std::array<std::pair<Sign, Sign>, 4> ab_order{{
        {Sign::plus, Sign::plus},
        {Sign::plus, Sign::minus},
        {Sign::minus, Sign::plus},
        {Sign::minus, Sign::minus},
    }};
    auto contains = [&](int i, int j, Sign s) {
        return (m.at(i, j) & (s == Sign::plus ? 1 : 2)) != 0;
    };
    std::vector<TripleCode> out;
    for (int x = 0; x < m.n; ++x)
        for (int y = 0; y < m.n; ++y)
            for (int z = 0; z < m.n; ++z) {
                if (x == y || x == z || y == z) continue;
                TripleCode t{{m.names[x], m.names[y], m.names[z]}, {}};
                for (auto [a, b] : ab_order) {
                    Sign c = a * b;
                    if (!contains(x, y, a) && !contains(x, z, b) && contains(y, z, c))
                        t.codes.push_back({a, b, c});
                }
                if (!t.codes.empty()) out.push_back(std::move(t));
            }
    return out;
}

} // namespace sbg
