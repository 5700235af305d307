#include "sbg/coloring.hpp"

#include <algorithm>
#include <bit>

#include "sbg/signatures.hpp"

namespace sbg {

bool is_valid_coloring(const SignedBiGraph& g, const Coloring& c) {
    if (c.k < 1) throw error("modulus k must be >= 1");
    for (const auto& v : g.vertices()) {
        auto it = c.assignment.find(v);
        if (it == c.assignment.end()) throw error("coloring misses vertex '" + v + "'");
        if (it->second < 0 || it->second >= c.k)
            throw error("residue " + std::to_string(it->second) + " of '" + v +
                        "' is outside Z_" + std::to_string(c.k));
    }
    for (const auto& e : g.edges()) {
        int cu = c.assignment.at(e.u);
        int cv = c.assignment.at(e.v);
        int rhs = e.sign == Sign::plus ? cv : (c.k - cv) % c.k;
        if (cu == rhs) return false;
    }
    return true;
}

std::optional<Coloring> find_k_coloring(const SignedBiGraph& g, int k) {
    if (k < 1) throw error("modulus k must be >= 1");
    if (k > 62) throw error("modulus k > 62 is not supported");
    const AdjacencyMatrix m = AdjacencyMatrix::from(g);
    const int n = m.n;
    if (n == 0) return Coloring{k, {}};

    const std::uint64_t all = (std::uint64_t{1} << k) - 1;
    std::vector<std::uint64_t> forbidden(n, 0);
    std::vector<int> color(n, -1);

    std::function<bool(int)> solve = [&](int assigned) -> bool {
        if (assigned == n) return true;
        // most constrained vertex = largest forbidden set; ties by name order
        int pick = -1;
        int best = -1;
        for (int i = 0; i < n; ++i) {
            if (color[i] >= 0) continue;
            int f = std::popcount(forbidden[i] & all);
            if (f > best) {
                best = f;
                pick = i;
            }
        }
        for (int r = 0; r < k; ++r) {
            if (forbidden[pick] & (std::uint64_t{1} << r)) continue;
            color[pick] = r;
            std::vector<std::pair<int, std::uint64_t>> undo;
            for (int j = 0; j < n; ++j) {
                if (color[j] >= 0) continue;
                std::uint8_t mask = m.at(pick, j);
                if (!mask) continue;
                std::uint64_t add = 0;
                if (mask & 1) add |= std::uint64_t{1} << r;             // positive: c(j) != r
                if (mask & 2) add |= std::uint64_t{1} << ((k - r) % k); // negative: c(j) != -r
                if (add & ~forbidden[j]) {
                    undo.emplace_back(j, forbidden[j]);
                    forbidden[j] |= add;
                }
            }
            if (solve(assigned + 1)) return true;
            for (auto& [j, old] : undo) forbidden[j] = old;
            color[pick] = -1;
        }
        return false;
    };

    if (!solve(0)) return std::nullopt;
    Coloring c{k, {}};
    for (int i = 0; i < n; ++i) c.assignment[m.names[i]] = color[i];
    return c;
}

int chromatic_number(const SignedBiGraph& g) {
    if (g.order() == 0) return 0;
    if (g.size() == 0) return 1;
    int bound = 2 * g.order() - 2;
    for (int k = 1; k <= bound; ++k)
        if (find_k_coloring(g, k)) return k;
    throw error("no coloring within the 2n-2 bound; bi-graph invariant broken");
}

std::vector<PartiteSet> partite_sets(const SignedBiGraph& g, const Coloring& c) {
    if (!is_valid_coloring(g, c)) throw error("coloring is not valid for the graph");
    std::map<int, std::vector<std::string>> classes;
    for (const auto& v : g.vertices()) {
        int x = c.assignment.at(v);
        classes[std::min(x, (c.k - x) % c.k)].push_back(v);
    }
    std::vector<PartiteSet> out;
    for (auto& [mag, members] : classes) out.push_back({mag, std::move(members)});
    return out;
}

AdjacencyClass classify_adjacency(const SignedBiGraph& g, const std::set<std::string>& u,
                                  const std::set<std::string>& v) {
    if (u.empty() || v.empty()) throw error("adjacency classes need nonempty sets");
    for (const auto& x : u)
        if (v.count(x)) throw error("adjacency classes need disjoint sets ('" + x + "' is shared)");
    int lo = 2, hi = 0;
    for (const auto& a : u)
        for (const auto& b : v) {
            int m = g.multiplicity(a, b);
            lo = std::min(lo, m);
            hi = std::max(hi, m);
        }
    if (lo == 2) return AdjacencyClass::bi_completely;
    if (lo == 1 && hi == 1) return AdjacencyClass::just_completely;
    if (lo >= 1) return AdjacencyClass::completely;
    return AdjacencyClass::not_completely;
}

SignedBiGraph induced_subgraph(const SignedBiGraph& g, const std::set<std::string>& u) {
    SignedBiGraph out;
    for (const auto& v : u) {
        if (!g.has_vertex(v)) throw error("unknown vertex '" + v + "'");
        out = out.add_vertex(v);
    }
    for (const auto& e : g.edges())
        if (u.count(e.u) && u.count(e.v)) out = out.add_edge(e.u, e.v, e.sign);
    return out;
}

bool is_independent_set(const SignedBiGraph& g, const std::set<std::string>& u) {
    return induced_subgraph(g, u).size() == 0;
}

bool is_antibalanced_set(const SignedBiGraph& g, const std::set<std::string>& u) {
    return is_antibalanced(induced_subgraph(g, u));
}

} // namespace sbg
