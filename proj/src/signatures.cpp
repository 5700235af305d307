#include "sbg/signatures.hpp"

#include <bit>
#include <vector>

namespace sbg {

SignedBiGraph switch_at(const SignedBiGraph& g, const std::string& v) {
    SwitchSet s{v};
    if (!g.has_vertex(v)) throw error("unknown vertex '" + v + "'");
    return switch_set(g, s);
}

SignedBiGraph switch_set(const SignedBiGraph& g, const SwitchSet& s) {
    for (const auto& v : s)
        if (!g.has_vertex(v)) throw error("unknown vertex '" + v + "'");
    SignedBiGraph out;
    for (const auto& v : g.vertices()) out = out.add_vertex(v);
    for (const auto& e : g.edges()) {
        bool flip = s.count(e.u) != s.count(e.v); // exactly one end switched
        out = out.add_edge(e.u, e.v, flip ? opposite(e.sign) : e.sign);
    }
    return out;
}

SignedBiGraph negate(const SignedBiGraph& g) {
    SignedBiGraph out;
    for (const auto& v : g.vertices()) out = out.add_vertex(v);
    for (const auto& e : g.edges()) out = out.add_edge(e.u, e.v, opposite(e.sign));
    return out;
}

Sign sign_product(const SignedBiGraph& g, std::span<const EdgeRef> edges) {
    Sign p = Sign::plus;
    for (const auto& e : edges) {
        if (!g.has_vertex(e.u) || !g.has_vertex(e.v) || !g.has_edge(e.u, e.v, e.sign))
            throw error("edge " + e.u + " " + e.v + " " + sign_char(e.sign) +
                        " does not belong to the graph");
        p = p * e.sign;
    }
    return p;
}

namespace {

// Solve s(u)*s(v) = req(u,v) over {+1,-1} by BFS per component; req comes
// from the m=1 pairs only. Returns states, or nullopt on contradiction.
std::optional<std::vector<int>> solve_states(const AdjacencyMatrix& m,
                                             const std::function<std::optional<int>(int, int)>& req) {
    const int n = m.n;
    std::vector<int> state(n, 0);
    for (int root = 0; root < n; ++root) {
        if (state[root] != 0) continue;
        state[root] = 1; // smallest unassigned name stays out of the switch set
        std::vector<int> queue{root};
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            for (int v = 0; v < n; ++v) {
                auto r = req(u, v);
                if (!r) continue;
                int want = state[u] * *r;
                if (state[v] == 0) {
                    state[v] = want;
                    queue.push_back(v);
                } else if (state[v] != want) {
                    return std::nullopt;
                }
            }
        }
    }
    return state;
}

} // namespace

bool is_balanced(const SignedBiGraph& g) {
    const AdjacencyMatrix m = AdjacencyMatrix::from(g);
    for (auto c : m.cells)
        if (c == 3) return false; // a digon is an unbalanced 2-circuit
    auto states = solve_states(m, [&](int u, int v) -> std::optional<int> {
        switch (m.at(u, v)) {
            case 1: return 1;   // want s(u)s(v)*(+1) = +1
            case 2: return -1;  // want s(u)s(v)*(-1) = +1
            default: return std::nullopt;
        }
    });
    return states.has_value();
}

bool is_antibalanced(const SignedBiGraph& g) { return is_balanced(negate(g)); }

std::optional<SwitchSet> switch_equivalence_witness(const SignedBiGraph& g,
                                                    const SignedBiGraph& h) {
    if (g.vertices() != h.vertices())
        throw error("switch equivalence requires identical vertex sets");
    const AdjacencyMatrix gm = AdjacencyMatrix::from(g);
    const AdjacencyMatrix hm = AdjacencyMatrix::from(h);
    for (size_t i = 0; i < gm.cells.size(); ++i)
        if (std::popcount(gm.cells[i]) != std::popcount(hm.cells[i]))
            throw error("switch equivalence requires identical multiplicities");
    auto states = solve_states(gm, [&](int u, int v) -> std::optional<int> {
        if (std::popcount(gm.at(u, v)) != 1) return std::nullopt;
        int sg = gm.at(u, v) == 1 ? 1 : -1;
        int sh = hm.at(u, v) == 1 ? 1 : -1;
        return sg * sh; // flip needed iff signs differ
    });
    if (!states) return std::nullopt;
    SwitchSet s;
    for (int i = 0; i < gm.n; ++i)
        if ((*states)[i] == -1) s.insert(gm.names[i]);
    return s;
}

bool switch_isomorphic(const SignedBiGraph& g, const SignedBiGraph& h) {
    return any_isomorphism(g, h, false, [&](const std::map<std::string, std::string>& w) {
        return switch_equivalence_witness(g.rename_vertices(w), h).has_value();
    });
}

} // namespace sbg
