#include "sbg/graph.hpp"

#include <algorithm>
#include <bit>

namespace sbg {

namespace {

std::uint8_t sign_bit(Sign s) { return s == Sign::plus ? 1 : 2; }

} // namespace

SignedBiGraph::PairKey SignedBiGraph::key(const std::string& a, const std::string& b) {
    return a < b ? PairKey{a, b} : PairKey{b, a};
}

void SignedBiGraph::require_vertex(const std::string& name) const {
    if (!has_vertex(name)) throw error("unknown vertex '" + name + "'");
}

SignedBiGraph SignedBiGraph::complete_positive(int n, const std::string& prefix) {
    SignedBiGraph g;
    for (int i = 1; i <= n; ++i) g.vertices_.insert(prefix + std::to_string(i));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            g.pairs_[key(prefix + std::to_string(i), prefix + std::to_string(j))] = 1;
    return g;
}

SignedBiGraph SignedBiGraph::complete_negative(int n, const std::string& prefix) {
    SignedBiGraph g = complete_positive(n, prefix);
    for (auto& [k, mask] : g.pairs_) mask = 2;
    return g;
}

SignedBiGraph SignedBiGraph::bi_complete(int n, const std::string& prefix) {
    SignedBiGraph g = complete_positive(n, prefix);
    for (auto& [k, mask] : g.pairs_) mask = 3;
    return g;
}

int SignedBiGraph::size() const {
    int total = 0;
    for (const auto& [k, mask] : pairs_) total += std::popcount(mask);
    return total;
}

std::vector<std::string> SignedBiGraph::vertices() const {
    return {vertices_.begin(), vertices_.end()};
}

std::vector<SignedEdge> SignedBiGraph::edges() const {
    std::vector<SignedEdge> out;
    out.reserve(pairs_.size());
    for (const auto& [k, mask] : pairs_) {
        if (mask & 1) out.push_back({k.first, k.second, Sign::plus});
        if (mask & 2) out.push_back({k.first, k.second, Sign::minus});
    }
    return out;
}

int SignedBiGraph::multiplicity(const std::string& u, const std::string& v) const {
    require_vertex(u);
    require_vertex(v);
    if (u == v) throw error("multiplicity is undefined for a vertex with itself ('" + u + "')");
    auto it = pairs_.find(key(u, v));
    return it == pairs_.end() ? 0 : std::popcount(it->second);
}

bool SignedBiGraph::has_edge(const std::string& u, const std::string& v, Sign s) const {
    if (u == v) return false;
    auto it = pairs_.find(key(u, v));
    return it != pairs_.end() && (it->second & sign_bit(s));
}

std::uint8_t SignedBiGraph::pair_mask(const std::string& u, const std::string& v) const {
    if (u == v) return 0;
    auto it = pairs_.find(key(u, v));
    return it == pairs_.end() ? 0 : it->second;
}

std::vector<std::string> SignedBiGraph::neighbors(const std::string& v) const {
    require_vertex(v);
    std::vector<std::string> out;
    for (const auto& [k, mask] : pairs_) {
        if (k.first == v) out.push_back(k.second);
        else if (k.second == v) out.push_back(k.first);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SignedEdge> SignedBiGraph::incident_edges(const std::string& v) const {
    require_vertex(v);
    std::vector<SignedEdge> out;
    for (const auto& [k, mask] : pairs_) {
        if (k.first != v && k.second != v) continue;
        if (mask & 1) out.push_back({k.first, k.second, Sign::plus});
        if (mask & 2) out.push_back({k.first, k.second, Sign::minus});
    }
    return out;
}

SignedBiGraph SignedBiGraph::add_vertex(const std::string& name) const {
    if (name.empty()) throw error("vertex name must be nonempty");
    if (has_vertex(name)) throw error("duplicate vertex '" + name + "'");
    SignedBiGraph g = *this;
    g.vertices_.insert(name);
    return g;
}

SignedBiGraph SignedBiGraph::add_edge(const std::string& u, const std::string& v, Sign s) const {
    require_vertex(u);
    require_vertex(v);
    if (u == v) throw error("loop at '" + u + "' not allowed");
    SignedBiGraph g = *this;
    std::uint8_t& mask = g.pairs_[key(u, v)];
    if (mask & sign_bit(s))
        throw error("duplicate edge " + u + " " + v + " " + sign_char(s));
    mask |= sign_bit(s);
    return g;
}

SignedBiGraph SignedBiGraph::remove_edge(const std::string& u, const std::string& v, Sign s) const {
    require_vertex(u);
    require_vertex(v);
    if (!has_edge(u, v, s))
        throw error("no edge " + u + " " + v + " " + sign_char(s) + " to remove");
    SignedBiGraph g = *this;
    auto it = g.pairs_.find(key(u, v));
    it->second &= static_cast<std::uint8_t>(~sign_bit(s));
    if (it->second == 0) g.pairs_.erase(it);
    return g;
}

SignedBiGraph SignedBiGraph::remove_vertex(const std::string& v) const {
    require_vertex(v);
    SignedBiGraph g;
    g.vertices_ = vertices_;
    g.vertices_.erase(v);
    for (const auto& [k, mask] : pairs_)
        if (k.first != v && k.second != v) g.pairs_.insert({k, mask});
    return g;
}

SignedBiGraph SignedBiGraph::identify_vertices(const std::string& u, const std::string& v) const {
    require_vertex(u);
    require_vertex(v);
    if (u == v) throw error("cannot identify '" + u + "' with itself");
    if (multiplicity(u, v) != 0)
        throw error("cannot identify adjacent vertices '" + u + "' and '" + v + "'");
    SignedBiGraph g;
    g.vertices_ = vertices_;
    g.vertices_.erase(v);
    for (const auto& [k, mask] : pairs_) {
        const std::string& a = k.first == v ? u : k.first;
        const std::string& b = k.second == v ? u : k.second;
        g.pairs_[key(a, b)] |= mask; // same-sign duplicates coalesce here
    }
    return g;
}

SignedBiGraph SignedBiGraph::rename_vertices(const std::map<std::string, std::string>& mapping) const {
    auto renamed = [&](const std::string& name) -> const std::string& {
        auto it = mapping.find(name);
        return it == mapping.end() ? name : it->second;
    };
    SignedBiGraph g;
    for (const auto& v : vertices_) {
        const std::string& name = renamed(v);
        if (name.empty()) throw error("vertex name must be nonempty");
        if (!g.vertices_.insert(name).second)
            throw error("rename collapses two vertices onto '" + name + "'");
    }
    for (const auto& [k, mask] : pairs_) g.pairs_[key(renamed(k.first), renamed(k.second))] = mask;
    return g;
}

int AdjacencyMatrix::index_of(const std::string& name) const {
    auto it = std::lower_bound(names.begin(), names.end(), name);
    if (it == names.end() || *it != name) throw error("unknown vertex '" + name + "'");
    return static_cast<int>(it - names.begin());
}

AdjacencyMatrix AdjacencyMatrix::from(const SignedBiGraph& g) {
    AdjacencyMatrix m;
    m.names = g.vertices();
    m.n = static_cast<int>(m.names.size());
    m.cells.assign(static_cast<size_t>(m.n) * m.n, 0);
    for (const auto& e : g.edges()) {
        int i = m.index_of(e.u);
        int j = m.index_of(e.v);
        std::uint8_t bit = e.sign == Sign::plus ? 1 : 2;
        m.cells[static_cast<size_t>(i) * m.n + j] |= bit;
        m.cells[static_cast<size_t>(j) * m.n + i] |= bit;
    }
    return m;
}

SignedBiGraph reduce_multigraph(std::span<const std::string> vertices,
                                std::span<const EdgeRef> edges) {
    SignedBiGraph g;
    for (const auto& v : vertices) g = g.add_vertex(v);
    for (const auto& e : edges) {
        if (e.u == e.v) throw error("loop at '" + e.u + "' not allowed");
        if (!g.has_vertex(e.u)) throw error("unknown vertex '" + e.u + "'");
        if (!g.has_vertex(e.v)) throw error("unknown vertex '" + e.v + "'");
        if (!g.has_edge(e.u, e.v, e.sign)) g = g.add_edge(e.u, e.v, e.sign);
    }
    return g;
}

namespace {

// Per-vertex profile: counts of incident plus-only, minus-only and parallel
// pairs. Isomorphisms must preserve it, which prunes most of the search.
struct VertexProfile {
    int plus_only = 0, minus_only = 0, digon = 0;
    auto operator<=>(const VertexProfile&) const = default;
};

std::vector<VertexProfile> profiles(const AdjacencyMatrix& m, bool respect_signs) {
    std::vector<VertexProfile> out(m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) {
            switch (m.at(i, j)) {
                case 1: ++out[i].plus_only; break;
                case 2: ++out[i].minus_only; break;
                case 3: ++out[i].digon; break;
                default: break;
            }
        }
    if (!respect_signs)
        for (auto& p : out) {
            p.plus_only += p.minus_only; // only degree by multiplicity matters
            p.minus_only = 0;
        }
    return out;
}

} // namespace

bool any_isomorphism(const SignedBiGraph& g, const SignedBiGraph& h, bool respect_signs,
                     const std::function<bool(const std::map<std::string, std::string>&)>& accept) {
    if (g.order() != h.order() || g.size() != h.size()) return false;
    const AdjacencyMatrix gm = AdjacencyMatrix::from(g);
    const AdjacencyMatrix hm = AdjacencyMatrix::from(h);
    const int n = gm.n;
    if (n == 0) return accept({});

    auto gp = profiles(gm, respect_signs);
    auto hp = profiles(hm, respect_signs);
    {
        auto gs = gp, hs = hp;
        std::sort(gs.begin(), gs.end());
        std::sort(hs.begin(), hs.end());
        if (gs != hs) return false;
    }

    auto compatible = [&](std::uint8_t a, std::uint8_t b) {
        return respect_signs ? a == b : std::popcount(a) == std::popcount(b);
    };

    // Assign the most constrained side first: rarest profile, then degree.
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::map<VertexProfile, int> freq;
    for (const auto& p : gp) ++freq[p];
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (freq[gp[a]] != freq[gp[b]]) return freq[gp[a]] < freq[gp[b]];
        return a < b;
    });

    std::vector<int> image(n, -1);
    std::vector<bool> used(n, false);

    std::function<bool(int)> extend = [&](int depth) -> bool {
        if (depth == n) {
            std::map<std::string, std::string> witness;
            for (int i = 0; i < n; ++i) witness[gm.names[i]] = hm.names[image[i]];
            return accept(witness);
        }
        int i = order[depth];
        for (int j = 0; j < n; ++j) {
            if (used[j] || gp[i] != hp[j]) continue;
            bool ok = true;
            for (int d = 0; d < depth && ok; ++d) {
                int i2 = order[d];
                ok = compatible(gm.at(i, i2), hm.at(j, image[i2]));
            }
            if (!ok) continue;
            image[i] = j;
            used[j] = true;
            if (extend(depth + 1)) return true;
            used[j] = false;
            image[i] = -1;
        }
        return false;
    };
    return extend(0);
}

std::optional<std::map<std::string, std::string>> find_isomorphism(const SignedBiGraph& g,
                                                                   const SignedBiGraph& h) {
    std::optional<std::map<std::string, std::string>> witness;
    any_isomorphism(g, h, true, [&](const std::map<std::string, std::string>& w) {
        witness = w;
        return true;
    });
    return witness;
}

bool is_isomorphic(const SignedBiGraph& g, const SignedBiGraph& h) {
    return any_isomorphism(g, h, true, [](const auto&) { return true; });
}

} // namespace sbg
