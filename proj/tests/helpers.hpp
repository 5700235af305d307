#pragma once

#include <map>
#include <string>
#include <vector>

#include "sbg/graph.hpp"
#include "sbg/random.hpp"

namespace test_util {

// Exhaustive k^n oracle, independent of the solver: walks every
// assignment and checks the edge constraints straight from the
// definition.
inline bool oracle_exists_coloring(const sbg::SignedBiGraph& g, int k) {
    const auto vs = g.vertices();
    const int n = static_cast<int>(vs.size());
    if (n == 0) return true;
    if (k < 1) return false;
    std::map<std::string, int> index;
    for (int i = 0; i < n; ++i) index[vs[i]] = i;
    const auto edges = g.edges();
    std::vector<int> a(n, 0);
    while (true) {
        bool ok = true;
        for (const auto& e : edges) {
            int cu = a[index[e.u]];
            int cv = a[index[e.v]];
            int rhs = e.sign == sbg::Sign::plus ? cv : (k - cv) % k;
            if (cu == rhs) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
        int i = 0;
        while (i < n && ++a[i] == k) {
            a[i] = 0;
            ++i;
        }
        if (i == n) return false;
    }
}

// Same exhaustive oracle, but straight over a raw edge multiset (the
// multigraph side of the reduction property).
inline bool oracle_multigraph_colorable(const std::vector<std::string>& vs,
                                        const std::vector<sbg::EdgeRef>& edges, int k) {
    const int n = static_cast<int>(vs.size());
    if (n == 0) return true;
    if (k < 1) return false;
    std::map<std::string, int> index;
    for (int i = 0; i < n; ++i) index[vs[i]] = i;
    std::vector<int> a(n, 0);
    while (true) {
        bool ok = true;
        for (const auto& e : edges) {
            int cu = a[index.at(e.u)];
            int cv = a[index.at(e.v)];
            int rhs = e.sign == sbg::Sign::plus ? cv : (k - cv) % k;
            if (cu == rhs) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
        int i = 0;
        while (i < n && ++a[i] == k) {
            a[i] = 0;
            ++i;
        }
        if (i == n) return false;
    }
}

// The triangle with signs +,+,- (sign product -1).
inline sbg::SignedBiGraph unbalanced_triangle() {
    sbg::SignedBiGraph g;
    g = g.add_vertex("a").add_vertex("b").add_vertex("c");
    g = g.add_edge("a", "b", sbg::Sign::plus);
    g = g.add_edge("b", "c", sbg::Sign::plus);
    g = g.add_edge("a", "c", sbg::Sign::minus);
    return g;
}

// Bi-graph invariants through the public interface: no loops, at most
// two edges per pair, parallel edges of distinct signs.
inline bool invariants_hold(const sbg::SignedBiGraph& g) {
    for (const auto& e : g.edges()) {
        if (e.u == e.v) return false;
        if (e.u.empty() || e.v.empty()) return false;
    }
    const auto vs = g.vertices();
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j) {
            int m = g.multiplicity(vs[i], vs[j]);
            if (m < 0 || m > 2) return false;
            bool p = g.has_edge(vs[i], vs[j], sbg::Sign::plus);
            bool q = g.has_edge(vs[i], vs[j], sbg::Sign::minus);
            if (m != (p ? 1 : 0) + (q ? 1 : 0)) return false;
        }
    return true;
}

} // namespace test_util
