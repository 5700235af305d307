#include "sbg/hajos_ops.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "sbg/signatures.hpp"
#include "sbg/structure.hpp"

namespace sbg {

namespace {

void require_disjoint(const SignedBiGraph& g1, const SignedBiGraph& g2) {
    for (const auto& v : g1.vertices())
        if (g2.has_vertex(v))
            throw error("graphs share vertex '" + v + "'; operands must be vertex-disjoint");
}

std::string edge_str(const std::string& u, const std::string& v, Sign s) {
    return u + " " + v + " " + sign_char(s);
}

// Coalesce notes for merging u and v into one vertex: every common
// neighbor contributes one note per sign present on both sides.
std::vector<std::string> coalesce_notes(const SignedBiGraph& g, const std::string& u,
                                        const std::string& v) {
    std::vector<std::string> notes;
    for (const auto& w : g.vertices()) {
        if (w == u || w == v) continue;
        std::uint8_t overlap = g.pair_mask(u, w) & g.pair_mask(v, w);
        if (overlap & 1) notes.push_back(u + "~" + w + ":+");
        if (overlap & 2) notes.push_back(u + "~" + w + ":-");
    }
    return notes;
}

} // namespace

OpResult sb1_add(const SignedBiGraph& g, std::span<const Addition> additions) {
    OpResult r{g, {"sb1", {}, {}, {}}};
    for (const auto& a : additions) {
        if (const auto* v = std::get_if<Addition::Vertex>(&a.item)) {
            r.graph = r.graph.add_vertex(v->name);
            r.provenance.params.push_back("vertex " + v->name);
        } else {
            const auto& e = std::get<Addition::Edge>(a.item);
            r.graph = r.graph.add_edge(e.u, e.v, e.sign);
            r.provenance.params.push_back("edge " + edge_str(e.u, e.v, e.sign));
        }
    }
    return r;
}

OpResult sb2_identify(const SignedBiGraph& g, const std::string& u, const std::string& v) {
    OpResult r{g, {"sb2", {u, v}, {{v, u}}, coalesce_notes(g, u, v)}};
    r.graph = g.identify_vertices(u, v);
    return r;
}

OpResult sb3_splice(const SignedBiGraph& g1, const std::string& v, const SplitAssignment& split,
                    const SignedBiGraph& g2, const std::string& x, const std::string& y) {
    require_disjoint(g1, g2);
    if (!g1.has_vertex(v)) throw error("unknown split vertex '" + v + "'");
    if (!g2.has_vertex(x)) throw error("unknown vertex '" + x + "'");
    if (!g2.has_vertex(y)) throw error("unknown vertex '" + y + "'");
    if (!g2.has_edge(x, y, Sign::plus))
        throw error("sb3 needs a positive edge between '" + x + "' and '" + y + "'");

    std::set<std::pair<std::string, char>> to_x;
    for (const auto& s : split) {
        if (!g1.has_edge(v, s.far, s.sign))
            throw error("split entry " + edge_str(v, s.far, s.sign) + " is not an edge of the split vertex");
        if (!to_x.insert({s.far, sign_char(s.sign)}).second)
            throw error("split entry " + edge_str(v, s.far, s.sign) + " listed twice");
    }

    SignedBiGraph out = g2.remove_edge(x, y, Sign::plus);
    for (const auto& w : g1.vertices())
        if (w != v) out = out.add_vertex(w);
    for (const auto& e : g1.edges()) {
        if (e.u != v && e.v != v) {
            out = out.add_edge(e.u, e.v, e.sign);
            continue;
        }
        const std::string& far = e.u == v ? e.v : e.u;
        bool routed_to_x = to_x.count({far, sign_char(e.sign)}) > 0;
        out = out.add_edge(routed_to_x ? x : y, far, e.sign);
    }

    OpResult r{std::move(out), {"sb3", {}, {{v, x}, {v, y}}, {}}};
    r.provenance.params = {"v=" + v, "x=" + x, "y=" + y};
    for (const auto& s : split) r.provenance.params.push_back("to-x " + s.far + " " + sign_char(s.sign));
    return r;
}

OpResult sb4_switch(const SignedBiGraph& g, const std::string& v) {
    return {switch_at(g, v), {"sb4", {v}, {}, {}}};
}

OpResult sb5_even(const SignedBiGraph& g, const std::string& v, int q) {
    if (q % 2 != 0) throw error("sb5 vertex removal needs even q, got " + std::to_string(q));
    if (!g.has_vertex(v)) throw error("unknown vertex '" + v + "'");
    int deg = static_cast<int>(g.neighbors(v).size());
    if (deg > q / 2)
        throw error("'" + v + "' has " + std::to_string(deg) + " neighbors, more than q/2 = " +
                    std::to_string(q / 2));
    return {g.remove_vertex(v), {"sb5even", {v, "q=" + std::to_string(q)}, {}, {}}};
}

OpResult sb5_odd(const SignedBiGraph& g, const std::string& u, const std::string& w, int q,
                 std::span<const EdgeRef> pad) {
    if (q % 2 == 0) throw error("sb5 edge contraction needs odd q, got " + std::to_string(q));
    if (q < 3) throw error("sb5 edge contraction needs q >= 3, got " + std::to_string(q));
    if (!g.has_edge(u, w, Sign::minus))
        throw error("no negative edge between '" + u + "' and '" + w + "'");
    if (g.multiplicity(u, w) != 1)
        throw error("'" + u + "' and '" + w + "' are connected by another edge");

    SignedBiGraph h = g.remove_edge(u, w, Sign::minus);
    OpResult r{{}, {"sb5odd", {u, w, "q=" + std::to_string(q)}, {{w, u}}, coalesce_notes(h, u, w)}};
    h = h.identify_vertices(u, w);
    for (const auto& e : pad) {
        h = h.add_edge(e.u, e.v, e.sign);
        r.provenance.params.push_back("pad " + edge_str(e.u, e.v, e.sign));
    }
    int k = (q - 3) / 2;
    if (!is_k_thin(h, k))
        throw error("result is not " + std::to_string(k) + "-thin; adjust the pad edges");
    r.graph = std::move(h);
    return r;
}

OpResult sb3_prime(const SignedBiGraph& g1, const EdgeRef& e1, const SignedBiGraph& g2,
                   const EdgeRef& e2) {
    require_disjoint(g1, g2);
    if (!g1.has_vertex(e1.u) || !g1.has_vertex(e1.v) || !g1.has_edge(e1.u, e1.v, e1.sign))
        throw error("edge " + edge_str(e1.u, e1.v, e1.sign) + " does not belong to the first graph");
    if (!g2.has_vertex(e2.u) || !g2.has_vertex(e2.v) || !g2.has_edge(e2.u, e2.v, e2.sign))
        throw error("edge " + edge_str(e2.u, e2.v, e2.sign) + " does not belong to the second graph");

    const std::string &x1 = e1.u, &y1 = e1.v, &x2 = e2.u, &y2 = e2.v;
    SignedBiGraph out = g1.remove_edge(x1, y1, e1.sign);
    SignedBiGraph g2r = g2.remove_edge(x2, y2, e2.sign);
    for (const auto& vtx : g2r.vertices())
        if (vtx != x2) out = out.add_vertex(vtx);
    for (const auto& e : g2r.edges()) {
        if (e.u == x2) out = out.add_edge(x1, e.v, e.sign);
        else if (e.v == x2) out = out.add_edge(e.u, x1, e.sign);
        else out = out.add_edge(e.u, e.v, e.sign);
    }
    out = out.add_edge(y1, y2, e1.sign * e2.sign);

    OpResult r{std::move(out), {"sb3p", {}, {{x2, x1}}, {}}};
    r.provenance.params = {"e1=" + edge_str(x1, y1, e1.sign), "e2=" + edge_str(x2, y2, e2.sign),
                           "new=" + edge_str(y1, y2, e1.sign * e2.sign)};
    return r;
}

std::vector<OpResult> decompose_sb3_prime(const SignedBiGraph& g1, const EdgeRef& e1,
                                          const SignedBiGraph& g2, const EdgeRef& e2) {
    const std::string &x1 = e1.u, &y1 = e1.v, &x2 = e2.u, &y2 = e2.v;
    if (!g1.has_edge(x1, y1, e1.sign))
        throw error("edge " + edge_str(x1, y1, e1.sign) + " does not belong to the first graph");
    if (!g2.has_edge(x2, y2, e2.sign))
        throw error("edge " + edge_str(x2, y2, e2.sign) + " does not belong to the second graph");

    std::vector<OpResult> steps;
    if (e1.sign == Sign::plus) {
        // e1 plays the positive edge of (sb3); routing e2's stub to the
        // y1 side reproduces the new y1y2 edge with sign s2 = s1*s2.
        steps.push_back(sb3_splice(g2, x2, {{y2, e2.sign}}, g1, y1, x1));
        return steps;
    }
    // Switch both x-ends so e1 turns positive; the splice then transfers
    // x2's flipped edges onto x1, and one switch at the merged vertex
    // restores every incident sign. The rerouted stub carries -s2 = s1*s2.
    steps.push_back(sb4_switch(g1, x1));
    steps.push_back(sb4_switch(g2, x2));
    steps.push_back(sb3_splice(steps[1].graph, x2, {{y2, opposite(e2.sign)}}, steps[0].graph, y1, x1));
    steps.push_back(sb4_switch(steps[2].graph, x1));
    return steps;
}

std::vector<EdgeRef> suggest_pad(const SignedBiGraph& g, int k) {
    if (k < 0) throw error("thinness parameter must be >= 0");
    const auto vs = g.vertices();
    std::vector<std::pair<std::string, std::string>> short_pairs; // m == 1 first, then m == 0
    std::vector<std::pair<std::string, std::string>> empty_pairs;
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j) {
            int m = g.multiplicity(vs[i], vs[j]);
            if (m == 1) short_pairs.emplace_back(vs[i], vs[j]);
            else if (m == 0) empty_pairs.emplace_back(vs[i], vs[j]);
        }
    // Keep up to k pairwise disjoint pairs deficient; every other short
    // pair gets topped up to a parallel pair.
    std::set<std::string> matched;
    std::set<std::pair<std::string, std::string>> keep;
    auto try_keep = [&](const std::pair<std::string, std::string>& p) {
        if (static_cast<int>(keep.size()) >= k) return;
        if (matched.count(p.first) || matched.count(p.second)) return;
        matched.insert(p.first);
        matched.insert(p.second);
        keep.insert(p);
    };
    for (const auto& p : short_pairs) try_keep(p);
    for (const auto& p : empty_pairs) try_keep(p);

    std::vector<EdgeRef> pad;
    for (const auto& p : short_pairs) {
        if (keep.count(p)) continue;
        Sign missing = g.has_edge(p.first, p.second, Sign::plus) ? Sign::minus : Sign::plus;
        pad.push_back({p.first, p.second, missing});
    }
    for (const auto& p : empty_pairs) {
        pad.push_back({p.first, p.second, Sign::plus});
        if (!keep.count(p)) pad.push_back({p.first, p.second, Sign::minus});
    }
    return pad;
}

} // namespace sbg
