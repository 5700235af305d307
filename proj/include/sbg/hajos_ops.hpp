#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "sbg/graph.hpp"

namespace sbg {

// What a closure operation did: name, printable parameters, vertices that
// disappeared into another one, and silently coalesced duplicate edges.
struct Provenance {
    std::string op;
    std::vector<std::string> params;
    std::vector<std::pair<std::string, std::string>> aliases; // removed -> surviving
    std::vector<std::string> coalesced;                       // "u~v:+" style notes
};

struct OpResult {
    SignedBiGraph graph;
    Provenance provenance;
};

// One item of an sb1 batch.
struct Addition {
    struct Vertex {
        std::string name;
        bool operator==(const Vertex&) const = default;
    };
    using Edge = EdgeRef;
    std::variant<Vertex, Edge> item;
};

// Edges of the split vertex routed to the x-side; each edge is named by
// its far endpoint and sign. The subset may be empty or all of E(v).
struct SplitEntry {
    std::string far;
    Sign sign;

    bool operator==(const SplitEntry&) const = default;
};
using SplitAssignment = std::vector<SplitEntry>;

// (sb1) Add vertices or signed edges, applied in order.
OpResult sb1_add(const SignedBiGraph& g, std::span<const Addition> additions);

// (sb2) Identify two nonadjacent vertices; the merged vertex keeps u's name.
OpResult sb2_identify(const SignedBiGraph& g, const std::string& u, const std::string& v);

// (sb3) Split v in g1 into two parts, remove the positive edge xy of g2,
// attach the split parts to x and y. The graphs must be vertex-disjoint.
OpResult sb3_splice(const SignedBiGraph& g1, const std::string& v, const SplitAssignment& split,
                    const SignedBiGraph& g2, const std::string& x, const std::string& y);

// (sb4) Switch at a vertex.
OpResult sb4_switch(const SignedBiGraph& g, const std::string& v);

// (sb5), q even: remove a vertex with at most q/2 distinct neighbors.
OpResult sb5_even(const SignedBiGraph& g, const std::string& v, int q);

// (sb5), q odd: remove the negative edge uw (no other edge between u,w),
// identify the ends, add the pad edges; the result must be (q-3)/2-thin.
OpResult sb5_odd(const SignedBiGraph& g, const std::string& u, const std::string& w, int q,
                 std::span<const EdgeRef> pad);

// (sb3') Remove e1 of g1 and e2 of g2, identify x1 with x2 (keeping x1's
// name), add an edge y1y2 signed s1*s2. The graphs must be vertex-disjoint.
OpResult sb3_prime(const SignedBiGraph& g1, const EdgeRef& e1, const SignedBiGraph& g2,
                   const EdgeRef& e2);

// Expansion of sb3' into switches and a single splice whose composition
// equals sb3_prime's output exactly. With e1 positive the splice alone
// does it; otherwise both x-ends are switched first and the merged vertex
// is switched back once at the end. Each element carries its intermediate
// graph; the last one is the composed result.
std::vector<OpResult> decompose_sb3_prime(const SignedBiGraph& g1, const EdgeRef& e1,
                                          const SignedBiGraph& g2, const EdgeRef& e2);

// Greedy pad suggestion: edges whose addition makes g k-thin by topping
// up all but at most k disjoint deficient pairs. Throws when no pad can
// work (impossible only for k < 0).
std::vector<EdgeRef> suggest_pad(const SignedBiGraph& g, int k);

} // namespace sbg
