#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sbg/error.hpp"
#include "sbg/sign.hpp"

namespace sbg {

// Edge with endpoints normalized so that u < v.
struct SignedEdge {
    std::string u, v;
    Sign sign;

    auto operator<=>(const SignedEdge&) const = default;
};

// Edge reference as written by a caller; endpoints in either order.
struct EdgeRef {
    std::string u, v;
    Sign sign;

    bool operator==(const EdgeRef&) const = default;
};

// Loopless multigraph with at most two edges per vertex pair, parallel
// edges carrying distinct signs. Vertices are identified by their display
// name (unique within a graph). Instances are immutable values: every
// edit returns a new graph and never touches the receiver, so graphs can
// be shared freely between derivation steps and threads.
class SignedBiGraph {
public:
    SignedBiGraph() = default;

    // (K_n,+), (K_n,-) and (K_n,±) on vertices <prefix>1 .. <prefix>n.
    static SignedBiGraph complete_positive(int n, const std::string& prefix = "v");
    static SignedBiGraph complete_negative(int n, const std::string& prefix = "v");
    static SignedBiGraph bi_complete(int n, const std::string& prefix = "v");

    int order() const { return static_cast<int>(vertices_.size()); }
    int size() const; // edge count
    bool has_vertex(const std::string& name) const { return vertices_.count(name) > 0; }
    std::vector<std::string> vertices() const;
    std::vector<SignedEdge> edges() const; // sorted by (u, v), '+' before '-'

    // m(u,v) in {0,1,2}; throws on unknown vertices or u == v.
    int multiplicity(const std::string& u, const std::string& v) const;
    bool has_edge(const std::string& u, const std::string& v, Sign s) const;
    // bit 0 = '+' present, bit 1 = '-' present
    std::uint8_t pair_mask(const std::string& u, const std::string& v) const;

    std::vector<std::string> neighbors(const std::string& v) const;
    std::vector<SignedEdge> incident_edges(const std::string& v) const;

    SignedBiGraph add_vertex(const std::string& name) const;
    SignedBiGraph add_edge(const std::string& u, const std::string& v, Sign s) const;
    SignedBiGraph remove_edge(const std::string& u, const std::string& v, Sign s) const;
    SignedBiGraph remove_vertex(const std::string& v) const;

    // Merge two nonadjacent vertices; the merged vertex keeps u's name and
    // inherits all incident edges of both. Same-sign duplicates between the
    // merged vertex and a common neighbor coalesce to a single edge.
    SignedBiGraph identify_vertices(const std::string& u, const std::string& v) const;

    // Bijective rename: names absent from the map stay put. Throws if the
    // result would collapse two vertices.
    SignedBiGraph rename_vertices(const std::map<std::string, std::string>& mapping) const;

    bool operator==(const SignedBiGraph&) const = default;

private:
    using PairKey = std::pair<std::string, std::string>;

    static PairKey key(const std::string& a, const std::string& b);
    void require_vertex(const std::string& name) const;

    std::set<std::string> vertices_;
    std::map<PairKey, std::uint8_t> pairs_; // mask: bit 0 '+', bit 1 '-'; no zero entries
};

// Dense indexed view used by the solvers; names are sorted.
struct AdjacencyMatrix {
    int n = 0;
    std::vector<std::string> names;
    std::vector<std::uint8_t> cells; // n*n pair masks

    std::uint8_t at(int i, int j) const { return cells[static_cast<size_t>(i) * n + j]; }
    int index_of(const std::string& name) const;

    static AdjacencyMatrix from(const SignedBiGraph& g);
};

// Collapse a signed multigraph (arbitrary edge multiset, no loops) to a
// signed bi-graph: between each pair at most one edge per sign survives.
SignedBiGraph reduce_multigraph(std::span<const std::string> vertices,
                                std::span<const EdgeRef> edges);

// Enumerate vertex bijections G -> H mapping the edge structure onto each
// other; when respect_signs is false only multiplicities have to match.
// Stops early when accept returns true; returns whether that happened.
bool any_isomorphism(const SignedBiGraph& g, const SignedBiGraph& h, bool respect_signs,
                     const std::function<bool(const std::map<std::string, std::string>&)>& accept);

// Witness mapping G -> H when the graphs are isomorphic (signs preserved).
std::optional<std::map<std::string, std::string>> find_isomorphism(const SignedBiGraph& g,
                                                                   const SignedBiGraph& h);

bool is_isomorphic(const SignedBiGraph& g, const SignedBiGraph& h);

} // namespace sbg
