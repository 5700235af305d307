#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sbg/graph.hpp"

namespace sbg {

// Assignment of residues in Z_k to every vertex.
struct Coloring {
    int k = 1;
    std::map<std::string, int> assignment;

    bool operator==(const Coloring&) const = default;
};

// True iff c(v) != s*c(w) (mod k) holds on every edge; a parallel pair
// imposes both c(v) != c(w) and c(v) != -c(w). Throws when c misses a
// vertex or carries a residue outside [0, k).
bool is_valid_coloring(const SignedBiGraph& g, const Coloring& c);

// Complete backtracking over Z_k: most-constrained vertex first, ties by
// smallest name, residues tried in ascending order, with forbidden-residue
// propagation to the neighbors. Deterministic witness; nullopt means no
// k-coloring exists.
std::optional<Coloring> find_k_coloring(const SignedBiGraph& g, int k);

// Smallest k >= 1 admitting a coloring; 0 for the empty graph. The ascent
// stops at 2n-2, an upper bound since every signed bi-graph on n >= 2
// vertices is a subgraph of (K_n,±).
int chromatic_number(const SignedBiGraph& g);

// Vertices grouped by the magnitude class {x, k-x} of their residue.
struct PartiteSet {
    int magnitude = 0;
    std::vector<std::string> members;

    bool operator==(const PartiteSet&) const = default;
};

std::vector<PartiteSet> partite_sets(const SignedBiGraph& g, const Coloring& c);

enum class AdjacencyClass { not_completely, completely, just_completely, bi_completely };

// Strongest label relating two disjoint nonempty vertex sets.
AdjacencyClass classify_adjacency(const SignedBiGraph& g, const std::set<std::string>& u,
                                  const std::set<std::string>& v);

bool is_independent_set(const SignedBiGraph& g, const std::set<std::string>& u);
bool is_antibalanced_set(const SignedBiGraph& g, const std::set<std::string>& u);

// Subgraph induced by the given vertices.
SignedBiGraph induced_subgraph(const SignedBiGraph& g, const std::set<std::string>& u);

} // namespace sbg
