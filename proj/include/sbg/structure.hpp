#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sbg/graph.hpp"

namespace sbg {

// m(x,y) >= 1 / == 1 / == 2 for every vertex pair. Vacuously true below
// order 2.
bool is_complete(const SignedBiGraph& g);
bool is_just_complete(const SignedBiGraph& g);
bool is_bi_complete(const SignedBiGraph& g);

// k-thin: bi-complete minus at most k pairwise vertex-disjoint edges,
// i.e. no pair is empty and the m=1 pairs form a matching of size <= k.
bool is_k_thin(const SignedBiGraph& g, int k);

// Smallest k such that the graph is k-thin, or nullopt when none exists.
std::optional<int> thinness(const SignedBiGraph& g);

// Partition into triangles witnessing that g is (K_{3r},±) minus r
// pairwise vertex-disjoint all-positive triangles. The deficient pairs
// (m=1, with the surviving edge negative) determine the triangles
// uniquely, so a scan suffices; nullopt when the shape does not hold.
std::optional<std::vector<std::array<std::string, 3>>> nabla_partition(const SignedBiGraph& g);

bool is_nabla_complete(const SignedBiGraph& g);

// Ordered triple (x,y,z) with its sign codes (a,b,c): a,b,c in {+,-},
// ab = c, a absent between x,y, b absent between x,z, c present between
// y,z. A triple may carry several codes.
struct TripleCode {
    std::array<std::string, 3> vertices;
    std::vector<std::array<Sign, 3>> codes;

    bool operator==(const TripleCode&) const = default;
};

// Every ordered vertex triple admitting at least one code, in
// lexicographic order; codes enumerate (a,b) as (+,+), (+,-), (-,+), (-,-).
std::vector<TripleCode> find_triples(const SignedBiGraph& g);

} // namespace sbg
