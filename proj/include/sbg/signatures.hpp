#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>

#include "sbg/graph.hpp"

namespace sbg {

using SwitchSet = std::set<std::string>;

// Flip the sign of every edge incident to v. Involution; a parallel
// {+,-} pair maps onto itself.
SignedBiGraph switch_at(const SignedBiGraph& g, const std::string& v);

// Flip exactly the edges with one end in s; equals composing switch_at
// over s in any order.
SignedBiGraph switch_set(const SignedBiGraph& g, const SwitchSet& s);

// Flip every edge sign.
SignedBiGraph negate(const SignedBiGraph& g);

// Product of the signs of the given edges; +1 for the empty set. All
// edges must belong to g.
Sign sign_product(const SignedBiGraph& g, std::span<const EdgeRef> edges);

// Balanced: switch-equivalent to an all-positive signature. Detected by
// spreading vertex states over a spanning forest; any parallel pair is a
// 2-circuit with one edge of each sign, so it forces both answers false.
bool is_balanced(const SignedBiGraph& g);
bool is_antibalanced(const SignedBiGraph& g);

// Witness s with switch_set(g, s) == h, when one exists. Requires the
// same vertex set and the same per-pair multiplicities; pairs with m=2
// impose no constraint, pairs with m=1 force equal or opposite states.
// Constraints are solved per component with the lexicographically least
// vertex pinned outside the switch set, so the witness is deterministic.
std::optional<SwitchSet> switch_equivalence_witness(const SignedBiGraph& g,
                                                    const SignedBiGraph& h);

// True when some vertex bijection makes g switch-equivalent to h.
bool switch_isomorphic(const SignedBiGraph& g, const SignedBiGraph& h);

} // namespace sbg
