#pragma once

#include <string>
#include <string_view>

#include "sbg/graph.hpp"

namespace sbg {

// Line-oriented SBG text format:
//
//   sbg 1
//   vertex <name>
//   edge <name> <name> <+|->
//
// '#' starts a comment; blank lines are ignored. Names are nonempty,
// contain no whitespace and none of '#', '[', ']', ','. Violations of the
// bi-graph invariants are rejected with the offending line number.
SignedBiGraph parse_sbg(std::string_view text);
std::string serialize_sbg(const SignedBiGraph& g);

SignedBiGraph load_sbg_file(const std::string& path);
void save_sbg_file(const SignedBiGraph& g, const std::string& path);

bool valid_name(std::string_view name);

} // namespace sbg
