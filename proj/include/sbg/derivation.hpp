#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sbg/graph.hpp"
#include "sbg/hajos_ops.hpp"

namespace sbg {

enum class StepKind { axiom, sb1_vertex, sb1_edge, sb2, sb3, sb4, sb5even, sb5odd, sb3p };

// One binding of a derivation script. Which fields are meaningful depends
// on the kind; args holds the vertex arguments in the order of the SBD
// grammar. For the two-operand steps (sb3, sb3p) src_b names the second
// operand binding and its vertex arguments are given in that operand's
// own names.
struct ScriptStep {
    std::string name;
    StepKind kind = StepKind::axiom;
    int axiom_order = 0;
    std::string src_a, src_b;
    std::vector<std::string> args;
    std::vector<SplitEntry> split; // sb3
    std::vector<EdgeRef> pad;      // sb5odd
    Sign sign_a = Sign::plus;      // sb1_edge, sb3p (e1)
    Sign sign_b = Sign::plus;      // sb3p (e2)

    bool operator==(const ScriptStep&) const = default;
};

enum class MatchMode { exact, iso, switch_iso };

struct ScriptTarget {
    std::string binding;
    MatchMode mode = MatchMode::exact;
    std::string path; // SBG file, resolved against the script's directory

    bool operator==(const ScriptTarget&) const = default;
};

// A checkable proof object: all axioms are (K_q,+), every step references
// earlier bindings only.
struct DerivationScript {
    int q = 1;
    std::vector<ScriptStep> steps;
    std::optional<ScriptTarget> target;

    bool operator==(const DerivationScript&) const = default;
};

DerivationScript parse_script(std::string_view text);
std::string serialize_script(const DerivationScript& s);
DerivationScript load_script_file(const std::string& path);

// Execute one step against the bound environment. Steps that combine two
// operands rename the second operand's colliding vertices to
// "<binding>.<name>" first, which keeps the operands vertex-disjoint even
// when both arose from axioms; the step's own vertex arguments for that
// operand are interpreted before renaming. The q of the script feeds the
// sb5 steps as q-1: a script deriving chromatic number q walks the class
// of graphs that are not (q-1)-colorable.
OpResult apply_script_step(const std::map<std::string, SignedBiGraph>& env, const ScriptStep& step,
                           int script_q);

struct StepReport {
    std::string name;
    std::string op;
    bool ok = false;
    std::string error;
    int order = 0;
    int size = 0;
    // set when colorability verification ran: true = not (q-1)-colorable
    std::optional<bool> not_colorable;
};

struct CheckReport {
    std::vector<StepReport> steps;
    bool steps_ok = false;
    std::optional<SignedBiGraph> final_graph; // graph of the last binding
    std::optional<bool> target_ok;
    std::string target_detail;
    bool accepted = false;
};

struct CheckOptions {
    bool verify_colorability = false;
    std::string base_dir;                          // for relative target paths
    std::optional<SignedBiGraph> target_override;  // skip file loading
};

CheckReport check_script(const DerivationScript& script, const CheckOptions& options = {});
std::string format_check_report(const CheckReport& report);

// Script deriving a graph isomorphic to (K_r,±) from the axiom
// (K_{2r-2},+): switch at v1, contract v1v2 with a pad that leaves the
// designated disjoint pairs v3v4, v5v6, ... deficient, then contract the
// designated pairs one by one without pads. Supported for r >= 3.
DerivationScript gen_lemma_bicomplete(int r);

// Script deriving the order-3r graph obtained from (K_{3r},±) by deleting
// r disjoint all-positive triangles, built from r+1 copies of
// (K_{2r+1},+). Supported for r >= 1.
DerivationScript gen_lemma_nabla(int r);

struct SearchLimits {
    int max_steps = 4;
    int max_order = 8;
};

// Breadth-first search over script steps from the axiom (K_q,+), pruning
// states by isomorphism; requires chromatic_number(target) == q. Returns
// the first script found at the smallest depth whose result is isomorphic
// to the target, or nullopt within the budget (which is not a refutation).
std::optional<DerivationScript> search_derivation(const SignedBiGraph& target, int q,
                                                  const SearchLimits& limits,
                                                  const std::string& target_path = "");

} // namespace sbg
