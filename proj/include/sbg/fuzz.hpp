#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sbg/graph.hpp"

namespace sbg {

struct FuzzConfig {
    int n = 6;            // max input order
    int q = 3;            // closure class: inputs are not q-colorable
    int trials = 500;     // per operation
    std::uint64_t seed = 1;
};

struct OpFuzzStats {
    std::string op;
    int trials = 0;
    int violations = 0;
};

struct FuzzOutcome {
    std::vector<OpFuzzStats> per_op;
    int total_trials = 0;
    int total_violations = 0;
    std::vector<std::string> counterexamples; // one dump per violation, minimized
};

// Empirical closure run: draw non-q-colorable inputs, apply each
// applicable operation with random parameters, and flag any q-colorable
// output. sb5even runs only for even q, sb5odd only for odd q >= 3.
FuzzOutcome fuzz_closure(const FuzzConfig& config);

std::string format_fuzz_summary(const FuzzOutcome& outcome);

} // namespace sbg
