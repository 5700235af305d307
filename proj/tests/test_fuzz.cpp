#include <doctest.h>

#include "sbg/fuzz.hpp"
#include "sbg/random.hpp"

using namespace sbg;

TEST_CASE("closure fuzz runs clean on a small budget") {
    FuzzConfig cfg;
    cfg.n = 5;
    cfg.q = 2;
    cfg.trials = 20;
    cfg.seed = 99;
    auto outcome = fuzz_closure(cfg);
    CHECK(outcome.total_violations == 0);
    CHECK(outcome.per_op.size() == 6); // five always-on ops + sb5even at even q
    for (const auto& s : outcome.per_op) CHECK(s.trials == 20);
}

TEST_CASE("odd q swaps the sb5 branch") {
    FuzzConfig cfg;
    cfg.n = 5;
    cfg.q = 3;
    cfg.trials = 10;
    cfg.seed = 7;
    auto outcome = fuzz_closure(cfg);
    CHECK(outcome.total_violations == 0);
    bool has_odd = false, has_even = false;
    for (const auto& s : outcome.per_op) {
        if (s.op == "sb5odd") has_odd = true;
        if (s.op == "sb5even") has_even = true;
    }
    CHECK(has_odd);
    CHECK_FALSE(has_even);
}

TEST_CASE("q=1 still runs the parity-free operations") {
    FuzzConfig cfg;
    cfg.n = 4;
    cfg.q = 1;
    cfg.trials = 5;
    cfg.seed = 5;
    auto outcome = fuzz_closure(cfg);
    CHECK(outcome.total_violations == 0);
    CHECK(outcome.per_op.size() == 5);
}

TEST_CASE("identical seeds give identical summaries") {
    FuzzConfig cfg;
    cfg.n = 5;
    cfg.q = 2;
    cfg.trials = 8;
    cfg.seed = 123;
    auto a = format_fuzz_summary(fuzz_closure(cfg));
    auto b = format_fuzz_summary(fuzz_closure(cfg));
    CHECK(a == b);
}

TEST_CASE("random_non_q_colorable keeps its contract") {
    Rng rng(55);
    for (int t = 0; t < 20; ++t) {
        auto g = random_non_q_colorable(rng, 6, 3);
        CHECK(g.order() <= 6);
    }
    CHECK_THROWS_AS(random_non_q_colorable(rng, 2, 5), error);
}
