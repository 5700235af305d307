#include <doctest.h>

#include "helpers.hpp"
#include "sbg/coloring.hpp"
#include "sbg/signatures.hpp"

using namespace sbg;
using test_util::oracle_exists_coloring;
using test_util::unbalanced_triangle;

TEST_CASE("is_valid_coloring") {
    auto k3p = SignedBiGraph::complete_positive(3);
    CHECK(is_valid_coloring(k3p, {3, {{"v1", 0}, {"v2", 1}, {"v3", 2}}}));

    // signs +,+,- on ab,bc,ca; checked against the definition by hand
    auto t = unbalanced_triangle();
    CHECK(is_valid_coloring(t, {3, {{"a", 0}, {"b", 1}, {"c", 2}}}));

    auto k2pm = SignedBiGraph::bi_complete(2);
    CHECK_FALSE(is_valid_coloring(k2pm, {2, {{"v1", 0}, {"v2", 0}}}));

    CHECK_THROWS_AS((void)is_valid_coloring(k3p, {3, {{"v1", 0}, {"v2", 1}}}), error);
    CHECK_THROWS_AS((void)is_valid_coloring(k3p, {3, {{"v1", 0}, {"v2", 1}, {"v3", 3}}}), error);
}

TEST_CASE("find_k_coloring matches the stated examples") {
    auto k3p = SignedBiGraph::complete_positive(3);
    CHECK_FALSE(find_k_coloring(k3p, 2).has_value());

    auto t = unbalanced_triangle();
    CHECK(oracle_exists_coloring(t, 2) == false); // 2^3 assignments
    CHECK(oracle_exists_coloring(t, 3) == true);  // 3^3 assignments
    CHECK_FALSE(find_k_coloring(t, 2).has_value());
    CHECK(find_k_coloring(t, 3).has_value());

    auto k2pm = SignedBiGraph::bi_complete(2);
    CHECK(oracle_exists_coloring(k2pm, 2)); // 4 assignments
    auto c = find_k_coloring(k2pm, 2);
    REQUIRE(c.has_value());
    CHECK(is_valid_coloring(k2pm, *c));

    CHECK_THROWS_AS(find_k_coloring(k3p, 0), error);
}

TEST_CASE("solver agrees with exhaustive enumeration on small graphs") {
    Rng rng(42);
    for (int trial = 0; trial < 300; ++trial) {
        auto g = random_signed_bigraph(rng, rng.range(1, 4));
        for (int k = 1; k <= 5; ++k) {
            auto c = find_k_coloring(g, k);
            CHECK(c.has_value() == oracle_exists_coloring(g, k));
            if (c) CHECK(is_valid_coloring(g, *c));
        }
    }
}

TEST_CASE("chromatic numbers of complete families") {
    for (int n = 2; n <= 5; ++n) CHECK(chromatic_number(SignedBiGraph::complete_positive(n)) == n);
    for (int n = 2; n <= 4; ++n) CHECK(chromatic_number(SignedBiGraph::bi_complete(n)) == 2 * n - 2);
    CHECK(chromatic_number(SignedBiGraph{}.add_vertex("a")) == 1);
    CHECK(chromatic_number(SignedBiGraph{}) == 0);
}

TEST_CASE("colorability is monotone in k empirically") {
    Rng rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = random_signed_bigraph(rng, rng.range(1, 6));
        for (int k = 1; k <= 6; ++k)
            if (find_k_coloring(g, k)) CHECK(find_k_coloring(g, k + 1).has_value());
    }
}

TEST_CASE("removing an edge never increases the chromatic number") {
    Rng rng(44);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = random_signed_bigraph(rng, rng.range(2, 5));
        if (g.size() == 0) continue;
        int chi = chromatic_number(g);
        auto es = g.edges();
        const auto& e = es[rng.below(static_cast<int>(es.size()))];
        CHECK(chromatic_number(g.remove_edge(e.u, e.v, e.sign)) <= chi);
    }
}

TEST_CASE("partite sets group residues by magnitude") {
    SignedBiGraph g;
    g = g.add_vertex("a").add_vertex("b").add_vertex("c");
    auto sets = partite_sets(g, {5, {{"a", 1}, {"b", 4}, {"c", 0}}});
    REQUIRE(sets.size() == 2);
    CHECK(sets[0].magnitude == 0);
    CHECK(sets[0].members == std::vector<std::string>{"c"});
    CHECK(sets[1].magnitude == 1);
    CHECK(sets[1].members == std::vector<std::string>{"a", "b"}); // 4 = 5-1

    auto singleton = partite_sets(g, {4, {{"a", 2}, {"b", 0}, {"c", 1}}});
    bool found2 = false;
    for (const auto& s : singleton)
        if (s.magnitude == 2) {
            found2 = true;
            CHECK(s.members == std::vector<std::string>{"a"}); // 2 = 4-2
        }
    CHECK(found2);

    auto k2pm = SignedBiGraph::bi_complete(2);
    CHECK_THROWS_AS(partite_sets(k2pm, {2, {{"v1", 0}, {"v2", 0}}}), error);
}

TEST_CASE("partite sets of a valid coloring are antibalanced, class 0 independent") {
    Rng rng(45);
    int checked = 0;
    for (int trial = 0; trial < 80 && checked < 40; ++trial) {
        auto g = random_signed_bigraph(rng, rng.range(2, 5));
        int k = rng.range(1, 7);
        auto c = find_k_coloring(g, k);
        if (!c) continue;
        ++checked;
        for (const auto& ps : partite_sets(g, *c)) {
            std::set<std::string> members(ps.members.begin(), ps.members.end());
            CHECK(is_antibalanced_set(g, members));
            if (ps.magnitude == 0 && k % 2 == 1) CHECK(is_independent_set(g, members));
        }
    }
    CHECK(checked >= 20);
}

TEST_CASE("classify_adjacency") {
    auto k2pm = SignedBiGraph::bi_complete(2);
    CHECK(classify_adjacency(k2pm, {"v1"}, {"v2"}) == AdjacencyClass::bi_completely);

    auto k2p = SignedBiGraph::complete_positive(2);
    CHECK(classify_adjacency(k2p, {"v1"}, {"v2"}) == AdjacencyClass::just_completely);

    SignedBiGraph g;
    g = g.add_vertex("a").add_vertex("b").add_vertex("c").add_vertex("d");
    g = g.add_edge("a", "c", Sign::plus).add_edge("a", "d", Sign::plus);
    g = g.add_edge("b", "c", Sign::plus); // b-d missing
    CHECK(classify_adjacency(g, {"a", "b"}, {"c", "d"}) == AdjacencyClass::not_completely);
    g = g.add_edge("b", "d", Sign::plus).add_edge("b", "d", Sign::minus);
    CHECK(classify_adjacency(g, {"a", "b"}, {"c", "d"}) == AdjacencyClass::completely);

    CHECK_THROWS_AS(classify_adjacency(g, {"a"}, {"a", "b"}), error);
    CHECK_THROWS_AS(classify_adjacency(g, {}, {"b"}), error);
}

TEST_CASE("independent and antibalanced sets") {
    auto t = unbalanced_triangle();
    CHECK(is_independent_set(t, {"a"}));
    CHECK(is_antibalanced_set(t, {"a"}));

    CHECK_FALSE(is_independent_set(t, {"a", "c"})); // negative edge
    CHECK(is_antibalanced_set(t, {"a", "c"}));

    auto k2pm = SignedBiGraph::bi_complete(2);
    CHECK_FALSE(is_antibalanced_set(k2pm, {"v1", "v2"}));

    CHECK_THROWS_AS((void)is_independent_set(t, {"zz"}), error);
}
