#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "sbg.h"

namespace {

const char* k3pm_text =
    "sbg 1\n"
    "vertex a\nvertex b\nvertex c\n"
    "edge a b +\nedge a b -\n"
    "edge a c +\nedge a c -\n"
    "edge b c +\nedge b c -\n";

} // namespace

TEST_CASE("graph round trip through the C surface") {
    sbg_graph* g = nullptr;
    REQUIRE(sbg_graph_from_text(k3pm_text, &g) == SBG_OK);
    CHECK(sbg_graph_order(g) == 3);
    CHECK(sbg_graph_size(g) == 6);

    char* text = nullptr;
    REQUIRE(sbg_graph_to_text(g, &text) == SBG_OK);
    sbg_graph* again = nullptr;
    REQUIRE(sbg_graph_from_text(text, &again) == SBG_OK);
    char* text2 = nullptr;
    REQUIRE(sbg_graph_to_text(again, &text2) == SBG_OK);
    CHECK(std::string(text) == text2);
    sbg_string_free(text);
    sbg_string_free(text2);
    sbg_graph_free(again);
    sbg_graph_free(g);

    sbg_graph* bad = nullptr;
    CHECK(sbg_graph_from_text("vertex a\n", &bad) == SBG_ERR_PARSE);
    CHECK(std::strlen(sbg_last_error()) > 0);
}

TEST_CASE("chromatic number and witness") {
    sbg_graph* g = nullptr;
    REQUIRE(sbg_graph_from_text(k3pm_text, &g) == SBG_OK);
    int chi = 0;
    REQUIRE(sbg_chromatic_number(g, &chi) == SBG_OK);
    CHECK(chi == 4);

    int found = 0;
    char* witness = nullptr;
    REQUIRE(sbg_find_coloring(g, 4, &found, &witness) == SBG_OK);
    CHECK(found == 1);
    CHECK(std::string(witness).find("a ") != std::string::npos);
    sbg_string_free(witness);

    REQUIRE(sbg_find_coloring(g, 3, &found, &witness) == SBG_OK);
    CHECK(found == 0);
    sbg_string_free(witness);
    sbg_graph_free(g);
}

TEST_CASE("analysis record") {
    sbg_graph* g = nullptr;
    REQUIRE(sbg_graph_from_text("sbg 1\nvertex a\nvertex b\nvertex c\n"
                                "edge a b -\nedge a c -\nedge b c -\n",
                                &g) == SBG_OK);
    sbg_analysis a{};
    REQUIRE(sbg_analyze(g, &a) == SBG_OK);
    CHECK(a.antibalanced == 1);
    CHECK(a.balanced == 0);
    CHECK(a.just_complete == 1);
    CHECK(a.nabla_complete == 1);
    CHECK(a.thin == -1); // deficient pairs share vertices
    sbg_graph_free(g);
}

TEST_CASE("apply specs and error statuses") {
    sbg_graph* g = nullptr;
    REQUIRE(sbg_graph_from_text("sbg 1\nvertex u\nvertex v\nedge u v +\n", &g) == SBG_OK);

    sbg_graph* out = nullptr;
    REQUIRE(sbg_apply(g, "sb4 u", &out) == SBG_OK);
    char* text = nullptr;
    sbg_graph_to_text(out, &text);
    CHECK(std::string(text).find("edge u v -") != std::string::npos);
    sbg_string_free(text);
    sbg_graph_free(out);

    sbg_graph* out2 = nullptr;
    CHECK(sbg_apply(g, "sb2 u v", &out2) == SBG_ERR_INVALID);    // adjacent
    CHECK(sbg_apply(g, "sb1_edge u v +", &out2) == SBG_ERR_INVALID); // duplicate
    CHECK(sbg_apply(g, "sb9 u", &out2) == SBG_ERR_PARSE);

    REQUIRE(sbg_apply(g, "sb1_edge u v -", &out2) == SBG_OK);
    CHECK(sbg_graph_size(out2) == 2);
    sbg_graph_free(out2);

    sbg_graph* out3 = nullptr;
    REQUIRE(sbg_graph_from_text("sbg 1\nvertex u\nvertex v\nedge u v -\n", &g) == SBG_OK);
    REQUIRE(sbg_apply(g, "sb5odd u v 3 [pad:]", &out3) == SBG_OK);
    CHECK(sbg_graph_order(out3) == 1);
    sbg_graph_free(out3);
    sbg_graph_free(g);
}

TEST_CASE("script check and generators through the C surface") {
    sbg_script* s = nullptr;
    REQUIRE(sbg_script_from_text("sbd 1\nq 4\nlet g0 = axiom 4\n", &s) == SBG_OK);
    sbg_report* r = nullptr;
    REQUIRE(sbg_script_check(s, "", 1, &r) == SBG_OK);
    CHECK(sbg_report_accepted(r) == 1);
    char* text = nullptr;
    REQUIRE(sbg_report_to_text(r, &text) == SBG_OK);
    CHECK(std::string(text).find("ACCEPTED") != std::string::npos);
    sbg_string_free(text);
    sbg_graph* final_graph = nullptr;
    REQUIRE(sbg_report_final_graph(r, &final_graph) == SBG_OK);
    CHECK(sbg_graph_order(final_graph) == 4);
    sbg_graph_free(final_graph);
    sbg_report_free(r);
    sbg_script_free(s);

    sbg_script* gen = nullptr;
    REQUIRE(sbg_gen_lemma_bicomplete(3, &gen) == SBG_OK);
    char* gen_text = nullptr;
    REQUIRE(sbg_script_to_text(gen, &gen_text) == SBG_OK);
    sbg_script* reparsed = nullptr;
    REQUIRE(sbg_script_from_text(gen_text, &reparsed) == SBG_OK);
    sbg_report* gen_report = nullptr;
    REQUIRE(sbg_script_check(reparsed, "", 1, &gen_report) == SBG_OK);
    CHECK(sbg_report_accepted(gen_report) == 1);
    sbg_report_free(gen_report);
    sbg_script_free(reparsed);
    sbg_string_free(gen_text);
    sbg_script_free(gen);

    sbg_script* bad = nullptr;
    CHECK(sbg_gen_lemma_bicomplete(2, &bad) == SBG_ERR_INVALID);
}

TEST_CASE("search and fuzz through the C surface") {
    sbg_graph* target = nullptr;
    REQUIRE(sbg_graph_from_text("sbg 1\nvertex v1\nvertex v2\nedge v1 v2 +\nedge v1 v2 -\n",
                                &target) == SBG_OK);
    int found = 0;
    sbg_script* script = nullptr;
    REQUIRE(sbg_search_derivation(target, nullptr, 2, 2, 4, &found, &script) == SBG_OK);
    CHECK(found == 1);
    sbg_script_free(script);
    sbg_graph_free(target);

    int violations = -1;
    char* summary = nullptr;
    REQUIRE(sbg_fuzz_closure(5, 2, 5, 11, &violations, &summary) == SBG_OK);
    CHECK(violations == 0);
    CHECK(std::string(summary).find("total") != std::string::npos);
    sbg_string_free(summary);

    CHECK(sbg_fuzz_closure(5, 2, 5, 0, &violations, &summary) == SBG_ERR_INVALID); // seed required
}
