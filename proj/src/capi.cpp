#include "sbg.h"

#include <cstdlib>
#include <cstring>
#include <sstream>

#include "sbg/coloring.hpp"
#include "sbg/derivation.hpp"
#include "sbg/fuzz.hpp"
#include "sbg/hajos_ops.hpp"
#include "sbg/io.hpp"
#include "sbg/signatures.hpp"
#include "sbg/structure.hpp"

struct sbg_graph {
    sbg::SignedBiGraph g;
};
struct sbg_script {
    sbg::DerivationScript s;
};
struct sbg_report {
    sbg::CheckReport r;
};

namespace {

thread_local std::string g_last_error;

sbg_status fail(sbg_status status, const std::string& message) {
    g_last_error = message;
    return status;
}

// Runs fn, translating exceptions into statuses. parse_error maps to
// SBG_ERR_PARSE, other sbg::error to SBG_ERR_INVALID.
template <typename Fn>
sbg_status guarded(Fn&& fn) {
    try {
        fn();
        return SBG_OK;
    } catch (const sbg::parse_error& e) {
        return fail(SBG_ERR_PARSE, e.what());
    } catch (const sbg::error& e) {
        return fail(SBG_ERR_INVALID, e.what());
    } catch (const std::exception& e) {
        return fail(SBG_ERR_INTERNAL, e.what());
    }
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

} // namespace

extern "C" {

const char* sbg_last_error(void) { return g_last_error.c_str(); }

void sbg_string_free(char* s) { std::free(s); }

sbg_status sbg_graph_from_text(const char* text, sbg_graph** out) {
    if (!text || !out) return fail(SBG_ERR_INVALID, "null argument");
    return guarded([&] { *out = new sbg_graph{sbg::parse_sbg(text)}; });
}

sbg_status sbg_graph_from_file(const char* path, sbg_graph** out) {
    if (!path || !out) return fail(SBG_ERR_INVALID, "null argument");
    return guarded([&] { *out = new sbg_graph{sbg::load_sbg_file(path)}; });
}

sbg_status sbg_graph_to_text(const sbg_graph* g, char** out) {
    if (!g || !out) return fail(SBG_ERR_INVALID, "null argument");
    return guarded([&] { *out = copy_string(sbg::serialize_sbg(g->g)); });
}

void sbg_graph_free(sbg_graph* g) { delete g; }

int sbg_graph_order(const sbg_graph* g) { return g ? g->g.order() : 0; }

int sbg_graph_size(const sbg_graph* g) { return g ? g->g.size() : 0; }

sbg_status sbg_chromatic_number(const sbg_graph* g, int* chi) {
    if (!g || !chi) return fail(SBG_ERR_INVALID, "null argument");
    return guarded([&] { *chi = sbg::chromatic_number(g->g); });
}

sbg_status sbg_find_coloring(const sbg_graph* g, int k, int* found, char** witness) {
    if (!g || !found || !witness) return fail(SBG_ERR_INVALID, "null argument");
    return guarded([&] {
        auto c = sbg::find_k_coloring(g->g, k);
        *found = c.has_value() ? 1 : 0;
        std::ostringstream text;
        if (c)
            for (const auto& [v, r] : c->assignment) text << v << " " << r << "\n";
        *witness = copy_string(text.str());
    });
}

sbg_status sbg_analyze(const sbg_graph* g, sbg_analysis* out) {
    if (!g || !out) return fail(SBG_ERR_INVALID, "null argument");
    return guarded([&] {
        out->balanced = sbg::is_balanced(g->g);
        out->antibalanced = sbg::is_antibalanced(g->g);
        out->complete = sbg::is_complete(g->g);
        out->just_complete = sbg::is_just_complete(g->g);
        out->bi_complete = sbg::is_bi_complete(g->g);
        auto t = sbg::thinness(g->g);
        out->thin = t ? *t : -1;
        out->nabla_complete = sbg::is_nabla_complete(g->g);
        out->triple_count = static_cast<int>(sbg::find_triples(g->g).size());
    });
}

sbg_status sbg_apply(const sbg_graph* g, const char* spec, sbg_graph** out) {
    if (!g || !spec || !out) return fail(SBG_ERR_INVALID, "null argument");
    std::istringstream in(spec);
    std::vector<std::string> tok;
    {
        // reuse the SBD list syntax: brackets and commas are separators
        std::string spaced;
        for (const char* p = spec; *p; ++p) {
            if (*p == '[' || *p == ']' || *p == ',') {
                spaced += ' ';
                spaced += *p;
                spaced += ' ';
            } else {
                spaced += *p;
            }
        }
        std::istringstream sp(spaced);
        std::string t;
        while (sp >> t) tok.push_back(t);
    }
    auto parse_sign = [&](const std::string& t) {
        if (t.size() == 1)
            if (auto s = sbg::sign_from_char(t[0])) return *s;
        throw sbg::parse_error(1, "expected sign '+' or '-', got '" + t + "'");
    };
    auto parse_int = [&](const std::string& t) {
        try {
            return std::stoi(t);
        } catch (...) {
            throw sbg::parse_error(1, "expected integer, got '" + t + "'");
        }
    };
    try {
        if (tok.empty()) throw sbg::parse_error(1, "empty op spec");
        sbg::OpResult r{g->g, {}};
        const std::string& op = tok[0];
        if (op == "sb1_vertex" && tok.size() == 2) {
            sbg::Addition a{sbg::Addition::Vertex{tok[1]}};
            r = sbg::sb1_add(g->g, {&a, 1});
        } else if (op == "sb1_edge" && tok.size() == 4) {
            sbg::Addition a{sbg::EdgeRef{tok[1], tok[2], parse_sign(tok[3])}};
            r = sbg::sb1_add(g->g, {&a, 1});
        } else if (op == "sb2" && tok.size() == 3) {
            r = sbg::sb2_identify(g->g, tok[1], tok[2]);
        } else if (op == "sb4" && tok.size() == 2) {
            r = sbg::sb4_switch(g->g, tok[1]);
        } else if (op == "sb5even" && tok.size() == 3) {
            r = sbg::sb5_even(g->g, tok[1], parse_int(tok[2]));
        } else if (op == "sb5odd" && tok.size() >= 6 && tok[4] == "[" && tok[5] == "pad:" &&
                   tok.back() == "]") {
            std::vector<sbg::EdgeRef> pad;
            size_t i = 6;
            while (i + 2 < tok.size() && tok[i] != "]") {
                if (!pad.empty()) {
                    if (tok[i] != ",") throw sbg::parse_error(1, "expected ',' in pad list");
                    ++i;
                }
                if (i + 3 > tok.size() - 1) throw sbg::parse_error(1, "truncated pad entry");
                pad.push_back({tok[i], tok[i + 1], parse_sign(tok[i + 2])});
                i += 3;
            }
            r = sbg::sb5_odd(g->g, tok[1], tok[2], parse_int(tok[3]), pad);
        } else {
            throw sbg::parse_error(1, "unrecognized op spec '" + std::string(spec) + "'");
        }
        *out = new sbg_graph{std::move(r.graph)};
        return SBG_OK;
    } catch (const sbg::parse_error& e) {
        return fail(SBG_ERR_PARSE, e.what());
    } catch (const sbg::error& e) {
        return fail(SBG_ERR_INVALID, e.what());
    } catch (const std::exception& e) {
        return fail(SBG_ERR_INTERNAL, e.what());
    }
}

sbg_status sbg_script_from_text(const char* text, sbg_script** out) {
    if (!text || !out) return fail(SBG_ERR_INVALID, "null argument");
    return guarded([&] { *out = new sbg_script{sbg::parse_script(text)}; });
}

sbg_status sbg_script_from_file(const char* path, sbg_script** out) {
    if (!path || !out) return fail(SBG_ERR_INVALID, "null argument");
    return guarded([&] { *out = new sbg_script{sbg::load_script_file(path)}; });
}

sbg_status sbg_script_to_text(const sbg_script* s, char** out) {
    if (!s || !out) return fail(SBG_ERR_INVALID, "null argument");
    return guarded([&] { *out = copy_string(sbg::serialize_script(s->s)); });
}

void sbg_script_free(sbg_script* s) { delete s; }

sbg_status sbg_script_check(const sbg_script* s, const char* base_dir, int verify_colorability,
                            sbg_report** out) {
    if (!s || !out) return fail(SBG_ERR_INVALID, "null argument");
    return guarded([&] {
        sbg::CheckOptions opts;
        opts.verify_colorability = verify_colorability != 0;
        opts.base_dir = base_dir ? base_dir : "";
        *out = new sbg_report{sbg::check_script(s->s, opts)};
    });
}

int sbg_report_accepted(const sbg_report* r) { return r && r->r.accepted ? 1 : 0; }

sbg_status sbg_report_to_text(const sbg_report* r, char** out) {
    if (!r || !out) return fail(SBG_ERR_INVALID, "null argument");
    return guarded([&] { *out = copy_string(sbg::format_check_report(r->r)); });
}

sbg_status sbg_report_final_graph(const sbg_report* r, sbg_graph** out) {
    if (!r || !out) return fail(SBG_ERR_INVALID, "null argument");
    if (!r->r.final_graph) return fail(SBG_ERR_INVALID, "report carries no final graph");
    return guarded([&] { *out = new sbg_graph{*r->r.final_graph}; });
}

void sbg_report_free(sbg_report* r) { delete r; }

sbg_status sbg_gen_lemma_bicomplete(int r, sbg_script** out) {
    if (!out) return fail(SBG_ERR_INVALID, "null argument");
    return guarded([&] { *out = new sbg_script{sbg::gen_lemma_bicomplete(r)}; });
}

sbg_status sbg_gen_lemma_nabla(int r, sbg_script** out) {
    if (!out) return fail(SBG_ERR_INVALID, "null argument");
    return guarded([&] { *out = new sbg_script{sbg::gen_lemma_nabla(r)}; });
}

sbg_status sbg_search_derivation(const sbg_graph* target, const char* target_path, int q,
                                 int max_steps, int max_order, int* found, sbg_script** out) {
    if (!target || !found || !out) return fail(SBG_ERR_INVALID, "null argument");
    return guarded([&] {
        auto script = sbg::search_derivation(target->g, q, {max_steps, max_order},
                                             target_path ? target_path : "");
        *found = script.has_value() ? 1 : 0;
        if (script) *out = new sbg_script{std::move(*script)};
    });
}

sbg_status sbg_fuzz_closure(int n, int q, int trials, uint64_t seed, int* violations,
                            char** summary) {
    if (!violations || !summary) return fail(SBG_ERR_INVALID, "null argument");
    return guarded([&] {
        auto outcome = sbg::fuzz_closure({n, q, trials, seed});
        *violations = outcome.total_violations;
        std::string text = sbg::format_fuzz_summary(outcome);
        for (const auto& dump : outcome.counterexamples) text += "\n" + dump;
        *summary = copy_string(text);
    });
}

} // extern "C"
