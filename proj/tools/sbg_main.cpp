// Command-line front end; talks to the toolkit through the C API only.
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sbg.h"

namespace {

enum ExitCode { exit_ok = 0, exit_negative = 1, exit_usage = 2, exit_internal = 3 };

int status_exit(sbg_status s) {
    switch (s) {
        case SBG_OK: return exit_ok;
        case SBG_ERR_PARSE:
        case SBG_ERR_IO:
        case SBG_ERR_INVALID: return exit_usage;
        case SBG_ERR_INTERNAL: return exit_internal;
    }
    return exit_internal;
}

int complain(sbg_status s) {
    std::cerr << "error: " << sbg_last_error() << "\n";
    return status_exit(s);
}

struct GraphHandle {
    sbg_graph* g = nullptr;
    ~GraphHandle() { sbg_graph_free(g); }
};
struct ScriptHandle {
    sbg_script* s = nullptr;
    ~ScriptHandle() { sbg_script_free(s); }
};
struct ReportHandle {
    sbg_report* r = nullptr;
    ~ReportHandle() { sbg_report_free(r); }
};
struct StringHandle {
    char* s = nullptr;
    ~StringHandle() { sbg_string_free(s); }
};

int cmd_chroma(const std::string& file) {
    GraphHandle g;
    if (auto s = sbg_graph_from_file(file.c_str(), &g.g); s != SBG_OK) return complain(s);
    int chi = 0;
    if (auto s = sbg_chromatic_number(g.g, &chi); s != SBG_OK) return complain(s);
    std::cout << "chi = " << chi << "\n";
    if (chi >= 1) {
        int found = 0;
        StringHandle witness;
        if (auto s = sbg_find_coloring(g.g, chi, &found, &witness.s); s != SBG_OK)
            return complain(s);
        if (found) std::cout << witness.s;
    }
    return exit_ok;
}

int cmd_analyze(const std::string& file) {
    GraphHandle g;
    if (auto s = sbg_graph_from_file(file.c_str(), &g.g); s != SBG_OK) return complain(s);
    sbg_analysis a{};
    if (auto s = sbg_analyze(g.g, &a); s != SBG_OK) return complain(s);
    const char* completeness = a.bi_complete      ? "bi-complete"
                               : a.just_complete  ? "just-complete"
                               : a.complete       ? "complete"
                                                  : "not-complete";
    std::cout << "order: " << sbg_graph_order(g.g) << "\n";
    std::cout << "edges: " << sbg_graph_size(g.g) << "\n";
    std::cout << "balanced: " << (a.balanced ? "true" : "false") << "\n";
    std::cout << "antibalanced: " << (a.antibalanced ? "true" : "false") << "\n";
    std::cout << "completeness: " << completeness << "\n";
    if (a.thin >= 0)
        std::cout << "thin: " << a.thin << "\n";
    else
        std::cout << "thin: none\n";
    std::cout << "nabla_complete: " << (a.nabla_complete ? "true" : "false") << "\n";
    std::cout << "triples: " << a.triple_count << "\n";
    return exit_ok;
}

int cmd_apply(const std::string& file, const std::vector<std::string>& spec_words) {
    GraphHandle g;
    if (auto s = sbg_graph_from_file(file.c_str(), &g.g); s != SBG_OK) return complain(s);
    std::string spec;
    for (const auto& w : spec_words) {
        if (!spec.empty()) spec += " ";
        spec += w;
    }
    GraphHandle out;
    if (auto s = sbg_apply(g.g, spec.c_str(), &out.g); s != SBG_OK) {
        std::cerr << "error: " << sbg_last_error() << "\n";
        return s == SBG_ERR_INVALID ? exit_negative : status_exit(s);
    }
    StringHandle text;
    if (auto s = sbg_graph_to_text(out.g, &text.s); s != SBG_OK) return complain(s);
    std::cout << text.s;
    return exit_ok;
}

int cmd_check(const std::string& file, bool verify_colorability) {
    ScriptHandle script;
    if (auto s = sbg_script_from_file(file.c_str(), &script.s); s != SBG_OK) return complain(s);
    std::string base_dir = std::filesystem::path(file).parent_path().string();
    ReportHandle report;
    if (auto s = sbg_script_check(script.s, base_dir.c_str(), verify_colorability ? 1 : 0, &report.r);
        s != SBG_OK)
        return complain(s);
    StringHandle text;
    if (auto s = sbg_report_to_text(report.r, &text.s); s != SBG_OK) return complain(s);
    std::cout << text.s;
    return sbg_report_accepted(report.r) ? exit_ok : exit_negative;
}

int cmd_gen(const std::string& lemma, int r) {
    ScriptHandle script;
    sbg_status s;
    if (lemma == "lemma-nabla")
        s = sbg_gen_lemma_nabla(r, &script.s);
    else if (lemma == "lemma-bicomplete")
        s = sbg_gen_lemma_bicomplete(r, &script.s);
    else {
        std::cerr << "error: unknown generator '" << lemma << "'\n";
        return exit_usage;
    }
    if (s != SBG_OK) return complain(s);
    StringHandle text;
    if (auto st = sbg_script_to_text(script.s, &text.s); st != SBG_OK) return complain(st);
    std::cout << text.s;
    return exit_ok;
}

int cmd_search(const std::string& file, int q, int steps, int size) {
    GraphHandle target;
    if (auto s = sbg_graph_from_file(file.c_str(), &target.g); s != SBG_OK) return complain(s);
    int found = 0;
    ScriptHandle script;
    if (auto s = sbg_search_derivation(target.g, file.c_str(), q, steps, size, &found, &script.s);
        s != SBG_OK)
        return complain(s);
    if (!found) {
        std::cerr << "no derivation found within the budget (not a refutation)\n";
        return exit_negative;
    }
    StringHandle text;
    if (auto s = sbg_script_to_text(script.s, &text.s); s != SBG_OK) return complain(s);
    std::cout << text.s;
    return exit_ok;
}

int cmd_fuzz(int n, int q, int trials, std::uint64_t seed) {
    int violations = 0;
    StringHandle summary;
    if (auto s = sbg_fuzz_closure(n, q, trials, seed, &violations, &summary.s); s != SBG_OK)
        return complain(s);
    std::cout << "closure fuzz: n=" << n << " q=" << q << " trials=" << trials << " seed=" << seed
              << "\n";
    std::cout << summary.s;
    return violations == 0 ? exit_ok : exit_negative;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"signed bi-graph toolkit"};
    app.require_subcommand(1);

    std::string file, lemma;
    std::vector<std::string> op_spec;
    bool verify_colorability = false;
    int q = 3, steps = 4, size = 8, r = 3, n = 6, trials = 500;
    std::uint64_t seed = 0;

    auto* chroma = app.add_subcommand("chroma", "chromatic number and a witness coloring");
    chroma->add_option("file", file, "SBG file")->required();

    auto* analyze = app.add_subcommand("analyze", "balance, completeness, thinness, triples");
    analyze->add_option("file", file, "SBG file")->required();

    auto* apply = app.add_subcommand("apply", "apply one operation and print the result");
    apply->add_option("file", file, "SBG file")->required();
    apply->add_option("op", op_spec, "operation spec, e.g. sb4 v1")->required();

    auto* check = app.add_subcommand("check", "check a derivation script");
    check->add_option("script", file, "SBD file")->required();
    check->add_flag("--verify-colorability", verify_colorability,
                    "also verify every intermediate is not (q-1)-colorable");

    auto* gen = app.add_subcommand("gen", "emit a construction script");
    gen->add_option("lemma", lemma, "lemma-nabla or lemma-bicomplete")->required();
    gen->add_option("r", r, "construction parameter")->required();

    auto* search = app.add_subcommand("search", "bounded derivation search");
    search->add_option("target", file, "SBG file")->required();
    search->add_option("--q", q, "declared chromatic number")->required();
    search->add_option("--steps", steps, "step budget");
    search->add_option("--size", size, "max intermediate order");

    auto* fuzz = app.add_subcommand("fuzz-closure", "seeded closure fuzzing");
    fuzz->add_option("--n", n, "max input order");
    fuzz->add_option("--q", q, "closure class parameter");
    fuzz->add_option("--trials", trials, "trials per operation");
    fuzz->add_option("--seed", seed, "rng seed")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    if (chroma->parsed()) return cmd_chroma(file);
    if (analyze->parsed()) return cmd_analyze(file);
    if (apply->parsed()) return cmd_apply(file, op_spec);
    if (check->parsed()) return cmd_check(file, verify_colorability);
    if (gen->parsed()) return cmd_gen(lemma, r);
    if (search->parsed()) return cmd_search(file, q, steps, size);
    if (fuzz->parsed()) return cmd_fuzz(n, q, trials, seed);
    return exit_usage;
}
