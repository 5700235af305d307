#include <filesystem>
#include <sstream>

#include "sbg/coloring.hpp"
#include "sbg/derivation.hpp"
#include "sbg/io.hpp"
#include "sbg/signatures.hpp"

namespace sbg {

namespace {

const char* op_label(StepKind k) {
    switch (k) {
        case StepKind::axiom: return "axiom";
        case StepKind::sb1_vertex: return "sb1_vertex";
        case StepKind::sb1_edge: return "sb1_edge";
        case StepKind::sb2: return "sb2";
        case StepKind::sb3: return "sb3";
        case StepKind::sb4: return "sb4";
        case StepKind::sb5even: return "sb5even";
        case StepKind::sb5odd: return "sb5odd";
        case StepKind::sb3p: return "sb3p";
    }
    return "?";
}

// Rename map making the second operand disjoint from the first: colliding
// names get the "<binding>." prefix.
std::map<std::string, std::string> collision_renaming(const SignedBiGraph& a,
                                                      const SignedBiGraph& b,
                                                      const std::string& b_binding) {
    std::map<std::string, std::string> mapping;
    for (const auto& name : b.vertices()) {
        if (!a.has_vertex(name)) continue;
        std::string fresh = b_binding + "." + name;
        if (a.has_vertex(fresh) || b.has_vertex(fresh))
            throw error("cannot make operands disjoint: '" + fresh + "' already exists");
        mapping[name] = fresh;
    }
    return mapping;
}

const std::string& translated(const std::map<std::string, std::string>& mapping,
                              const std::string& name) {
    auto it = mapping.find(name);
    return it == mapping.end() ? name : it->second;
}

} // namespace

OpResult apply_script_step(const std::map<std::string, SignedBiGraph>& env, const ScriptStep& step,
                           int script_q) {
    auto src = [&](const std::string& name) -> const SignedBiGraph& {
        auto it = env.find(name);
        if (it == env.end()) throw error("unknown binding '" + name + "'");
        return it->second;
    };
    // Scripts derive chromatic number q, so the closure operations run in
    // the class of graphs that are not (q-1)-colorable.
    const int closure_q = script_q - 1;

    switch (step.kind) {
        case StepKind::axiom: {
            if (step.axiom_order != script_q)
                throw error("axiom order " + std::to_string(step.axiom_order) + " must equal q = " +
                            std::to_string(script_q));
            OpResult r{SignedBiGraph::complete_positive(step.axiom_order),
                       {"axiom", {std::to_string(step.axiom_order)}, {}, {}}};
            return r;
        }
        case StepKind::sb1_vertex: {
            Addition a{Addition::Vertex{step.args[0]}};
            return sb1_add(src(step.src_a), {&a, 1});
        }
        case StepKind::sb1_edge: {
            Addition a{EdgeRef{step.args[0], step.args[1], step.sign_a}};
            return sb1_add(src(step.src_a), {&a, 1});
        }
        case StepKind::sb2:
            return sb2_identify(src(step.src_a), step.args[0], step.args[1]);
        case StepKind::sb3: {
            const SignedBiGraph& a = src(step.src_a);
            const SignedBiGraph& b = src(step.src_b);
            auto mapping = collision_renaming(a, b, step.src_b);
            return sb3_splice(a, step.args[0], step.split, b.rename_vertices(mapping),
                              translated(mapping, step.args[1]), translated(mapping, step.args[2]));
        }
        case StepKind::sb4:
            return sb4_switch(src(step.src_a), step.args[0]);
        case StepKind::sb5even:
            return sb5_even(src(step.src_a), step.args[0], closure_q);
        case StepKind::sb5odd:
            return sb5_odd(src(step.src_a), step.args[0], step.args[1], closure_q, step.pad);
        case StepKind::sb3p: {
            const SignedBiGraph& a = src(step.src_a);
            const SignedBiGraph& b = src(step.src_b);
            auto mapping = collision_renaming(a, b, step.src_b);
            return sb3_prime(a, {step.args[0], step.args[1], step.sign_a}, b.rename_vertices(mapping),
                             {translated(mapping, step.args[2]), translated(mapping, step.args[3]),
                              step.sign_b});
        }
    }
    throw error("unhandled step kind");
}

CheckReport check_script(const DerivationScript& script, const CheckOptions& options) {
    CheckReport report;
    report.steps_ok = true;
    std::map<std::string, SignedBiGraph> env;

    for (const auto& step : script.steps) {
        StepReport sr;
        sr.name = step.name;
        sr.op = op_label(step.kind);
        try {
            OpResult r = apply_script_step(env, step, script.q);
            sr.order = r.graph.order();
            sr.size = r.graph.size();
            sr.ok = true;
            if (options.verify_colorability) {
                bool colorable = script.q - 1 >= 1
                                     ? find_k_coloring(r.graph, script.q - 1).has_value()
                                     : r.graph.order() == 0;
                sr.not_colorable = !colorable;
                if (colorable) {
                    sr.ok = false;
                    sr.error = "intermediate admits a (q-1)-coloring: checker or script bug";
                }
            }
            if (sr.ok) env.emplace(step.name, std::move(r.graph));
        } catch (const error& e) {
            sr.ok = false;
            sr.error = e.what();
        }
        bool failed = !sr.ok;
        report.steps.push_back(std::move(sr));
        if (failed) {
            report.steps_ok = false;
            break;
        }
    }

    if (report.steps_ok && !script.steps.empty())
        report.final_graph = env.at(script.steps.back().name);

    if (script.target && report.steps_ok) {
        try {
            SignedBiGraph t;
            if (options.target_override) {
                t = *options.target_override;
            } else {
                std::filesystem::path p(script.target->path);
                if (p.is_relative() && !options.base_dir.empty())
                    p = std::filesystem::path(options.base_dir) / p;
                t = load_sbg_file(p.string());
            }
            const SignedBiGraph& bound = env.at(script.target->binding);
            bool ok = false;
            switch (script.target->mode) {
                case MatchMode::exact: ok = bound == t; break;
                case MatchMode::iso: ok = is_isomorphic(bound, t); break;
                case MatchMode::switch_iso: ok = switch_isomorphic(bound, t); break;
            }
            report.target_ok = ok;
            report.target_detail = ok ? "target matched" : "target not matched";
        } catch (const error& e) {
            report.target_ok = false;
            report.target_detail = e.what();
        }
    }

    report.accepted = report.steps_ok && !script.steps.empty() &&
                      (!script.target || report.target_ok == true);
    return report;
}

std::string format_check_report(const CheckReport& report) {
    std::ostringstream out;
    for (const auto& s : report.steps) {
        if (s.ok) {
            out << "ok " << s.name << " " << s.op << " order=" << s.order << " edges=" << s.size;
            if (s.not_colorable.has_value()) out << " non-colorable=" << (*s.not_colorable ? "yes" : "NO");
            out << "\n";
        } else {
            out << "error " << s.name << " " << s.op << ": " << s.error << "\n";
        }
    }
    if (report.target_ok.has_value())
        out << "target " << (*report.target_ok ? "ok" : "FAIL") << ": " << report.target_detail << "\n";
    out << (report.accepted ? "ACCEPTED" : "REJECTED") << "\n";
    return out.str();
}

} // namespace sbg
