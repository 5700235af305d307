#include "sbg/fuzz.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "sbg/coloring.hpp"
#include "sbg/hajos_ops.hpp"
#include "sbg/io.hpp"
#include "sbg/random.hpp"

namespace sbg {

namespace {

struct Trial {
    std::vector<SignedBiGraph> inputs;
    std::function<SignedBiGraph(const std::vector<SignedBiGraph>&)> run;
    std::string description;
};

// Second operands get disjoint names up front; the library operations
// reject shared vertices.
SignedBiGraph with_prefix(const SignedBiGraph& g, const std::string& prefix) {
    std::map<std::string, std::string> mapping;
    for (const auto& v : g.vertices()) mapping[v] = prefix + v;
    return g.rename_vertices(mapping);
}

std::vector<std::pair<std::string, std::string>> nonadjacent_pairs(const SignedBiGraph& g) {
    std::vector<std::pair<std::string, std::string>> out;
    const auto vs = g.vertices();
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (g.multiplicity(vs[i], vs[j]) == 0) out.emplace_back(vs[i], vs[j]);
    return out;
}

std::vector<SignedEdge> absent_edges(const SignedBiGraph& g) {
    std::vector<SignedEdge> out;
    const auto vs = g.vertices();
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            for (Sign s : {Sign::plus, Sign::minus})
                if (!g.has_edge(vs[i], vs[j], s)) out.push_back({vs[i], vs[j], s});
    return out;
}

Trial make_sb1(Rng& rng, const FuzzConfig& cfg) {
    SignedBiGraph g = random_non_q_colorable(rng, cfg.n, cfg.q);
    int count = rng.range(1, 3);
    std::vector<Addition> additions;
    SignedBiGraph preview = g;
    std::ostringstream desc;
    desc << "sb1";
    for (int i = 0; i < count; ++i) {
        auto absent = absent_edges(preview);
        if (!absent.empty() && rng.chance(0.6)) {
            const auto& e = rng.pick(absent);
            additions.push_back({EdgeRef{e.u, e.v, e.sign}});
            preview = preview.add_edge(e.u, e.v, e.sign);
            desc << " edge(" << e.u << "," << e.v << "," << sign_char(e.sign) << ")";
        } else {
            std::string name = "w" + std::to_string(i + 1);
            additions.push_back({Addition::Vertex{name}});
            preview = preview.add_vertex(name);
            desc << " vertex(" << name << ")";
        }
    }
    return {{std::move(g)},
            [additions](const std::vector<SignedBiGraph>& in) {
                return sb1_add(in[0], additions).graph;
            },
            desc.str()};
}

Trial make_sb2(Rng& rng, const FuzzConfig& cfg) {
    SignedBiGraph g = random_non_q_colorable(rng, cfg.n, cfg.q);
    auto pairs = nonadjacent_pairs(g);
    if (pairs.empty()) {
        g = g.add_vertex("w1"); // adding a vertex keeps the graph non-q-colorable
        pairs = nonadjacent_pairs(g);
    }
    auto [u, v] = rng.pick(pairs);
    return {{std::move(g)},
            [u, v](const std::vector<SignedBiGraph>& in) { return sb2_identify(in[0], u, v).graph; },
            "sb2 " + u + " " + v};
}

Trial make_sb3(Rng& rng, const FuzzConfig& cfg) {
    SignedBiGraph g1 = random_non_q_colorable(rng, cfg.n, cfg.q);
    SignedBiGraph g2;
    std::vector<SignedEdge> positive;
    for (int attempt = 0;; ++attempt) {
        g2 = with_prefix(random_non_q_colorable(rng, cfg.n, cfg.q), "u.");
        for (const auto& e : g2.edges())
            if (e.sign == Sign::plus) positive.push_back(e);
        if (!positive.empty()) break;
        if (attempt > 200) throw error("could not sample a second operand with a positive edge");
    }
    const auto& e = rng.pick(positive);
    bool swap = rng.chance(0.5);
    std::string x = swap ? e.v : e.u;
    std::string y = swap ? e.u : e.v;
    std::string v = rng.pick(g1.vertices());
    SplitAssignment split;
    for (const auto& inc : g1.incident_edges(v))
        if (rng.chance(0.5)) split.push_back({inc.u == v ? inc.v : inc.u, inc.sign});
    std::ostringstream desc;
    desc << "sb3 v=" << v << " x=" << x << " y=" << y << " split=" << split.size();
    return {{std::move(g1), std::move(g2)},
            [v, split, x, y](const std::vector<SignedBiGraph>& in) {
                return sb3_splice(in[0], v, split, in[1], x, y).graph;
            },
            desc.str()};
}

Trial make_sb4(Rng& rng, const FuzzConfig& cfg) {
    SignedBiGraph g = random_non_q_colorable(rng, cfg.n, cfg.q);
    std::string v = rng.pick(g.vertices());
    return {{std::move(g)},
            [v](const std::vector<SignedBiGraph>& in) { return sb4_switch(in[0], v).graph; },
            "sb4 " + v};
}

Trial make_sb5even(Rng& rng, const FuzzConfig& cfg) {
    SignedBiGraph g = random_non_q_colorable(rng, cfg.n, cfg.q);
    std::vector<std::string> low;
    for (const auto& v : g.vertices())
        if (static_cast<int>(g.neighbors(v).size()) <= cfg.q / 2) low.push_back(v);
    std::string v;
    if (!low.empty() && rng.chance(0.7)) {
        v = rng.pick(low);
    } else {
        // attach a fringe vertex with at most q/2 neighbors and remove it
        v = "w1";
        g = g.add_vertex(v);
        auto others = g.vertices();
        others.erase(std::find(others.begin(), others.end(), v));
        int deg = rng.range(0, cfg.q / 2);
        for (int i = 0; i < deg; ++i) {
            std::string far = others[rng.below(static_cast<int>(others.size()))];
            others.erase(std::find(others.begin(), others.end(), far));
            g = g.add_edge(v, far, rng.chance(0.5) ? Sign::plus : Sign::minus);
        }
    }
    int q = cfg.q;
    return {{std::move(g)},
            [v, q](const std::vector<SignedBiGraph>& in) { return sb5_even(in[0], v, q).graph; },
            "sb5even " + v};
}

Trial make_sb5odd(Rng& rng, const FuzzConfig& cfg) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        SignedBiGraph g = random_non_q_colorable(rng, cfg.n, cfg.q);
        std::vector<SignedEdge> lonely_negative;
        for (const auto& e : g.edges())
            if (e.sign == Sign::minus && g.multiplicity(e.u, e.v) == 1) lonely_negative.push_back(e);
        if (lonely_negative.empty()) {
            auto pairs = nonadjacent_pairs(g);
            if (pairs.empty()) continue;
            auto [a, b] = rng.pick(pairs);
            g = g.add_edge(a, b, Sign::minus);
            lonely_negative.push_back({a < b ? a : b, a < b ? b : a, Sign::minus});
        }
        const auto& e = rng.pick(lonely_negative);
        SignedBiGraph contracted =
            g.remove_edge(e.u, e.v, Sign::minus).identify_vertices(e.u, e.v);
        auto pad = suggest_pad(contracted, (cfg.q - 3) / 2);
        std::string u = e.u, w = e.v;
        int q = cfg.q;
        return {{std::move(g)},
                [u, w, q, pad](const std::vector<SignedBiGraph>& in) {
                    return sb5_odd(in[0], u, w, q, pad).graph;
                },
                "sb5odd " + u + " " + w + " pad=" + std::to_string(pad.size())};
    }
    throw error("could not sample an sb5odd instance");
}

Trial make_sb3p(Rng& rng, const FuzzConfig& cfg) {
    SignedBiGraph g1 = random_non_q_colorable(rng, cfg.n, cfg.q);
    SignedBiGraph g2 = with_prefix(random_non_q_colorable(rng, cfg.n, cfg.q), "u.");
    auto e1s = g1.edges();
    auto e2s = g2.edges();
    if (e1s.empty() || e2s.empty()) throw error("sampled an edgeless operand"); // cannot happen: chi > q >= 1
    auto pick_ref = [&](const std::vector<SignedEdge>& es) {
        const auto& e = rng.pick(es);
        bool swap = rng.chance(0.5);
        return EdgeRef{swap ? e.v : e.u, swap ? e.u : e.v, e.sign};
    };
    EdgeRef e1 = pick_ref(e1s);
    EdgeRef e2 = pick_ref(e2s);
    std::ostringstream desc;
    desc << "sb3p e1=(" << e1.u << "," << e1.v << "," << sign_char(e1.sign) << ") e2=(" << e2.u
         << "," << e2.v << "," << sign_char(e2.sign) << ")";
    return {{std::move(g1), std::move(g2)},
            [e1, e2](const std::vector<SignedBiGraph>& in) {
                return sb3_prime(in[0], e1, in[1], e2).graph;
            },
            desc.str()};
}

bool all_inputs_hard(const std::vector<SignedBiGraph>& inputs, int q) {
    for (const auto& g : inputs)
        if (find_k_coloring(g, q)) return false;
    return true;
}

// A violation needs: every input non-q-colorable, the operation
// applicable, the output q-colorable.
bool still_violating(const Trial& t, const std::vector<SignedBiGraph>& inputs, int q) {
    if (!all_inputs_hard(inputs, q)) return false;
    try {
        return find_k_coloring(t.run(inputs), q).has_value();
    } catch (const error&) {
        return false;
    }
}

std::vector<SignedBiGraph> minimize(const Trial& t, int q) {
    std::vector<SignedBiGraph> best = t.inputs;
    bool improved = true;
    while (improved) {
        improved = false;
        for (size_t gi = 0; gi < best.size(); ++gi) {
            for (const auto& e : best[gi].edges()) {
                auto candidate = best;
                candidate[gi] = candidate[gi].remove_edge(e.u, e.v, e.sign);
                if (still_violating(t, candidate, q)) {
                    best = std::move(candidate);
                    improved = true;
                    break;
                }
            }
        }
    }
    return best;
}

std::string dump_violation(const Trial& t, const std::vector<SignedBiGraph>& inputs,
                           const SignedBiGraph& output, int q) {
    std::ostringstream out;
    out << "violation: " << t.description << "\n";
    for (size_t i = 0; i < inputs.size(); ++i)
        out << "input " << i + 1 << ":\n" << serialize_sbg(inputs[i]);
    out << "output (q-colorable, q=" << q << "):\n" << serialize_sbg(output);
    return out.str();
}

} // namespace

FuzzOutcome fuzz_closure(const FuzzConfig& config) {
    if (config.trials < 1) throw error("trial count must be positive");
    if (config.q < 1) throw error("q must be >= 1");
    if (config.seed == 0) throw error("a nonzero seed is required");
    Rng rng(config.seed);

    using Maker = Trial (*)(Rng&, const FuzzConfig&);
    std::vector<std::pair<std::string, Maker>> ops{{"sb1", make_sb1},   {"sb2", make_sb2},
                                                   {"sb3", make_sb3},   {"sb4", make_sb4},
                                                   {"sb3p", make_sb3p}};
    if (config.q % 2 == 0) ops.emplace_back("sb5even", make_sb5even);
    if (config.q % 2 == 1 && config.q >= 3) ops.emplace_back("sb5odd", make_sb5odd);

    FuzzOutcome outcome;
    for (const auto& [name, maker] : ops) {
        OpFuzzStats stats{name, 0, 0};
        for (int t = 0; t < config.trials; ++t) {
            Trial trial = maker(rng, config);
            SignedBiGraph out = trial.run(trial.inputs);
            ++stats.trials;
            if (find_k_coloring(out, config.q)) {
                ++stats.violations;
                auto small = minimize(trial, config.q);
                outcome.counterexamples.push_back(
                    dump_violation(trial, small, trial.run(small), config.q));
            }
        }
        outcome.total_trials += stats.trials;
        outcome.total_violations += stats.violations;
        outcome.per_op.push_back(std::move(stats));
    }
    return outcome;
}

std::string format_fuzz_summary(const FuzzOutcome& outcome) {
    std::ostringstream out;
    out << "operation  trials  violations\n";
    auto row = [&](const std::string& name, int trials, int violations) {
        out << name;
        for (size_t i = name.size(); i < 11; ++i) out << ' ';
        std::string t = std::to_string(trials), v = std::to_string(violations);
        for (size_t i = t.size(); i < 6; ++i) out << ' ';
        out << t;
        for (size_t i = v.size(); i < 12; ++i) out << ' ';
        out << v << "\n";
    };
    for (const auto& s : outcome.per_op) row(s.op, s.trials, s.violations);
    row("total", outcome.total_trials, outcome.total_violations);
    return out.str();
}

} // namespace sbg
