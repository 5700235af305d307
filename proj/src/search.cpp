#include <deque>
#include <sstream>

#include "sbg/coloring.hpp"
#include "sbg/derivation.hpp"
#include "sbg/hajos_ops.hpp"
#include "sbg/structure.hpp"

namespace sbg {

namespace {

// Cheap isomorphism-invariant key; candidates sharing a key still get a
// full isomorphism check before being discarded.
std::string certificate(const SignedBiGraph& g) {
    const AdjacencyMatrix m = AdjacencyMatrix::from(g);
    std::vector<std::array<int, 3>> prof(m.n, {0, 0, 0});
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) {
            switch (m.at(i, j)) {
                case 1: ++prof[i][0]; break;
                case 2: ++prof[i][1]; break;
                case 3: ++prof[i][2]; break;
                default: break;
            }
        }
    std::sort(prof.begin(), prof.end());
    std::ostringstream out;
    out << m.n << ":";
    for (const auto& p : prof) out << p[0] << "," << p[1] << "," << p[2] << ";";
    return out.str();
}

struct Node {
    SignedBiGraph g;
    int parent = -1;
    int depth = 0;
    ScriptStep step; // producing step; src_a rewritten during reconstruction
};

std::string fresh_vertex_name(const SignedBiGraph& g) {
    for (int i = 1;; ++i) {
        std::string name = "w" + std::to_string(i);
        if (!g.has_vertex(name)) return name;
    }
}

DerivationScript reconstruct(const std::vector<Node>& nodes, int solution, int q,
                             const std::string& target_path) {
    std::vector<int> chain;
    for (int i = solution; i >= 0; i = nodes[i].parent) chain.push_back(i);
    std::reverse(chain.begin(), chain.end());

    DerivationScript s;
    s.q = q;
    std::string prev;
    for (size_t i = 0; i < chain.size(); ++i) {
        ScriptStep step = nodes[chain[i]].step;
        step.name = "s" + std::to_string(i);
        if (i == 0) {
            s.steps.push_back(std::move(step));
            prev = s.steps.back().name;
            continue;
        }
        step.src_a = prev;
        if (step.kind == StepKind::sb3p) {
            // The fresh axiom operand was named at expansion time; bind it
            // right before its use.
            ScriptStep ax;
            ax.name = step.src_b;
            ax.kind = StepKind::axiom;
            ax.axiom_order = q;
            s.steps.push_back(std::move(ax));
        }
        s.steps.push_back(std::move(step));
        prev = s.steps.back().name;
    }
    if (!target_path.empty()) s.target = ScriptTarget{prev, MatchMode::iso, target_path};
    return s;
}

} // namespace

std::optional<DerivationScript> search_derivation(const SignedBiGraph& target, int q,
                                                  const SearchLimits& limits,
                                                  const std::string& target_path) {
    if (q < 1) throw error("q must be >= 1");
    int chi = chromatic_number(target);
    if (chi != q)
        throw error("target has chromatic number " + std::to_string(chi) + ", not q = " +
                    std::to_string(q));
    const int closure_q = q - 1;

    std::vector<Node> nodes;
    std::map<std::string, std::vector<int>> seen;

    auto is_new = [&](const SignedBiGraph& g) {
        auto& bucket = seen[certificate(g)];
        for (int idx : bucket)
            if (is_isomorphic(nodes[idx].g, g)) return false;
        return true;
    };
    auto record = [&](Node node) {
        int idx = static_cast<int>(nodes.size());
        seen[certificate(node.g)].push_back(idx);
        nodes.push_back(std::move(node));
        return idx;
    };

    {
        Node root;
        root.g = SignedBiGraph::complete_positive(q);
        root.step.kind = StepKind::axiom;
        root.step.axiom_order = q;
        if (is_isomorphic(root.g, target)) {
            record(std::move(root));
            return reconstruct(nodes, 0, q, target_path);
        }
        record(std::move(root));
    }

    // Plain BFS; children are generated in a fixed order, so the first
    // solution found is deterministic.
    for (size_t head = 0; head < nodes.size(); ++head) {
        if (nodes[head].depth >= limits.max_steps) continue;
        const SignedBiGraph g = nodes[head].g; // copy: nodes may reallocate
        const int depth = nodes[head].depth;
        const auto vs = g.vertices();

        std::vector<ScriptStep> candidates;
        auto add = [&](ScriptStep st) { candidates.push_back(std::move(st)); };

        if (g.order() < limits.max_order) {
            ScriptStep st;
            st.kind = StepKind::sb1_vertex;
            st.args = {fresh_vertex_name(g)};
            add(st);
        }
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = i + 1; j < vs.size(); ++j)
                for (Sign s : {Sign::plus, Sign::minus}) {
                    if (g.has_edge(vs[i], vs[j], s)) continue;
                    ScriptStep st;
                    st.kind = StepKind::sb1_edge;
                    st.args = {vs[i], vs[j]};
                    st.sign_a = s;
                    add(st);
                }
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = i + 1; j < vs.size(); ++j) {
                if (g.multiplicity(vs[i], vs[j]) != 0) continue;
                ScriptStep st;
                st.kind = StepKind::sb2;
                st.args = {vs[i], vs[j]};
                add(st);
            }
        for (const auto& v : vs) {
            ScriptStep st;
            st.kind = StepKind::sb4;
            st.args = {v};
            add(st);
        }
        if (closure_q >= 2 && closure_q % 2 == 0) {
            for (const auto& v : vs) {
                if (static_cast<int>(g.neighbors(v).size()) > closure_q / 2) continue;
                ScriptStep st;
                st.kind = StepKind::sb5even;
                st.args = {v};
                add(st);
            }
        }
        if (closure_q >= 3 && closure_q % 2 == 1) {
            for (const auto& e : g.edges()) {
                if (e.sign != Sign::minus || g.multiplicity(e.u, e.v) != 1) continue;
                SignedBiGraph contracted =
                    g.remove_edge(e.u, e.v, Sign::minus).identify_vertices(e.u, e.v);
                ScriptStep st;
                st.kind = StepKind::sb5odd;
                st.args = {e.u, e.v};
                st.pad = suggest_pad(contracted, (closure_q - 3) / 2);
                add(st);
            }
        }
        if (g.order() + q - 1 <= limits.max_order) {
            for (const auto& e : g.edges())
                for (int orient = 0; orient < 2; ++orient) {
                    ScriptStep st;
                    st.kind = StepKind::sb3p;
                    st.src_b = "a" + std::to_string(nodes.size() + candidates.size());
                    st.args = {orient ? e.v : e.u, orient ? e.u : e.v, "v1", "v2"};
                    st.sign_a = e.sign;
                    st.sign_b = Sign::plus;
                    add(st);
                }
        }

        for (auto& st : candidates) {
            st.src_a = "p";
            std::map<std::string, SignedBiGraph> env{{"p", g}};
            if (st.kind == StepKind::sb3p)
                env.emplace(st.src_b, SignedBiGraph::complete_positive(q));
            SignedBiGraph child;
            try {
                child = apply_script_step(env, st, q).graph;
            } catch (const error&) {
                continue; // a candidate that fails its own preconditions
            }
            if (child.order() > limits.max_order) continue;
            if (!is_new(child)) continue;
            Node node;
            node.g = std::move(child);
            node.parent = static_cast<int>(head);
            node.depth = depth + 1;
            node.step = st;
            int idx = record(std::move(node));
            if (is_isomorphic(nodes[idx].g, target)) return reconstruct(nodes, idx, q, target_path);
        }
    }
    return std::nullopt;
}

} // namespace sbg
