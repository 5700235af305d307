#include <array>
#include <set>

#include "sbg/derivation.hpp"
#include "sbg/signatures.hpp"
#include "sbg/structure.hpp"

namespace sbg {

namespace {

// Incremental script builder that keeps the bound environment in sync, so
// the generators can inspect intermediate graphs while emitting steps.
struct ScriptBuilder {
    DerivationScript script;
    std::map<std::string, SignedBiGraph> env;
    std::string current;
    int counter = 0;

    explicit ScriptBuilder(int q) { script.q = q; }

    std::string fresh() { return "g" + std::to_string(counter++); }

    const SignedBiGraph& emit(ScriptStep step) {
        OpResult r = apply_script_step(env, step, script.q);
        current = step.name;
        env.emplace(step.name, std::move(r.graph));
        script.steps.push_back(std::move(step));
        return env.at(current);
    }

    const SignedBiGraph& graph() const { return env.at(current); }

    void axiom(const std::string& name) {
        ScriptStep st;
        st.name = name;
        st.kind = StepKind::axiom;
        st.axiom_order = script.q;
        emit(st);
    }

    void sb4(const std::string& v) {
        ScriptStep st;
        st.name = fresh();
        st.kind = StepKind::sb4;
        st.src_a = current;
        st.args = {v};
        emit(st);
    }

    void sb2(const std::string& u, const std::string& v) {
        ScriptStep st;
        st.name = fresh();
        st.kind = StepKind::sb2;
        st.src_a = current;
        st.args = {u, v};
        emit(st);
    }

    void sb1_edge(const EdgeRef& e) {
        ScriptStep st;
        st.name = fresh();
        st.kind = StepKind::sb1_edge;
        st.src_a = current;
        st.args = {e.u, e.v};
        st.sign_a = e.sign;
        emit(st);
    }

    void sb5odd(const std::string& u, const std::string& v, std::vector<EdgeRef> pad) {
        ScriptStep st;
        st.name = fresh();
        st.kind = StepKind::sb5odd;
        st.src_a = current;
        st.args = {u, v};
        st.pad = std::move(pad);
        emit(st);
    }

    void sb5even(const std::string& v) {
        ScriptStep st;
        st.name = fresh();
        st.kind = StepKind::sb5even;
        st.src_a = current;
        st.args = {v};
        emit(st);
    }
};

std::pair<std::string, std::string> norm_pair(const std::string& a, const std::string& b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

} // namespace

DerivationScript gen_lemma_bicomplete(int r) {
    if (r < 3)
        throw error("lemma-bicomplete generation needs r >= 3; the construction degenerates below");
    ScriptBuilder b(2 * r - 2);
    auto vname = [](int i) { return "v" + std::to_string(i); };

    b.axiom(b.fresh());
    b.sb4(vname(1));

    // Pairs meant to stay deficient after the first contraction.
    std::set<std::pair<std::string, std::string>> designated;
    for (int i = 2; i <= r - 2; ++i) designated.insert(norm_pair(vname(2 * i - 1), vname(2 * i)));

    // Pad everything else among the surviving vertices up to a parallel pair.
    SignedBiGraph h = b.graph()
                          .remove_edge(vname(1), vname(2), Sign::minus)
                          .identify_vertices(vname(1), vname(2));
    std::vector<EdgeRef> pad;
    const auto vs = h.vertices();
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j) {
            if (h.multiplicity(vs[i], vs[j]) != 1) continue;
            if (designated.count(norm_pair(vs[i], vs[j]))) continue;
            Sign missing = h.has_edge(vs[i], vs[j], Sign::plus) ? Sign::minus : Sign::plus;
            pad.push_back({vs[i], vs[j], missing});
        }
    b.sb5odd(vname(1), vname(2), std::move(pad));

    for (int i = 2; i <= r - 2; ++i) {
        b.sb4(vname(2 * i));
        b.sb5odd(vname(2 * i - 1), vname(2 * i), {});
    }

    if (!is_isomorphic(b.graph(), SignedBiGraph::bi_complete(r)))
        throw error("lemma-bicomplete generation for r=" + std::to_string(r) +
                    " did not reach (K_r,±)");
    return b.script;
}

DerivationScript gen_lemma_nabla(int r) {
    if (r < 1) throw error("lemma-nabla generation needs r >= 1");
    const int q = 2 * r + 1;
    ScriptBuilder b(q);

    // r+1 axiom copies; copy i's vertex k lives under vtx[i][k], which
    // tracks renaming and merging as the script unfolds.
    std::vector<std::string> copy(r + 1);
    std::vector<std::vector<std::string>> vtx(r + 1, std::vector<std::string>(2 * r + 1));
    for (int i = 0; i <= r; ++i) {
        copy[i] = "c" + std::to_string(i);
        b.axiom(copy[i]);
        for (int k = 0; k <= 2 * r; ++k) vtx[i][k] = "v" + std::to_string(k + 1);
    }
    b.current = copy[0];

    for (int j = 1; j <= r; ++j) {
        const std::string x1 = vtx[0][j];
        b.sb4(x1);
        const std::string y1 = vtx[0][j + r];

        const SignedBiGraph& a = b.graph();
        if (a.multiplicity(x1, y1) != 1)
            throw error("lemma-nabla generation lost track of the edge " + x1 + y1);
        Sign s1 = a.has_edge(x1, y1, Sign::plus) ? Sign::plus : Sign::minus;

        // Stub names of copy j after the engine's collision renaming.
        std::vector<std::string> local(vtx[j]);
        for (int k = 0; k <= 2 * r; ++k)
            if (a.has_vertex(vtx[j][k])) vtx[j][k] = copy[j] + "." + vtx[j][k];

        ScriptStep st;
        st.name = b.fresh();
        st.kind = StepKind::sb3p;
        st.src_a = b.current;
        st.src_b = copy[j];
        st.args = {x1, y1, local[0], local[2 * j]};
        st.sign_a = s1;
        st.sign_b = Sign::plus;
        b.emit(st);
        vtx[j][0] = x1;

        b.sb2(x1, y1);
        vtx[0][j + r] = x1;
    }

    b.sb5even(vtx[0][0]);

    for (int k = 1; k <= 2 * r; ++k)
        for (int i = 2; i <= r; ++i) {
            b.sb2(vtx[1][k], vtx[i][k]);
            vtx[i][k] = vtx[1][k];
        }

    // The contracted graph now has one triangle per j on m=1 pairs; fill
    // every cross pair to a parallel pair, then switch the triangles onto
    // all-negative signatures.
    std::vector<std::array<std::string, 3>> triples;
    for (int j = 1; j <= r; ++j) triples.push_back({vtx[0][j], vtx[1][2 * j], vtx[1][2 * j - 1]});
    std::map<std::string, int> triple_of;
    for (int j = 0; j < r; ++j)
        for (const auto& v : triples[j]) triple_of[v] = j;

    const auto vs = b.graph().vertices();
    if (static_cast<int>(vs.size()) != 3 * r || triple_of.size() != vs.size())
        throw error("lemma-nabla generation produced an unexpected vertex set");
    for (const auto& v : vs)
        if (!triple_of.count(v)) throw error("lemma-nabla generation produced stray vertex " + v);

    SignedBiGraph desired;
    for (const auto& v : vs) desired = desired.add_vertex(v);
    std::vector<EdgeRef> pads;
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j) {
            int m = b.graph().multiplicity(vs[i], vs[j]);
            if (triple_of.at(vs[i]) == triple_of.at(vs[j])) {
                if (m != 1)
                    throw error("lemma-nabla generation: triangle pair " + vs[i] + "," + vs[j] +
                                " has multiplicity " + std::to_string(m));
                desired = desired.add_edge(vs[i], vs[j], Sign::minus);
            } else {
                desired = desired.add_edge(vs[i], vs[j], Sign::plus);
                desired = desired.add_edge(vs[i], vs[j], Sign::minus);
                if (m == 0)
                    throw error("lemma-nabla generation: cross pair " + vs[i] + "," + vs[j] +
                                " is empty");
                if (m == 1) {
                    Sign missing =
                        b.graph().has_edge(vs[i], vs[j], Sign::plus) ? Sign::minus : Sign::plus;
                    pads.push_back({vs[i], vs[j], missing});
                }
            }
        }
    for (const auto& e : pads) b.sb1_edge(e);

    auto witness = switch_equivalence_witness(b.graph(), desired);
    if (!witness)
        throw error("lemma-nabla generation: padded graph is not switch-equivalent to the "
                    "triangle-deleted form");
    for (const auto& v : *witness) b.sb4(v);

    if (!(b.graph() == desired) || !is_nabla_complete(b.graph()))
        throw error("lemma-nabla generation for r=" + std::to_string(r) +
                    " did not reach the triangle-deleted form");
    return b.script;
}

} // namespace sbg
