#include "sbg/derivation.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "sbg/io.hpp"

namespace sbg {

namespace {

const char* kind_name(StepKind k) {
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

const char* mode_name(MatchMode m) {
    switch (m) {
        case MatchMode::exact: return "exact";
        case MatchMode::iso: return "iso";
        case MatchMode::switch_iso: return "switch-iso";
    }
    return "?";
}

std::vector<std::string> tokenize_line(std::string_view line) {
    std::string clean(line.substr(0, line.find('#')));
    std::string spaced;
    for (char c : clean) {
        if (c == '[' || c == ']' || c == ',') {
            spaced.push_back(' ');
            spaced.push_back(c);
            spaced.push_back(' ');
        } else {
            spaced.push_back(c);
        }
    }
    std::istringstream in(spaced);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

// Cursor over one line's tokens with uniform error reporting.
struct TokenCursor {
    const std::vector<std::string>& tokens;
    size_t pos = 0;
    int lineno;

    bool done() const { return pos >= tokens.size(); }
    const std::string& peek() const {
        if (done()) throw parse_error(lineno, "unexpected end of line");
        return tokens[pos];
    }
    std::string take(const char* what) {
        if (done()) throw parse_error(lineno, std::string("expected ") + what);
        return tokens[pos++];
    }
    void expect(const std::string& literal) {
        if (take(literal.c_str()) != literal)
            throw parse_error(lineno, "expected '" + literal + "'");
    }
    std::string name(const char* what) {
        std::string t = take(what);
        if (!valid_name(t)) throw parse_error(lineno, std::string("invalid ") + what + " '" + t + "'");
        return t;
    }
    Sign sign() {
        std::string t = take("sign '+' or '-'");
        if (t.size() == 1)
            if (auto s = sign_from_char(t[0])) return *s;
        throw parse_error(lineno, "expected sign '+' or '-', got '" + t + "'");
    }
    int integer(const char* what) {
        std::string t = take(what);
        try {
            size_t used = 0;
            int v = std::stoi(t, &used);
            if (used != t.size()) throw std::invalid_argument("");
            return v;
        } catch (...) {
            throw parse_error(lineno, std::string("expected integer ") + what + ", got '" + t + "'");
        }
    }
};

} // namespace

DerivationScript parse_script(std::string_view text) {
    DerivationScript script;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    bool saw_header = false, saw_q = false;
    std::set<std::string> bound;

    auto known = [&](TokenCursor& cur, const char* what) {
        std::string n = cur.name(what);
        if (!bound.count(n))
            throw parse_error(cur.lineno, std::string(what) + " '" + n + "' is not bound yet");
        return n;
    };

    while (std::getline(in, line)) {
        ++lineno;
        auto tokens = tokenize_line(line);
        if (tokens.empty()) continue;
        TokenCursor cur{tokens, 0, lineno};
        if (!saw_header) {
            cur.expect("sbd");
            cur.expect("1");
            if (!cur.done()) throw parse_error(lineno, "trailing tokens after header");
            saw_header = true;
            continue;
        }
        if (!saw_q) {
            cur.expect("q");
            script.q = cur.integer("q");
            if (script.q < 1) throw parse_error(lineno, "q must be a positive integer");
            if (!cur.done()) throw parse_error(lineno, "trailing tokens after q");
            saw_q = true;
            continue;
        }
        std::string head = cur.take("'let' or 'target'");
        if (head == "target") {
            if (script.target) throw parse_error(lineno, "duplicate target line");
            ScriptTarget t;
            t.binding = known(cur, "target binding");
            std::string mode = cur.take("match mode");
            if (mode == "exact") t.mode = MatchMode::exact;
            else if (mode == "iso") t.mode = MatchMode::iso;
            else if (mode == "switch-iso") t.mode = MatchMode::switch_iso;
            else throw parse_error(lineno, "unknown match mode '" + mode + "'");
            t.path = cur.take("target file path");
            if (!cur.done()) throw parse_error(lineno, "trailing tokens after target");
            script.target = std::move(t);
            continue;
        }
        if (head != "let") throw parse_error(lineno, "expected 'let' or 'target', got '" + head + "'");
        if (script.target) throw parse_error(lineno, "bindings must precede the target line");

        ScriptStep step;
        step.name = cur.name("binding name");
        if (bound.count(step.name)) throw parse_error(lineno, "duplicate binding '" + step.name + "'");
        cur.expect("=");
        std::string op = cur.take("operation");
        if (op == "axiom") {
            step.kind = StepKind::axiom;
            // order == q is a checker-level verdict, not a syntax matter
            step.axiom_order = cur.integer("axiom order");
        } else if (op == "sb1_vertex") {
            step.kind = StepKind::sb1_vertex;
            step.src_a = known(cur, "source binding");
            step.args = {cur.name("vertex name")};
        } else if (op == "sb1_edge") {
            step.kind = StepKind::sb1_edge;
            step.src_a = known(cur, "source binding");
            step.args = {cur.name("vertex"), cur.name("vertex")};
            step.sign_a = cur.sign();
        } else if (op == "sb2") {
            step.kind = StepKind::sb2;
            step.src_a = known(cur, "source binding");
            step.args = {cur.name("vertex"), cur.name("vertex")};
        } else if (op == "sb3") {
            step.kind = StepKind::sb3;
            step.src_a = known(cur, "source binding");
            step.args = {cur.name("split vertex")};
            cur.expect("[");
            while (cur.peek() != "]") {
                if (!step.split.empty()) cur.expect(",");
                SplitEntry e;
                e.far = cur.name("split far endpoint");
                e.sign = cur.sign();
                step.split.push_back(std::move(e));
            }
            cur.expect("]");
            step.src_b = known(cur, "source binding");
            step.args.push_back(cur.name("vertex"));
            step.args.push_back(cur.name("vertex"));
        } else if (op == "sb4") {
            step.kind = StepKind::sb4;
            step.src_a = known(cur, "source binding");
            step.args = {cur.name("vertex")};
        } else if (op == "sb5even") {
            step.kind = StepKind::sb5even;
            step.src_a = known(cur, "source binding");
            step.args = {cur.name("vertex")};
        } else if (op == "sb5odd") {
            step.kind = StepKind::sb5odd;
            step.src_a = known(cur, "source binding");
            step.args = {cur.name("vertex"), cur.name("vertex")};
            cur.expect("[");
            cur.expect("pad:");
            while (cur.peek() != "]") {
                if (!step.pad.empty()) cur.expect(",");
                EdgeRef e;
                e.u = cur.name("pad endpoint");
                e.v = cur.name("pad endpoint");
                e.sign = cur.sign();
                step.pad.push_back(std::move(e));
            }
            cur.expect("]");
        } else if (op == "sb3p") {
            step.kind = StepKind::sb3p;
            step.src_a = known(cur, "source binding");
            step.args = {cur.name("vertex"), cur.name("vertex")};
            step.sign_a = cur.sign();
            step.src_b = known(cur, "source binding");
            step.args.push_back(cur.name("vertex"));
            step.args.push_back(cur.name("vertex"));
            step.sign_b = cur.sign();
        } else {
            throw parse_error(lineno, "unknown operation '" + op + "'");
        }
        if (!cur.done()) throw parse_error(lineno, "trailing tokens after step");
        bound.insert(step.name);
        script.steps.push_back(std::move(step));
    }
    if (!saw_header) throw parse_error(lineno == 0 ? 1 : lineno, "missing header 'sbd 1'");
    if (!saw_q) throw parse_error(lineno, "missing 'q <integer>' line");
    if (script.steps.empty()) throw parse_error(lineno, "script has no bindings");
    return script;
}

std::string serialize_script(const DerivationScript& s) {
    std::ostringstream out;
    out << "sbd 1\nq " << s.q << "\n";
    for (const auto& step : s.steps) {
        out << "let " << step.name << " = " << kind_name(step.kind);
        switch (step.kind) {
            case StepKind::axiom:
                out << " " << step.axiom_order;
                break;
            case StepKind::sb1_vertex:
            case StepKind::sb4:
            case StepKind::sb5even:
                out << " " << step.src_a << " " << step.args[0];
                break;
            case StepKind::sb1_edge:
                out << " " << step.src_a << " " << step.args[0] << " " << step.args[1] << " "
                    << sign_char(step.sign_a);
                break;
            case StepKind::sb2:
                out << " " << step.src_a << " " << step.args[0] << " " << step.args[1];
                break;
            case StepKind::sb3: {
                out << " " << step.src_a << " " << step.args[0] << " [";
                for (size_t i = 0; i < step.split.size(); ++i) {
                    if (i) out << " ,";
                    out << (i ? " " : "") << step.split[i].far << " " << sign_char(step.split[i].sign);
                }
                out << "] " << step.src_b << " " << step.args[1] << " " << step.args[2];
                break;
            }
            case StepKind::sb5odd: {
                out << " " << step.src_a << " " << step.args[0] << " " << step.args[1] << " [pad:";
                for (size_t i = 0; i < step.pad.size(); ++i) {
                    out << (i ? " , " : " ") << step.pad[i].u << " " << step.pad[i].v << " "
                        << sign_char(step.pad[i].sign);
                }
                out << "]";
                break;
            }
            case StepKind::sb3p:
                out << " " << step.src_a << " " << step.args[0] << " " << step.args[1] << " "
                    << sign_char(step.sign_a) << " " << step.src_b << " " << step.args[2] << " "
                    << step.args[3] << " " << sign_char(step.sign_b);
                break;
        }
        out << "\n";
    }
    if (s.target)
        out << "target " << s.target->binding << " " << mode_name(s.target->mode) << " "
            << s.target->path << "\n";
    return out.str();
}

DerivationScript load_script_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_script(buf.str());
}

} // namespace sbg
