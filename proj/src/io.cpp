#include "sbg/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace sbg {

bool valid_name(std::string_view name) {
    if (name.empty()) return false;
    for (char c : name)
        if (std::isspace(static_cast<unsigned char>(c)) || c == '#' || c == '[' || c == ']' ||
            c == ',')
            return false;
    return true;
}

namespace {

std::vector<std::string> tokenize(std::string_view line) {
    std::string clean(line.substr(0, line.find('#')));
    std::istringstream in(clean);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

} // namespace

SignedBiGraph parse_sbg(std::string_view text) {
    SignedBiGraph g;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (!saw_header) {
            if (tokens.size() != 2 || tokens[0] != "sbg" || tokens[1] != "1")
                throw parse_error(lineno, "expected header 'sbg 1'");
            saw_header = true;
            continue;
        }
        try {
            if (tokens[0] == "vertex") {
                if (tokens.size() != 2) throw error("expected 'vertex <name>'");
                if (!valid_name(tokens[1])) throw error("invalid vertex name '" + tokens[1] + "'");
                g = g.add_vertex(tokens[1]);
            } else if (tokens[0] == "edge") {
                if (tokens.size() != 4 || tokens[3].size() != 1)
                    throw error("expected 'edge <name> <name> <+|->'");
                auto s = sign_from_char(tokens[3][0]);
                if (!s) throw error("invalid sign '" + tokens[3] + "'");
                g = g.add_edge(tokens[1], tokens[2], *s);
            } else {
                throw error("unknown directive '" + tokens[0] + "'");
            }
        } catch (const parse_error&) {
            throw;
        } catch (const error& e) {
            throw parse_error(lineno, e.what());
        }
    }
    if (!saw_header) throw parse_error(lineno == 0 ? 1 : lineno, "missing header 'sbg 1'");
    return g;
}

std::string serialize_sbg(const SignedBiGraph& g) {
    std::ostringstream out;
    out << "sbg 1\n";
    for (const auto& v : g.vertices()) out << "vertex " << v << "\n";
    for (const auto& e : g.edges()) out << "edge " << e.u << " " << e.v << " " << sign_char(e.sign) << "\n";
    return out.str();
}

SignedBiGraph load_sbg_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_sbg(buf.str());
}

void save_sbg_file(const SignedBiGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw error("cannot write '" + path + "'");
    out << serialize_sbg(g);
}

} // namespace sbg
