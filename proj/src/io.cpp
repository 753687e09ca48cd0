#include "primor/io.hpp"

#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

namespace primor {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream stream(line);
    std::vector<std::string> tokens;
    std::string token;
    while (stream >> token) tokens.push_back(token);
    return tokens;
}

bool is_comment_or_blank(const std::vector<std::string>& tokens) {
    return tokens.empty() || tokens.front().front() == '#';
}

int parse_int(const std::string& token, int line, const char* what) {
    std::size_t used = 0;
    long value = 0;
    try {
        value = std::stol(token, &used);
    } catch (const std::exception&) {
        throw ParseError(line, std::string("expected ") + what + ", got '" + token + "'");
    }
    if (used != token.size() || value < 0 || value > 1'000'000'000)
        throw ParseError(line, std::string("expected ") + what + ", got '" + token + "'");
    return static_cast<int>(value);
}

int parse_vertex(const std::string& token, int line, int n) {
    const int v = parse_int(token, line, "a vertex id");
    if (v >= n) throw ParseError(line, "vertex " + std::to_string(v) + " not below " + std::to_string(n));
    return v;
}

}  // namespace

EdgeListDocument parse_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    std::map<int, std::string> names;

    while (std::getline(in, line)) {
        ++lineno;
        const auto tokens = tokens_of(line);
        if (is_comment_or_blank(tokens)) continue;
        if (n < 0) {
            if (tokens.size() != 2 || tokens[0] != "graph")
                throw ParseError(lineno, "expected header 'graph <n>'");
            n = parse_int(tokens[1], lineno, "a vertex count");
            continue;
        }
        if (tokens[0] == "name") {
            if (tokens.size() != 3) throw ParseError(lineno, "expected 'name <id> <label>'");
            const int id = parse_vertex(tokens[1], lineno, n);
            if (!names.emplace(id, tokens[2]).second)
                throw ParseError(lineno, "duplicate name for vertex " + std::to_string(id));
            continue;
        }
        if (tokens.size() != 2) throw ParseError(lineno, "expected an edge 'u v'");
        int u = parse_vertex(tokens[0], lineno, n);
        int v = parse_vertex(tokens[1], lineno, n);
        if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (!seen.emplace(u, v).second)
            throw ParseError(lineno, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        edges.emplace_back(u, v);
    }
    if (n < 0) throw ParseError(lineno + 1, "missing header 'graph <n>'");
    return {Graph(n, std::move(edges)), std::move(names)};
}

OrientationDocument parse_orientation(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<std::pair<int, int>> arcs;
    std::set<std::pair<int, int>> seen;

    while (std::getline(in, line)) {
        ++lineno;
        const auto tokens = tokens_of(line);
        if (is_comment_or_blank(tokens)) continue;
        if (n < 0) {
            if (tokens.size() != 2 || tokens[0] != "digraph")
                throw ParseError(lineno, "expected header 'digraph <n>'");
            n = parse_int(tokens[1], lineno, "a vertex count");
            continue;
        }
        if (tokens.size() != 3 || tokens[1] != "->")
            throw ParseError(lineno, "expected an arc 'u -> v'");
        const int u = parse_vertex(tokens[0], lineno, n);
        const int v = parse_vertex(tokens[2], lineno, n);
        if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
        if (!seen.emplace(std::min(u, v), std::max(u, v)).second)
            throw ParseError(lineno, "second arc between " + std::to_string(u) + " and " +
                                         std::to_string(v));
        arcs.emplace_back(u, v);
    }
    if (n < 0) throw ParseError(lineno + 1, "missing header 'digraph <n>'");
    return {OrientedGraph(n, std::move(arcs))};
}

void print_edge_list(std::ostream& out, const EdgeListDocument& doc) {
    out << "graph " << doc.graph.vertex_count() << "\n";
    for (const auto& [id, label] : doc.names) out << "name " << id << " " << label << "\n";
    for (auto [u, v] : doc.graph.edges()) out << u << " " << v << "\n";
}

void print_orientation(std::ostream& out, const OrientationDocument& doc) {
    out << "digraph " << doc.graph.vertex_count() << "\n";
    for (auto [u, v] : doc.graph.arcs()) out << u << " -> " << v << "\n";
}

void print_dot(std::ostream& out, const OrientedGraph& o,
               const std::map<int, std::string>& names) {
    out << "digraph G {\n";
    for (int v = 0; v < o.vertex_count(); ++v) {
        out << "  " << v;
        if (auto it = names.find(v); it != names.end()) out << " [label=\"" << it->second << "\"]";
        out << ";\n";
    }
    for (auto [u, v] : o.arcs()) out << "  " << u << " -> " << v << ";\n";
    out << "}\n";
}

}  // namespace primor
