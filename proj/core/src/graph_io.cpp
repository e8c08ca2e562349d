#include "kcolor/graph_io.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "kcolor/errors.hpp"

namespace kcolor {

namespace {

constexpr long long max_vertices = std::numeric_limits<int>::max();

bool blank(const std::string& line) {
    return line.find_first_not_of(" \t\r\n") == std::string::npos;
}

long long parse_ll(const std::string& token, int line_no, const char* what) {
    std::size_t pos = 0;
    long long value = 0;
    try {
        value = std::stoll(token, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != token.size())
        throw ParseError("line " + std::to_string(line_no) + ": expected " + what +
                         ", got '" + token + "'");
    return value;
}

} // namespace

Graph load_dimacs(std::istream& in, std::vector<std::string>* warnings) {
    bool got_header = false;
    long long n = 0;
    long long declared_m = 0;
    std::vector<Edge> edges;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (blank(line) || line[0] == 'c')
            continue;
        std::istringstream iss(line);
        std::string tag;
        iss >> tag;
        if (tag == "p") {
            if (got_header)
                throw ParseError("line " + std::to_string(line_no) + ": duplicate 'p' line");
            std::string format;
            std::string n_tok, m_tok;
            if (!(iss >> format >> n_tok >> m_tok))
                throw ParseError("line " + std::to_string(line_no) + ": malformed 'p' line");
            if (format != "edge" && format != "edges" && format != "col")
                throw ParseError("line " + std::to_string(line_no) +
                                 ": unsupported problem format '" + format + "'");
            n = parse_ll(n_tok, line_no, "vertex count");
            declared_m = parse_ll(m_tok, line_no, "edge count");
            if (n < 0 || declared_m < 0)
                throw ParseError("line " + std::to_string(line_no) + ": negative count in 'p' line");
            if (n > max_vertices)
                throw ParseError("line " + std::to_string(line_no) + ": vertex count " +
                                 std::to_string(n) + " exceeds the supported maximum");
            got_header = true;
        } else if (tag == "e") {
            if (!got_header)
                throw ParseError("line " + std::to_string(line_no) + ": 'e' line before 'p' line");
            std::string u_tok, v_tok;
            if (!(iss >> u_tok >> v_tok))
                throw ParseError("line " + std::to_string(line_no) + ": malformed 'e' line");
            long long u = parse_ll(u_tok, line_no, "vertex id");
            long long v = parse_ll(v_tok, line_no, "vertex id");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError("line " + std::to_string(line_no) + ": vertex id out of range 1.." +
                                 std::to_string(n));
            if (u == v)
                throw ParseError("line " + std::to_string(line_no) + ": self-loop at vertex " +
                                 std::to_string(u));
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
        } else {
            // Real-world .col files carry stray line types; skip with a note.
            if (warnings)
                warnings->push_back("line " + std::to_string(line_no) + ": ignoring '" + tag +
                                    "' line");
        }
    }
    if (!got_header)
        throw ParseError("missing 'p edge N M' line");
    Graph g = Graph::from_edges(static_cast<int>(n), edges);
    if (g.edge_count() != declared_m && warnings)
        warnings->push_back("header declares " + std::to_string(declared_m) + " edges, file has " +
                            std::to_string(g.edge_count()) + " after deduplication");
    return g;
}

Graph load_edge_list(std::istream& in) {
    std::vector<Edge> edges;
    long long max_id = -1;
    long long declared_n = -1;
    std::string line;
    int line_no = 0;
    bool saw_edge = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (blank(line))
            continue;
        if (!saw_edge && declared_n < 0 && line.rfind("n=", 0) == 0) {
            declared_n = parse_ll(line.substr(2), line_no, "vertex count");
            if (declared_n < 0)
                throw ParseError("line " + std::to_string(line_no) + ": negative vertex count");
            if (declared_n > max_vertices)
                throw ParseError("line " + std::to_string(line_no) + ": vertex count " +
                                 std::to_string(declared_n) + " exceeds the supported maximum");
            continue;
        }
        std::istringstream iss(line);
        std::string u_tok, v_tok, extra;
        if (!(iss >> u_tok >> v_tok) || (iss >> extra))
            throw ParseError("line " + std::to_string(line_no) + ": expected 'u v'");
        long long u = parse_ll(u_tok, line_no, "vertex id");
        long long v = parse_ll(v_tok, line_no, "vertex id");
        if (u < 0 || v < 0)
            throw ParseError("line " + std::to_string(line_no) + ": negative vertex id");
        if (u >= max_vertices || v >= max_vertices)
            throw ParseError("line " + std::to_string(line_no) + ": vertex id " +
                             std::to_string(std::max(u, v)) + " exceeds the supported maximum");
        if (u == v)
            throw ParseError("line " + std::to_string(line_no) + ": self-loop at vertex " +
                             std::to_string(u));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        max_id = std::max({max_id, u, v});
        saw_edge = true;
    }
    long long n = declared_n >= 0 ? declared_n : max_id + 1;
    if (max_id >= n)
        throw ParseError("vertex id " + std::to_string(max_id) + " exceeds declared n=" +
                         std::to_string(n));
    return Graph::from_edges(static_cast<int>(n), edges);
}

void serialize_dimacs(const Graph& g, std::ostream& out) {
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << (u + 1) << ' ' << (v + 1) << '\n';
}

void serialize_edge_list(const Graph& g, std::ostream& out) {
    out << "n=" << g.vertex_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

Graph parse_dimacs(std::string_view text, std::vector<std::string>* warnings) {
    std::istringstream in{std::string(text)};
    return load_dimacs(in, warnings);
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return load_edge_list(in);
}

std::string dimacs_string(const Graph& g) {
    std::ostringstream out;
    serialize_dimacs(g, out);
    return out.str();
}

std::string edge_list_string(const Graph& g) {
    std::ostringstream out;
    serialize_edge_list(g, out);
    return out.str();
}

} // namespace kcolor
