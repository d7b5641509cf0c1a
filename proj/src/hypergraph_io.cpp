#include "hyperham/hypergraph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace hyperham {

namespace {

bool next_content_line(std::istream& in, std::string& line, std::size_t& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line[0] == '#') continue;
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        return true;
    }
    return false;
}

[[noreturn]] void fail(std::size_t lineno, const std::string& msg) {
    throw FormatError("line " + std::to_string(lineno) + ": " + msg);
}

}  // namespace

Hypergraph read_hypergraph(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    if (!next_content_line(in, line, lineno)) throw FormatError("empty input: missing `k n m` header");
    std::istringstream header(line);
    long long k = 0, n = 0, m = 0;
    std::string extra;
    if (!(header >> k >> n >> m) || (header >> extra)) fail(lineno, "header must be `k n m`");
    if (k < 2 || n < 0 || m < 0) fail(lineno, "header values out of range");

    std::vector<std::vector<Vertex>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_content_line(in, line, lineno)) fail(lineno, "expected " + std::to_string(m) + " edges");
        std::istringstream row(line);
        std::vector<Vertex> e;
        long long v = 0;
        while (row >> v) {
            if (v < 0 || v >= n) fail(lineno, "vertex " + std::to_string(v) + " out of range");
            if (!e.empty() && static_cast<Vertex>(v) <= e.back()) fail(lineno, "edge vertices must be increasing");
            e.push_back(static_cast<Vertex>(v));
        }
        if (!row.eof()) fail(lineno, "non-integer token");
        if (e.size() != static_cast<std::size_t>(k)) fail(lineno, "edge must have exactly k vertices");
        edges.push_back(std::move(e));
    }
    if (next_content_line(in, line, lineno)) fail(lineno, "trailing content after " + std::to_string(m) + " edges");

    const std::size_t given = edges.size();
    Hypergraph h(static_cast<unsigned>(k), static_cast<unsigned>(n), std::move(edges));
    if (h.edge_count() != given) throw FormatError("duplicate edges in input");
    return h;
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
    out << h.k() << ' ' << h.n() << ' ' << h.edge_count() << '\n';
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        auto e = h.edge(i);
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (j) out << ' ';
            out << e[j];
        }
        out << '\n';
    }
}

Hypergraph load_hypergraph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open '" + path + "'");
    try {
        return read_hypergraph(in);
    } catch (const FormatError& e) {
        throw FormatError(path + ": " + e.what());
    }
}

void save_hypergraph(const std::string& path, const Hypergraph& h) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write '" + path + "'");
    write_hypergraph(out, h);
    if (!out) throw FormatError("write failed for '" + path + "'");
}

std::string to_text(const Hypergraph& h) {
    std::ostringstream os;
    write_hypergraph(os, h);
    return os.str();
}

}  // namespace hyperham
