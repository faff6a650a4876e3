#include "tritile/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace tritile {

std::string serialize(const TripartiteGraph& g, const ColumnLayout* layout) {
    std::ostringstream out;
    const auto& sz = g.class_sizes();
    out << "tripartite " << sz[0] << " " << sz[1] << " " << sz[2] << "\n";
    if (layout) {
        layout->validate(g);
        for (int j = 0; j < 3; ++j)
            for (int i = 0; i < 3; ++i) {
                out << "column " << j << " class " << i << ":";
                for (int v : layout->cells[i][j]) out << " " << v;
                out << "\n";
            }
    }
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            for (int u = 0; u < sz[a]; ++u) {
                const Bitset& nb = g.neighbors(a, u, b);
                for (int v = nb.find_first(); v != Bitset::npos; v = nb.find_next(v))
                    out << "e " << a << " " << u << " " << b << " " << v << "\n";
            }
    return out.str();
}

namespace {

bool blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

ParsedGraph parse_graph(std::istream& in) {
    std::string line;
    int line_no = 0;

    // header
    std::array<int, 3> sizes{};
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (blank_or_comment(line)) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag != "tripartite") throw ParseError(line_no, "expected 'tripartite N1 N2 N3' header");
        if (!(ls >> sizes[0] >> sizes[1] >> sizes[2]))
            throw ParseError(line_no, "malformed header: " + line);
        std::string rest;
        if (ls >> rest) throw ParseError(line_no, "trailing tokens after header");
        for (int s : sizes)
            if (s < 0) throw ParseError(line_no, "negative class size");
        have_header = true;
        break;
    }
    if (!have_header) throw ParseError(line_no, "missing 'tripartite' header");

    TripartiteGraph g(sizes);
    ColumnLayout layout;
    bool have_layout = false;

    while (std::getline(in, line)) {
        ++line_no;
        if (blank_or_comment(line)) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "e") {
            int a, u, b, v;
            if (!(ls >> a >> u >> b >> v)) throw ParseError(line_no, "malformed edge line: " + line);
            if (a < 0 || a > 2 || b < 0 || b > 2) throw ParseError(line_no, "class index out of range");
            if (a >= b) throw ParseError(line_no, "edge classes must satisfy i < i'");
            if (u < 0 || u >= sizes[a] || v < 0 || v >= sizes[b])
                throw ParseError(line_no, "vertex index out of range: " + line);
            g.add_edge(a, u, b, v);
        } else if (tag == "column") {
            int j, i;
            std::string kw, clspart;
            if (!(ls >> j >> kw >> clspart)) throw ParseError(line_no, "malformed column line: " + line);
            if (kw != "class") throw ParseError(line_no, "expected 'column <j> class <i>: ...'");
            // the class token carries the trailing ':' unless separated by a space
            if (!clspart.empty() && clspart.back() == ':') clspart.pop_back();
            else {
                std::string colon;
                if (!(ls >> colon) || colon != ":")
                    throw ParseError(line_no, "expected ':' in column line");
            }
            try {
                i = std::stoi(clspart);
            } catch (...) {
                throw ParseError(line_no, "malformed class index in column line");
            }
            if (j < 0 || j > 2 || i < 0 || i > 2)
                throw ParseError(line_no, "column/class index out of range");
            int v;
            while (ls >> v) {
                if (v < 0 || v >= sizes[i])
                    throw ParseError(line_no, "vertex index out of range in column line");
                layout.cells[i][j].push_back(v);
            }
            have_layout = true;
        } else {
            throw ParseError(line_no, "unrecognized line: " + line);
        }
    }

    ParsedGraph out{std::move(g), std::nullopt};
    if (have_layout) {
        for (auto& cls : layout.cells)
            for (auto& cell : cls) std::sort(cell.begin(), cell.end());
        try {
            layout.validate(out.graph);
        } catch (const Error& e) {
            throw ParseError(line_no, e.what());
        }
        out.layout = std::move(layout);
    }
    return out;
}

ParsedGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

ParsedGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open graph file: " + path);
    return parse_graph(in);
}

void save_graph_file(const std::string& path, const TripartiteGraph& g, const ColumnLayout* layout) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write graph file: " + path);
    out << serialize(g, layout);
}

}  // namespace tritile
