// graph_io.hpp - text format for graphs and layouts.
//
//   # comment
//   tripartite N1 N2 N3
//   column <j> class <i>: v1 v2 ...      (optional; 0-based)
//   e <i> <u> <i'> <v>                   (0-based, i < i')
#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "tritile/graph.hpp"

namespace tritile {

struct ParsedGraph {
    TripartiteGraph graph;
    std::optional<ColumnLayout> layout;
};

std::string serialize(const TripartiteGraph& g, const ColumnLayout* layout = nullptr);

ParsedGraph parse_graph(std::istream& in);
ParsedGraph parse_graph(const std::string& text);

ParsedGraph load_graph_file(const std::string& path);
void save_graph_file(const std::string& path, const TripartiteGraph& g,
                     const ColumnLayout* layout = nullptr);

}  // namespace tritile
