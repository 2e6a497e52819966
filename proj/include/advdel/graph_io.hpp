#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "advdel/graph.hpp"

namespace advdel {

// Graph text format:
//
//   n m
//   u v      (m lines, 0-based labels, u < v, lexicographic order)
//
// write_graph always produces the normalized form, so writing a parsed
// normalized file reproduces it byte for byte. The parser accepts edges in
// any order and orientation but rejects loops, duplicates and bad labels.
std::string write_graph(const Graph &g);
Graph parse_graph(std::string_view text);

std::string to_graph6(const Graph &g);
Graph parse_graph6(std::string_view line);

/// A sequence of graphs preceded by "# key value" header lines.
///
/// Graphs follow each other in text format; a line holding a single token is
/// read as graph6 instead. Lines starting with '#' after the first graph are
/// treated as comments.
struct GraphList {
    std::map<std::string, std::string> header;
    std::vector<Graph> graphs;
};

std::string write_graph_list(const GraphList &list);
GraphList parse_graph_list(std::string_view text);

std::string read_file(const std::filesystem::path &path);
void write_file(const std::filesystem::path &path, std::string_view contents);

/// Loads a single graph from text format or graph6.
Graph load_graph(const std::filesystem::path &path);

}  // namespace advdel
