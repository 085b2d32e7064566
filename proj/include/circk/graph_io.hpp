#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "circk/graph.hpp"
#include "circk/ktree.hpp"

namespace circk {

// Text format, vertices 1-based on disk:
//   c <comment>
//   p <n> <m>
//   e <u> <v>            (m lines)
//   r <v1> ... <v_{k+1}>  (optional)
//   b <new> <c1> ... <ck> (optional, build order, needs r first)
struct GraphFile {
  Graph graph;
  std::vector<Vertex> roots;
  std::vector<BuildStep> certificate;

  bool rooted() const { return !roots.empty(); }
  // k = roots.size() - 1. Throws PreconditionFailed when there are no roots.
  RootedPartialKTree to_rooted() const;
};

// Throws ParseError with the offending line number.
GraphFile parse_graph_text(std::string_view text);
GraphFile read_graph_file(const std::filesystem::path& path);

// Emits exactly what parse_graph_text accepts, with no comments; parse then
// format reproduces a comment-free input byte for byte.
std::string format_graph_text(const GraphFile& file);
std::string format_graph_text(const Graph& g);
std::string format_graph_text(const RootedPartialKTree& t);

}  // namespace circk
