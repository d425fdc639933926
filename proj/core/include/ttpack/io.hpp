#ifndef TTPACK_IO_HPP
#define TTPACK_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "ttpack/graph.hpp"
#include "ttpack/pattern.hpp"

namespace ttpack {

// Text graph format, one record per line, '#' starts a comment:
//
//   n <count>
//   <u> <v>                  arc u -> v
//   class <i>: <v1> <v2> ... optional; class indices must be 0..c-1
//
// The "n" line must precede everything else.
struct GraphFile {
  OrientedGraph graph;
  std::vector<std::vector<int>> classes;

  bool has_classes() const { return !classes.empty(); }
  // Throws InvalidInput if the classes are missing or invalid.
  PartitionedHost partitioned() const;
};

GraphFile parse_graph(std::string_view text);
GraphFile load_graph(const std::filesystem::path& path);

// Reads an orientation of a known host: every arc must be a host edge and
// every host edge must be oriented exactly once.
OrientedGraph parse_orientation(std::string_view text, const UndirectedGraph& host);

std::string format_graph(const OrientedGraph& g);
std::string format_graph(const OrientedGraph& g, const std::vector<std::vector<int>>& classes);
inline std::string format_graph(const PartitionedHost& h) { return format_graph(h.graph(), h.classes()); }
inline std::string format_graph(const SmallDigraph& g) { return format_graph(OrientedGraph::from_small(g)); }
void save_graph(const std::filesystem::path& path, const std::string& text);

// Packing format:
//
//   pattern <size> <name>
//   parc <a> <b>          pattern arcs
//   n <host vertex count>
//   copy <v0> <v1> ...    one embedding per line, pattern vertex order
std::string format_packing(const Packing& packing, int host_n);
// Uncovered set is rebuilt from the copies.
Packing parse_packing(std::string_view text);

}  // namespace ttpack

#endif  // TTPACK_IO_HPP
