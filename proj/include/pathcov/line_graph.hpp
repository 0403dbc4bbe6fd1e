#ifndef PATHCOV_LINE_GRAPH_HPP
#define PATHCOV_LINE_GRAPH_HPP

#include <vector>

#include "pathcov/digraph.hpp"
#include "pathcov/path.hpp"

namespace pathcov {

/// L(G): one vertex per edge of G, with ((u,v),(v,w)) adjacent.
/// Line vertex i stands for edge_of[i]; edges are numbered in the order of
/// Digraph::edges().
struct LineGraph {
  Digraph graph;
  std::vector<Edge> edge_of;

  /// Line vertex for edge (from, to), or vertex_count() if absent.
  Vertex vertex_of(Edge e) const;
};

LineGraph line_graph(const Digraph& g);

/// Maps a path of L(G) back to the corresponding path of G.
/// Throws InvalidGraph when consecutive line vertices do not chain.
Path line_path_reduce(const LineGraph& lg, const Path& line_path);

/// Inverse of line_path_reduce on paths of length >= 1.
Path line_path_lift(const LineGraph& lg, const Path& path);

}  // namespace pathcov

#endif  // PATHCOV_LINE_GRAPH_HPP
