#ifndef PATHCOV_SCC_HPP
#define PATHCOV_SCC_HPP

#include <span>
#include <vector>

#include "pathcov/digraph.hpp"
#include "pathcov/path.hpp"

namespace pathcov {

/// Partition of the vertex set into strongly connected components, plus the
/// condensation DAG over class indices.
///
/// Classes are ordered by their smallest vertex and each class lists its
/// vertices ascending.
struct SccPartition {
  std::vector<std::vector<Vertex>> classes;
  std::vector<std::size_t> class_of;
  Digraph condensation;

  std::size_t size() const { return classes.size(); }
  bool same_class(Vertex a, Vertex b) const { return class_of[a] == class_of[b]; }
  bool contains(std::size_t cls, Vertex v) const { return class_of[v] == cls; }
};

/// Iterative Tarjan.
SccPartition scc_partition(const Digraph& g);

/// Vertices of the strongly connected component of `v` in the subgraph
/// induced by `active`, returned as a membership mask over all vertices.
std::vector<char> component_mask(const Digraph& g, std::span<const char> active, Vertex v);

/// V(p) intersected with class `cls`, in path order.
std::vector<Vertex> cut(const SccPartition& part, std::size_t cls, const Path& p);

/// Kahn's algorithm succeeds on the whole graph.
bool is_acyclic(const Digraph& g);

}  // namespace pathcov

#endif  // PATHCOV_SCC_HPP
