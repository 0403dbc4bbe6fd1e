#ifndef PATHCOV_DIGRAPH_HPP
#define PATHCOV_DIGRAPH_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pathcov {

/// Dense vertex index in [0, vertex_count).
using Vertex = std::uint32_t;

struct Edge {
  Vertex from;
  Vertex to;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a graph or path violates a structural precondition.
class InvalidGraph : public Error {
 public:
  using Error::Error;
};

/// Immutable directed graph over dense vertex indices.
///
/// Edges form a set (duplicates are rejected), self-loops are allowed.
/// Both adjacency directions are stored sorted ascending, so every
/// traversal that walks out() or in() visits neighbours in index order.
class Digraph {
 public:
  Digraph() = default;

  /// Graph with `vertex_count` isolated vertices.
  explicit Digraph(std::size_t vertex_count);

  /// Throws InvalidGraph on an out-of-range endpoint or a duplicate edge.
  Digraph(std::size_t vertex_count, std::span<const Edge> edges);
  Digraph(std::size_t vertex_count, std::initializer_list<Edge> edges)
      : Digraph(vertex_count, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t vertex_count() const { return out_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const Vertex> out(Vertex v) const { return out_[v]; }
  std::span<const Vertex> in(Vertex v) const { return in_[v]; }

  bool has_edge(Vertex from, Vertex to) const;
  bool contains(Vertex v) const { return v < out_.size(); }

  /// All edges in (from, to) lexicographic order.
  std::vector<Edge> edges() const;

  /// Same vertex indices, only the edges between kept vertices survive.
  Digraph induced(std::span<const char> keep) const;

  /// Heap bytes held by the adjacency lists.
  std::size_t memory_bytes() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::size_t edge_count_ = 0;
};

}  // namespace pathcov

#endif  // PATHCOV_DIGRAPH_HPP
