#include "pathcov/digraph.hpp"

#include <algorithm>

namespace pathcov {

Digraph::Digraph(std::size_t vertex_count) : out_(vertex_count), in_(vertex_count) {}

Digraph::Digraph(std::size_t vertex_count, std::span<const Edge> edges)
    : out_(vertex_count), in_(vertex_count) {
  for (const Edge& e : edges) {
    if (e.from >= vertex_count || e.to >= vertex_count) {
      throw InvalidGraph("edge (" + std::to_string(e.from) + "," + std::to_string(e.to) +
                         ") has an endpoint outside the vertex range");
    }
    out_[e.from].push_back(e.to);
    in_[e.to].push_back(e.from);
  }
  for (std::size_t v = 0; v < vertex_count; ++v) {
    auto& succ = out_[v];
    std::sort(succ.begin(), succ.end());
    if (auto dup = std::adjacent_find(succ.begin(), succ.end()); dup != succ.end()) {
      throw InvalidGraph("duplicate edge (" + std::to_string(v) + "," + std::to_string(*dup) + ")");
    }
    std::sort(in_[v].begin(), in_[v].end());
  }
  edge_count_ = edges.size();
}

bool Digraph::has_edge(Vertex from, Vertex to) const {
  if (!contains(from)) return false;
  const auto& succ = out_[from];
  return std::binary_search(succ.begin(), succ.end(), to);
}

std::vector<Edge> Digraph::edges() const {
  std::vector<Edge> result;
  result.reserve(edge_count_);
  for (Vertex v = 0; v < out_.size(); ++v) {
    for (Vertex w : out_[v]) result.push_back({v, w});
  }
  return result;
}

Digraph Digraph::induced(std::span<const char> keep) const {
  std::vector<Edge> kept;
  for (Vertex v = 0; v < out_.size(); ++v) {
    if (!keep[v]) continue;
    for (Vertex w : out_[v]) {
      if (keep[w]) kept.push_back({v, w});
    }
  }
  return Digraph(out_.size(), kept);
}

std::size_t Digraph::memory_bytes() const {
  std::size_t bytes = (out_.capacity() + in_.capacity()) * sizeof(std::vector<Vertex>);
  for (const auto& a : out_) bytes += a.capacity() * sizeof(Vertex);
  for (const auto& a : in_) bytes += a.capacity() * sizeof(Vertex);
  return bytes;
}

}  // namespace pathcov
