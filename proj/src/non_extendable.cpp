#include <algorithm>

#include "pathcov/enumeration.hpp"

namespace pathcov {

namespace {

// `mark` must be all-zero on entry and is restored before return.
bool non_extendable_with(const Digraph& g, const Path& p, std::vector<char>& mark) {
  for (Vertex v : p) mark[v] = 1;
  const Vertex head = p.head();
  const Vertex last = p.last();
  bool ok = true;
  for (Vertex u : g.in(head)) {
    if (!mark[u] || u == last) {
      ok = false;
      break;
    }
  }
  if (ok) {
    for (Vertex u : g.out(last)) {
      if (!mark[u] || u == head) {
        ok = false;
        break;
      }
    }
  }
  for (Vertex v : p) mark[v] = 0;
  return ok;
}

}  // namespace

ExtendedGraph extend_graph(const Digraph& g, const StartEndFilter& filter, Vertex v) {
  if (!g.contains(v) || !filter.is_start(v)) {
    throw InvalidGraph("extend_graph: vertex " + std::to_string(v) + " is not a start candidate");
  }
  const auto sentinel = static_cast<Vertex>(g.vertex_count());
  std::vector<Edge> edges = g.edges();
  edges.push_back({sentinel, v});
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (filter.is_end(u) && filter.pair_ok(u, v)) edges.push_back({u, sentinel});
  }
  return {v, sentinel, Digraph(g.vertex_count() + 1, edges)};
}

bool is_non_extendable(const Digraph& g, const Path& p) {
  if (p.empty() || !is_simple(p.vertices())) {
    throw InvalidGraph("is_non_extendable: path is not simple");
  }
  std::vector<char> mark(g.vertex_count(), 0);
  return non_extendable_with(g, p, mark);
}

NonExtendableStream::NonExtendableStream(const Digraph& g)
    : graph_(&g),
      partition_(scc_partition(g)),
      filter_(g, partition_),
      starts_(filter_.starts()),
      on_path_(g.vertex_count(), 0) {}

bool NonExtendableStream::open_next_start() {
  if (circuit_) {
    peak_ = std::max(peak_, circuit_->peak_depth());
    finished_steps_ += circuit_->steps();
    circuit_.reset();
    extended_.reset();
  }
  if (start_index_ >= starts_.size()) return false;
  const Vertex v = starts_[start_index_++];
  extended_ = std::make_unique<ExtendedGraph>(extend_graph(*graph_, filter_, v));
  const Digraph& ex = extended_->graph;
  const std::vector<char> all(ex.vertex_count(), 1);
  circuit_.emplace(ex, component_mask(ex, all, extended_->sentinel), extended_->sentinel);
  return true;
}

std::optional<Path> NonExtendableStream::next() {
  while (true) {
    if (circuit_) {
      while (auto cycle = circuit_->next()) {
        auto& vs = cycle->mutable_vertices();
        vs.pop_back();
        vs.erase(vs.begin());
        if (non_extendable_with(*graph_, *cycle, on_path_)) return cycle;
        ++rejected_;
      }
    }
    if (!open_next_start()) return std::nullopt;
  }
}

std::size_t NonExtendableStream::peak_retained_paths() const {
  return std::max(peak_, circuit_ ? circuit_->peak_depth() : 0);
}

std::size_t NonExtendableStream::memory_bytes() const {
  std::size_t bytes = on_path_.capacity() + starts_.capacity() * sizeof(Vertex) +
                      partition_.class_of.capacity() * sizeof(std::size_t) +
                      partition_.condensation.memory_bytes();
  for (const auto& c : partition_.classes) bytes += c.capacity() * sizeof(Vertex);
  if (extended_) bytes += extended_->graph.memory_bytes();
  if (circuit_) bytes += circuit_->memory_bytes();
  return bytes;
}

std::uint64_t NonExtendableStream::steps() const {
  return finished_steps_ + (circuit_ ? circuit_->steps() : 0);
}

std::unique_ptr<PathStream> non_extendable_simple_paths(const Digraph& g) {
  return std::make_unique<NonExtendableStream>(g);
}

}  // namespace pathcov
