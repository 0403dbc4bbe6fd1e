#include "pathcov/circuit.hpp"

#include <algorithm>

namespace pathcov {

CircuitEnumerator::CircuitEnumerator(const Digraph& g, std::vector<char> active, Vertex anchor)
    : graph_(&g),
      active_(std::move(active)),
      anchor_(anchor),
      blocked_(g.vertex_count(), 0),
      blocked_map_(g.vertex_count()) {}

void CircuitEnumerator::push(Vertex v) {
  frames_.push_back({v, 0, false});
  path_.push_back(v);
  blocked_[v] = 1;
  ++steps_;
  peak_depth_ = std::max(peak_depth_, frames_.size());
}

void CircuitEnumerator::unblock(Vertex v) {
  unblock_work_.push_back(v);
  while (!unblock_work_.empty()) {
    const Vertex u = unblock_work_.back();
    unblock_work_.pop_back();
    blocked_[u] = 0;
    for (Vertex w : blocked_map_[u]) {
      if (blocked_[w]) unblock_work_.push_back(w);
    }
    blocked_map_[u].clear();
  }
}

std::optional<Path> CircuitEnumerator::next() {
  if (!started_) {
    started_ = true;
    if (anchor_ < active_.size() && active_[anchor_]) push(anchor_);
  }
  while (!frames_.empty()) {
    Frame& top = frames_.back();
    const auto succ = graph_->out(top.v);
    if (top.next < succ.size()) {
      const Vertex w = succ[top.next++];
      if (!active_[w]) continue;
      if (w == anchor_) {
        top.found = true;
        std::vector<Vertex> cycle(path_);
        cycle.push_back(anchor_);
        return Path(std::move(cycle));
      }
      if (!blocked_[w]) push(w);
      continue;
    }

    const Vertex v = top.v;
    const bool found = top.found;
    if (found) {
      unblock(v);
    } else {
      for (Vertex w : succ) {
        if (!active_[w]) continue;
        auto& waiting = blocked_map_[w];
        if (std::find(waiting.begin(), waiting.end(), v) == waiting.end()) waiting.push_back(v);
      }
    }
    frames_.pop_back();
    path_.pop_back();
    if (!frames_.empty()) frames_.back().found = frames_.back().found || found;
  }
  return std::nullopt;
}

std::size_t CircuitEnumerator::memory_bytes() const {
  std::size_t bytes = active_.capacity() + blocked_.capacity() +
                      blocked_map_.capacity() * sizeof(std::vector<Vertex>) +
                      frames_.capacity() * sizeof(Frame) + path_.capacity() * sizeof(Vertex) +
                      unblock_work_.capacity() * sizeof(Vertex);
  for (const auto& waiting : blocked_map_) bytes += waiting.capacity() * sizeof(Vertex);
  return bytes;
}

}  // namespace pathcov
