#include "pathcov/enumeration.hpp"

#include <algorithm>

namespace pathcov {

SimpleCycleStream::SimpleCycleStream(const Digraph& g)
    : graph_(&g), remaining_(g.vertex_count(), 1) {}

std::optional<Path> SimpleCycleStream::next() {
  const std::size_t n = graph_->vertex_count();
  while (true) {
    if (circuit_) {
      if (auto cycle = circuit_->next()) return cycle;
      peak_ = std::max(peak_, circuit_->peak_depth());
      finished_steps_ += circuit_->steps();
      circuit_.reset();
      remaining_[anchor_] = 0;
      ++anchor_;
    }
    if (anchor_ >= n) return std::nullopt;

    // A vertex without a remaining successor closes no cycle.
    bool has_successor = false;
    for (Vertex w : graph_->out(anchor_)) has_successor = has_successor || remaining_[w];
    if (!has_successor) {
      remaining_[anchor_] = 0;
      ++anchor_;
      continue;
    }
    circuit_.emplace(*graph_, component_mask(*graph_, remaining_, anchor_), anchor_);
  }
}

std::size_t SimpleCycleStream::peak_retained_paths() const {
  return std::max(peak_, circuit_ ? circuit_->peak_depth() : 0);
}

std::size_t SimpleCycleStream::memory_bytes() const {
  return remaining_.capacity() + (circuit_ ? circuit_->memory_bytes() : 0);
}

std::uint64_t SimpleCycleStream::steps() const {
  return finished_steps_ + (circuit_ ? circuit_->steps() : 0);
}

std::unique_ptr<PathStream> simple_cycles(const Digraph& g) {
  return std::make_unique<SimpleCycleStream>(g);
}

std::vector<Path> collect(PathStream& stream) {
  std::vector<Path> out;
  while (auto p = stream.next()) out.push_back(std::move(*p));
  return out;
}

}  // namespace pathcov
