#include <algorithm>

#include "pathcov/enumeration.hpp"

namespace pathcov {

PrimePathStream::PrimePathStream(const Digraph& g)
    : graph_(&g), cycles_(std::make_unique<SimpleCycleStream>(g)) {}

std::optional<Path> PrimePathStream::next() {
  while (cycles_) {
    if (cycle_ && rotation_ + 1 < cycle_->size()) return rotation(*cycle_, rotation_++);
    cycle_ = cycles_->next();
    rotation_ = 0;
    if (!cycle_) {
      cycle_peak_ = cycles_->peak_retained_paths() + 1;
      cycle_steps_ = cycles_->steps();
      cycles_.reset();
      paths_ = std::make_unique<NonExtendableStream>(*graph_);
    }
  }
  return paths_->next();
}

std::size_t PrimePathStream::peak_retained_paths() const {
  // The held cycle counts on top of the search stack while rotations drain.
  const std::size_t live = cycles_ ? cycles_->peak_retained_paths() + 1 : 0;
  return std::max({cycle_peak_, live, paths_ ? paths_->peak_retained_paths() : 0});
}

std::size_t PrimePathStream::memory_bytes() const {
  std::size_t bytes = cycle_ ? cycle_->size() * sizeof(Vertex) : 0;
  if (cycles_) bytes += cycles_->memory_bytes();
  if (paths_) bytes += paths_->memory_bytes();
  return bytes;
}

std::uint64_t PrimePathStream::steps() const {
  return cycle_steps_ + (cycles_ ? cycles_->steps() : 0) + (paths_ ? paths_->steps() : 0);
}

std::unique_ptr<PathStream> prime_paths(const Digraph& g) {
  return std::make_unique<PrimePathStream>(g);
}

}  // namespace pathcov
