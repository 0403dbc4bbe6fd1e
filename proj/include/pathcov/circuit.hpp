#ifndef PATHCOV_CIRCUIT_HPP
#define PATHCOV_CIRCUIT_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pathcov/digraph.hpp"
#include "pathcov/path.hpp"

namespace pathcov {

/// Resumable elementary-circuit search anchored at one vertex (Johnson's
/// blocking discipline, iterative).
///
/// Emits each simple cycle through `anchor` that stays inside `active`
/// exactly once, formatted (anchor, ..., anchor). The search suspends right
/// after closing a cycle and resumes on the next call, so the only live state
/// is the blocked set, the blocked map and the current stack.
///
/// Invariants: the stack is a simple path of the active subgraph and every
/// vertex on it is blocked.
class CircuitEnumerator {
 public:
  CircuitEnumerator(const Digraph& g, std::vector<char> active, Vertex anchor);

  std::optional<Path> next();

  bool done() const { return frames_.empty() && started_; }

  /// Current partial path, anchor first.
  std::span<const Vertex> stack() const { return path_; }
  bool is_blocked(Vertex v) const { return blocked_[v] != 0; }

  std::size_t peak_depth() const { return peak_depth_; }
  std::uint64_t steps() const { return steps_; }
  std::size_t memory_bytes() const;

 private:
  struct Frame {
    Vertex v;
    std::uint32_t next;
    bool found;
  };

  void push(Vertex v);
  void unblock(Vertex v);

  const Digraph* graph_;
  std::vector<char> active_;
  Vertex anchor_;
  std::vector<char> blocked_;
  std::vector<std::vector<Vertex>> blocked_map_;
  std::vector<Frame> frames_;
  std::vector<Vertex> path_;
  std::vector<Vertex> unblock_work_;
  bool started_ = false;
  std::size_t peak_depth_ = 0;
  std::uint64_t steps_ = 0;
};

}  // namespace pathcov

#endif  // PATHCOV_CIRCUIT_HPP
