#include "pathcov/baseline.hpp"

#include <algorithm>
#include <unordered_map>

namespace pathcov {

namespace {

// Every generated path is one node: its last vertex and the node of the
// path without it. Roots are the single-vertex paths.
struct PathTree {
  static constexpr std::uint32_t kRoot = 0xffffffffu;

  struct Node {
    std::uint32_t parent;
    Vertex vertex;
  };
  std::vector<Node> nodes;

  std::uint32_t add(std::uint32_t parent, Vertex v) {
    nodes.push_back({parent, v});
    return static_cast<std::uint32_t>(nodes.size() - 1);
  }
  Vertex head(std::uint32_t i) const {
    while (nodes[i].parent != kRoot) i = nodes[i].parent;
    return nodes[i].vertex;
  }
  bool on_path(std::uint32_t i, Vertex v) const {
    for (;; i = nodes[i].parent) {
      if (nodes[i].vertex == v) return true;
      if (nodes[i].parent == kRoot) return false;
    }
  }
  void materialize(std::uint32_t i, std::vector<Vertex>& out) const {
    out.clear();
    for (;; i = nodes[i].parent) {
      out.push_back(nodes[i].vertex);
      if (nodes[i].parent == kRoot) break;
    }
    std::reverse(out.begin(), out.end());
  }
};

constexpr std::uint64_t kHashBase = 1000003ULL;

// Hash folded from the back, so every suffix hash falls out of one pass.
std::uint64_t backward_hash(std::span<const Vertex> p) {
  std::uint64_t h = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) h = h * kHashBase + (*it + 1);
  return h;
}

}  // namespace

const char* to_string(BaselineStatus status) {
  switch (status) {
    case BaselineStatus::completed:
      return "completed";
    case BaselineStatus::timed_out:
      return "timeout";
    case BaselineStatus::budget_exceeded:
      return "budget-exceeded";
  }
  return "unknown";
}

BaselineResult baseline_prime_paths(const Digraph& g, const BaselineLimits& limits) {
  BaselineResult result;
  PathTree tree;
  std::vector<std::uint32_t> frontier;
  std::vector<std::uint32_t> next;
  std::vector<std::uint32_t> finished;
  std::vector<char> is_cycle;

  // Node indices are 32-bit; treat that as a hard budget.
  const std::size_t max_nodes = std::min<std::size_t>(limits.max_cells == 0 ? SIZE_MAX : limits.max_cells,
                                                      PathTree::kRoot - 1);
  for (Vertex v = 0; v < g.vertex_count(); ++v) frontier.push_back(tree.add(PathTree::kRoot, v));

  std::size_t since_check = 0;
  auto over_limits = [&]() -> std::optional<BaselineStatus> {
    result.peak_cells = std::max(result.peak_cells, tree.nodes.size());
    result.peak_paths = std::max(result.peak_paths, frontier.size() + next.size() + finished.size());
    result.peak_bytes =
        std::max(result.peak_bytes, tree.nodes.capacity() * sizeof(PathTree::Node) +
                                        (frontier.capacity() + next.capacity() + finished.capacity()) *
                                            sizeof(std::uint32_t) +
                                        is_cycle.capacity());
    if (tree.nodes.size() > max_nodes) return BaselineStatus::budget_exceeded;
    if (++since_check >= 1024) {
      since_check = 0;
      if (limits.deadline && std::chrono::steady_clock::now() >= *limits.deadline) {
        return BaselineStatus::timed_out;
      }
    }
    return std::nullopt;
  };

  while (!frontier.empty()) {
    next.clear();
    for (const auto p : frontier) {
      const Vertex head = tree.head(p);
      bool extended = false;
      for (Vertex w : g.out(tree.nodes[p].vertex)) {
        if (w == head) {
          finished.push_back(tree.add(p, w));
          is_cycle.push_back(1);
          extended = true;
        } else if (!tree.on_path(p, w)) {
          next.push_back(tree.add(p, w));
          extended = true;
        }
      }
      if (!extended) {
        finished.push_back(p);
        is_cycle.push_back(0);
      }
      if (auto status = over_limits()) {
        result.status = *status;
        return result;
      }
    }
    std::swap(frontier, next);
  }
  frontier = {};
  next = {};

  // Every kept path is forward-maximal, so a kept path can only sit inside
  // another kept path as a proper suffix.
  std::vector<Vertex> q;
  std::vector<Vertex> candidate;
  std::unordered_multimap<std::uint64_t, std::size_t> by_hash;
  by_hash.reserve(finished.size());
  for (std::size_t i = 0; i < finished.size(); ++i) {
    if (is_cycle[i]) continue;
    tree.materialize(finished[i], q);
    by_hash.emplace(backward_hash(q), i);
  }
  std::vector<char> dominated(finished.size(), 0);
  for (std::size_t i = 0; i < finished.size(); ++i) {
    tree.materialize(finished[i], q);
    std::uint64_t h = 0;
    for (std::size_t k = q.size(); k-- > 1;) {
      h = h * kHashBase + (q[k] + 1);
      auto [lo, hi] = by_hash.equal_range(h);
      for (auto it = lo; it != hi; ++it) {
        tree.materialize(finished[it->second], candidate);
        if (candidate.size() == q.size() - k && std::equal(candidate.begin(), candidate.end(), q.begin() + k)) {
          dominated[it->second] = 1;
        }
      }
    }
    if (limits.deadline && (i & 1023) == 0 && std::chrono::steady_clock::now() >= *limits.deadline) {
      result.status = BaselineStatus::timed_out;
      return result;
    }
  }

  for (std::size_t i = 0; i < finished.size(); ++i) {
    if (dominated[i]) continue;
    tree.materialize(finished[i], q);
    result.paths.emplace_back(q);
  }
  return result;
}

std::vector<Path> baseline_prime_paths(const Digraph& g) {
  return baseline_prime_paths(g, BaselineLimits{}).paths;
}

}  // namespace pathcov
