#include "pathcov/shortest_path.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace pathcov {

namespace {

constexpr Vertex kNone = std::numeric_limits<Vertex>::max();

template <class IsTarget>
std::optional<Path> bfs(const Digraph& g, std::span<const Vertex> sources, IsTarget is_target) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> parent(n, kNone);
  std::vector<char> seen(n, 0);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex s : sources) {
    if (!seen[s]) {
      seen[s] = 1;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    if (is_target(u)) {
      std::vector<Vertex> rev;
      for (Vertex x = u; x != kNone; x = parent[x]) rev.push_back(x);
      std::reverse(rev.begin(), rev.end());
      return Path(std::move(rev));
    }
    for (Vertex w : g.out(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = u;
        queue.push_back(w);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Path> shortest_path(const Digraph& g, Vertex from, Vertex to) {
  const Vertex src[] = {from};
  return bfs(g, src, [to](Vertex v) { return v == to; });
}

std::optional<Path> shortest_path_from_any(const Digraph& g, std::span<const Vertex> sources,
                                           Vertex to) {
  return bfs(g, sources, [to](Vertex v) { return v == to; });
}

std::optional<Path> shortest_path_to_any(const Digraph& g, Vertex from,
                                         std::span<const char> targets) {
  const Vertex src[] = {from};
  return bfs(g, src, [targets](Vertex v) { return targets[v] != 0; });
}

}  // namespace pathcov
