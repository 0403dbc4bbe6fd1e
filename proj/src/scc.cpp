#include "pathcov/scc.hpp"

#include <algorithm>
#include <limits>

namespace pathcov {

namespace {

constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();

struct TarjanFrame {
  Vertex v;
  std::size_t next;
};

}  // namespace

SccPartition scc_partition(const Digraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> index(n, kUnvisited);
  std::vector<std::size_t> low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<Vertex> stack;
  std::vector<TarjanFrame> calls;
  std::vector<std::vector<Vertex>> found;
  std::size_t counter = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    calls.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;

    while (!calls.empty()) {
      TarjanFrame& top = calls.back();
      const auto succ = g.out(top.v);
      if (top.next < succ.size()) {
        const Vertex w = succ[top.next++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          calls.push_back({w, 0});
        } else if (on_stack[w]) {
          low[top.v] = std::min(low[top.v], index[w]);
        }
        continue;
      }
      const Vertex v = top.v;
      calls.pop_back();
      if (!calls.empty()) {
        low[calls.back().v] = std::min(low[calls.back().v], low[v]);
      }
      if (low[v] == index[v]) {
        std::vector<Vertex> component;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          component.push_back(w);
        } while (w != v);
        std::sort(component.begin(), component.end());
        found.push_back(std::move(component));
      }
    }
  }

  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  SccPartition part;
  part.classes = std::move(found);
  part.class_of.assign(n, 0);
  for (std::size_t c = 0; c < part.classes.size(); ++c) {
    for (Vertex v : part.classes[c]) part.class_of[v] = c;
  }
  std::vector<Edge> between;
  for (const Edge& e : g.edges()) {
    const auto a = static_cast<Vertex>(part.class_of[e.from]);
    const auto b = static_cast<Vertex>(part.class_of[e.to]);
    if (a != b) between.push_back({a, b});
  }
  std::sort(between.begin(), between.end());
  between.erase(std::unique(between.begin(), between.end()), between.end());
  part.condensation = Digraph(part.classes.size(), between);
  return part;
}

std::vector<char> component_mask(const Digraph& g, std::span<const char> active, Vertex v) {
  const std::size_t n = g.vertex_count();
  auto reach = [&](bool forward) {
    std::vector<char> seen(n, 0);
    std::vector<Vertex> work{v};
    seen[v] = 1;
    while (!work.empty()) {
      const Vertex u = work.back();
      work.pop_back();
      for (Vertex w : forward ? g.out(u) : g.in(u)) {
        if (active[w] && !seen[w]) {
          seen[w] = 1;
          work.push_back(w);
        }
      }
    }
    return seen;
  };
  std::vector<char> mask = reach(true);
  const std::vector<char> back = reach(false);
  for (std::size_t i = 0; i < n; ++i) mask[i] = mask[i] && back[i];
  return mask;
}

std::vector<Vertex> cut(const SccPartition& part, std::size_t cls, const Path& p) {
  std::vector<Vertex> result;
  for (Vertex v : p) {
    if (part.class_of[v] == cls) result.push_back(v);
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

bool is_acyclic(const Digraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> indegree(n);
  std::vector<Vertex> ready;
  for (Vertex v = 0; v < n; ++v) {
    indegree[v] = g.in(v).size();
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::size_t seen = 0;
  while (!ready.empty()) {
    const Vertex v = ready.back();
    ready.pop_back();
    ++seen;
    for (Vertex w : g.out(v)) {
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  return seen == n;
}

}  // namespace pathcov
