#include "pathcov/path.hpp"

#include <algorithm>

namespace pathcov {

Path Path::checked(const Digraph& g, std::vector<Vertex> vertices) {
  if (vertices.empty()) throw InvalidGraph("a path needs at least one vertex");
  if (!is_valid_path(g, vertices)) throw InvalidGraph("vertex sequence is not a path of the graph");
  return Path(std::move(vertices));
}

bool is_valid_path(const Digraph& g, std::span<const Vertex> vertices) {
  if (vertices.empty()) return false;
  for (Vertex v : vertices) {
    if (!g.contains(v)) return false;
  }
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    if (!g.has_edge(vertices[i], vertices[i + 1])) return false;
  }
  return true;
}

bool is_simple(std::span<const Vertex> p) {
  std::vector<Vertex> sorted(p.begin(), p.end());
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool is_simple_cycle(std::span<const Vertex> p) {
  return p.size() >= 2 && p.front() == p.back() && is_simple(p.first(p.size() - 1));
}

bool is_e_acyclic(std::span<const Vertex> p) {
  std::vector<Edge> steps;
  steps.reserve(p.size());
  for (std::size_t i = 0; i + 1 < p.size(); ++i) steps.push_back({p[i], p[i + 1]});
  std::sort(steps.begin(), steps.end());
  return std::adjacent_find(steps.begin(), steps.end()) == steps.end();
}

PathClass classify_path(const Digraph& g, const Path& p) {
  if (!is_valid_path(g, p.vertices())) throw InvalidGraph("classify_path: not a path of the graph");
  return {is_simple(p.vertices()), is_simple_cycle(p.vertices()), is_e_acyclic(p.vertices())};
}

bool covers(const Path& test, const Path& item) {
  if (item.size() > test.size()) return false;
  return std::search(test.begin(), test.end(), item.begin(), item.end()) != test.end();
}

Path rotation(const Path& cycle, std::size_t i) {
  const std::size_t n = cycle.size() - 1;
  std::vector<Vertex> r;
  r.reserve(n + 1);
  for (std::size_t j = 0; j <= n; ++j) r.push_back(cycle[(i + j) % n]);
  return Path(std::move(r));
}

std::vector<Path> rotations(const Path& cycle) {
  if (!is_simple_cycle(cycle.vertices())) throw InvalidGraph("rotations: path is not a simple cycle");
  std::vector<Path> result;
  const std::size_t n = cycle.size() - 1;
  result.reserve(n);
  for (std::size_t i = 0; i < n; ++i) result.push_back(rotation(cycle, i));
  return result;
}

Path join(const Path& p, const Path& q) {
  if (p.empty()) return q;
  if (q.empty()) return p;
  if (p.last() != q.head()) throw InvalidGraph("join: paths do not share a junction vertex");
  std::vector<Vertex> out;
  out.reserve(p.size() + q.size() - 1);
  out.insert(out.end(), p.begin(), p.end());
  out.insert(out.end(), q.begin() + 1, q.end());
  return Path(std::move(out));
}

Path doubled(const Path& cycle) {
  std::vector<Vertex> out(cycle.begin(), cycle.end());
  out.insert(out.end(), cycle.begin() + 1, cycle.end());
  return Path(std::move(out));
}

std::size_t PathHash::operator()(const Path& p) const noexcept {
  // FNV-1a over the vertex indices.
  std::size_t h = 1469598103934665603ULL;
  for (Vertex v : p) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace pathcov
