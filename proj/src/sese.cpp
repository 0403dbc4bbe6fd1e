#include "pathcov/sese.hpp"

namespace pathcov {

namespace {

std::vector<char> reach(const Digraph& g, Vertex from, bool forward) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<Vertex> work{from};
  seen[from] = 1;
  while (!work.empty()) {
    const Vertex u = work.back();
    work.pop_back();
    for (Vertex w : forward ? g.out(u) : g.in(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        work.push_back(w);
      }
    }
  }
  return seen;
}

std::string name(Vertex v, std::span<const std::string> labels) {
  return v < labels.size() ? labels[v] : std::to_string(v);
}

}  // namespace

SeseReport validate_sese(const Digraph& g, Vertex entry, Vertex exit) {
  using Kind = SeseViolation::Kind;
  SeseReport report;
  if (!g.contains(entry) || !g.contains(exit)) {
    report.violations.push_back({Kind::unknown_terminal, g.contains(entry) ? exit : entry});
    return report;
  }
  if (g.vertex_count() < 2) report.violations.push_back({Kind::too_few_vertices, entry});
  if (entry == exit) report.violations.push_back({Kind::entry_is_exit, entry});
  if (!g.in(entry).empty()) report.violations.push_back({Kind::entry_has_incoming, entry});
  if (!g.out(exit).empty()) report.violations.push_back({Kind::exit_has_outgoing, exit});
  const auto forward = reach(g, entry, true);
  const auto backward = reach(g, exit, false);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!forward[v]) report.violations.push_back({Kind::unreachable_from_entry, v});
    if (!backward[v]) report.violations.push_back({Kind::cannot_reach_exit, v});
  }
  return report;
}

std::vector<std::string> SeseReport::describe(std::span<const std::string> labels) const {
  using Kind = SeseViolation::Kind;
  std::vector<std::string> lines;
  for (const auto& v : violations) {
    const std::string who = name(v.vertex, labels);
    switch (v.kind) {
      case Kind::too_few_vertices:
        lines.push_back("graph has fewer than 2 vertices");
        break;
      case Kind::entry_is_exit:
        lines.push_back("entry and exit are the same vertex " + who);
        break;
      case Kind::entry_has_incoming:
        lines.push_back("entry has incoming edge: " + who);
        break;
      case Kind::exit_has_outgoing:
        lines.push_back("exit has outgoing edge: " + who);
        break;
      case Kind::unreachable_from_entry:
        lines.push_back("vertex not reachable from entry: " + who);
        break;
      case Kind::cannot_reach_exit:
        lines.push_back("vertex cannot reach exit: " + who);
        break;
      case Kind::unknown_terminal:
        lines.push_back("entry or exit is not a vertex of the graph: " + who);
        break;
    }
  }
  return lines;
}

NotSese::NotSese(SeseReport report)
    : InvalidGraph("graph is not single-entry single-exit"), report_(std::move(report)) {}

SeseGraph make_sese(Digraph g, Vertex entry, Vertex exit) {
  auto report = validate_sese(g, entry, exit);
  if (!report.ok()) throw NotSese(std::move(report));
  return {std::move(g), entry, exit};
}

}  // namespace pathcov
