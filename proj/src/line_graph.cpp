#include "pathcov/line_graph.hpp"

#include <algorithm>

namespace pathcov {

Vertex LineGraph::vertex_of(Edge e) const {
  auto it = std::lower_bound(edge_of.begin(), edge_of.end(), e);
  if (it == edge_of.end() || *it != e) return static_cast<Vertex>(edge_of.size());
  return static_cast<Vertex>(it - edge_of.begin());
}

LineGraph line_graph(const Digraph& g) {
  LineGraph lg;
  lg.edge_of = g.edges();
  std::vector<Edge> adjacent;
  for (Vertex i = 0; i < lg.edge_of.size(); ++i) {
    const Vertex middle = lg.edge_of[i].to;
    for (Vertex w : g.out(middle)) {
      adjacent.push_back({i, lg.vertex_of({middle, w})});
    }
  }
  lg.graph = Digraph(lg.edge_of.size(), adjacent);
  return lg;
}

Path line_path_reduce(const LineGraph& lg, const Path& line_path) {
  if (line_path.empty()) throw InvalidGraph("line_path_reduce: empty line path");
  std::vector<Vertex> out;
  out.reserve(line_path.size() + 1);
  for (std::size_t i = 0; i < line_path.size(); ++i) {
    if (line_path[i] >= lg.edge_of.size()) throw InvalidGraph("line_path_reduce: unknown line vertex");
    const Edge e = lg.edge_of[line_path[i]];
    if (i == 0) {
      out.push_back(e.from);
    } else if (out.back() != e.from) {
      throw InvalidGraph("line_path_reduce: consecutive edges do not chain");
    }
    out.push_back(e.to);
  }
  return Path(std::move(out));
}

Path line_path_lift(const LineGraph& lg, const Path& path) {
  if (path.size() < 2) throw InvalidGraph("line_path_lift: path has no edge");
  std::vector<Vertex> out;
  out.reserve(path.size() - 1);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const Vertex lv = lg.vertex_of({path[i], path[i + 1]});
    if (lv == lg.edge_of.size()) throw InvalidGraph("line_path_lift: step is not an edge");
    out.push_back(lv);
  }
  return Path(std::move(out));
}

}  // namespace pathcov
