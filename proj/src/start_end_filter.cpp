#include "pathcov/start_end_filter.hpp"

namespace pathcov {

namespace {

// Marks the union of the chosen neighbourhood over `sources` and returns the
// marked list; `mark` is scratch space that is cleared again before return.
template <class Neighbours>
std::vector<Vertex> neighbourhood_union(std::span<const Vertex> sources, Neighbours next,
                                        std::vector<char>& mark) {
  std::vector<Vertex> result;
  for (Vertex u : sources) {
    for (Vertex w : next(u)) {
      if (!mark[w]) {
        mark[w] = 1;
        result.push_back(w);
      }
    }
  }
  for (Vertex w : result) mark[w] = 0;
  return result;
}

std::size_t count_in_class(const std::vector<Vertex>& vs, const SccPartition& part, std::size_t cls) {
  std::size_t n = 0;
  for (Vertex w : vs) n += part.class_of[w] == cls;
  return n;
}

bool contains(const std::vector<Vertex>& vs, Vertex v) {
  for (Vertex w : vs) {
    if (w == v) return true;
  }
  return false;
}

}  // namespace

StartEndFilter::StartEndFilter(const Digraph& g, const SccPartition& part)
    : graph_(&g),
      conditions_(g.vertex_count()),
      is_start_(g.vertex_count(), 0),
      is_end_(g.vertex_count(), 0) {
  std::vector<char> mark(g.vertex_count(), 0);
  auto out = [&g](Vertex u) { return g.out(u); };
  auto in = [&g](Vertex u) { return g.in(u); };

  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const std::size_t cls = part.class_of[v];
    auto& c = conditions_[v];
    const auto preds = g.in(v);
    const auto succs = g.out(v);

    bool preds_in_class = true;
    for (Vertex u : preds) preds_in_class = preds_in_class && part.class_of[u] == cls;
    bool succs_in_class = true;
    for (Vertex u : succs) succs_in_class = succs_in_class && part.class_of[u] == cls;
    c[0] = preds_in_class;
    c[1] = succs_in_class;

    const auto out_of_preds = neighbourhood_union(preds, out, mark);
    const auto in_of_succs = neighbourhood_union(succs, in, mark);
    const auto in_of_preds = neighbourhood_union(preds, in, mark);
    const auto out_of_succs = neighbourhood_union(succs, out, mark);

    c[2] = out_of_preds.size() + (contains(out_of_preds, v) ? 0 : 1) > preds.size();
    c[3] = in_of_succs.size() + (contains(in_of_succs, v) ? 0 : 1) > succs.size();
    c[4] = count_in_class(out_of_preds, part, cls) >= preds.size();
    c[5] = count_in_class(in_of_succs, part, cls) >= succs.size();
    c[6] = count_in_class(in_of_preds, part, cls) >= preds.size();
    c[7] = count_in_class(out_of_succs, part, cls) >= succs.size();

    is_start_[v] = c[0] && c[2] && c[4] && c[6];
    is_end_[v] = c[1] && c[3] && c[5] && c[7];
  }
}

std::vector<Vertex> StartEndFilter::starts() const {
  std::vector<Vertex> result;
  for (Vertex v = 0; v < is_start_.size(); ++v) {
    if (is_start_[v]) result.push_back(v);
  }
  return result;
}

std::vector<Vertex> StartEndFilter::ends() const {
  std::vector<Vertex> result;
  for (Vertex v = 0; v < is_end_.size(); ++v) {
    if (is_end_[v]) result.push_back(v);
  }
  return result;
}

}  // namespace pathcov
