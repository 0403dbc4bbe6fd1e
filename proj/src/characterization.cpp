#include "pathcov/characterization.hpp"

#include <algorithm>

namespace pathcov {

namespace {

bool subset_of(std::span<const Vertex> xs, const std::vector<Vertex>& sorted_set) {
  return std::all_of(xs.begin(), xs.end(), [&](Vertex x) {
    return std::binary_search(sorted_set.begin(), sorted_set.end(), x);
  });
}

bool within_component(const Digraph& g, const SccPartition& part, const Path& p) {
  if (!is_simple(p.vertices())) return false;
  const std::size_t cls = part.class_of[p.head()];
  for (Vertex v : p) {
    if (part.class_of[v] != cls) return false;
  }
  std::vector<Vertex> without_last(p.begin(), p.end() - 1);
  std::vector<Vertex> without_head(p.begin() + 1, p.end());
  std::sort(without_last.begin(), without_last.end());
  std::sort(without_head.begin(), without_head.end());
  return subset_of(g.in(p.head()), without_last) && subset_of(g.out(p.last()), without_head);
}

bool across_components(const Digraph& g, const SccPartition& part, const Path& p) {
  // Split p into maximal runs of one component.
  std::vector<std::size_t> run_class;
  std::vector<std::size_t> run_start;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const std::size_t cls = part.class_of[p[i]];
    if (run_class.empty() || run_class.back() != cls) {
      run_class.push_back(cls);
      run_start.push_back(i);
    }
  }
  run_start.push_back(p.size());
  if (run_class.size() < 2) return false;

  // The run classes must form a simple path of the condensation.
  std::vector<std::size_t> distinct(run_class);
  std::sort(distinct.begin(), distinct.end());
  if (std::adjacent_find(distinct.begin(), distinct.end()) != distinct.end()) return false;
  for (std::size_t r = 0; r + 1 < run_class.size(); ++r) {
    if (!part.condensation.has_edge(static_cast<Vertex>(run_class[r]),
                                    static_cast<Vertex>(run_class[r + 1]))) {
      return false;
    }
  }

  // Each cut is the vertex set of its run and must be traversed as a simple path.
  for (std::size_t r = 0; r < run_class.size(); ++r) {
    const auto run = p.vertices().subspan(run_start[r], run_start[r + 1] - run_start[r]);
    if (!is_simple(run)) return false;
    if (cut(part, run_class[r], p).size() != run.size()) return false;
  }

  const auto first_cut = cut(part, run_class.front(), p);
  const auto last_cut = cut(part, run_class.back(), p);
  return subset_of(g.in(p.head()), first_cut) && subset_of(g.out(p.last()), last_cut);
}

}  // namespace

const char* to_string(PrimeCase c) {
  switch (c) {
    case PrimeCase::none:
      return "none";
    case PrimeCase::cycle:
      return "cycle";
    case PrimeCase::within_component:
      return "within-component";
    case PrimeCase::across_components:
      return "across-components";
  }
  return "unknown";
}

int prime_case_count(const Digraph& g, const SccPartition& part, const Path& p) {
  if (p.empty() || !is_valid_path(g, p.vertices())) return 0;
  return int{is_simple_cycle(p.vertices())} + int{within_component(g, part, p)} +
         int{across_components(g, part, p)};
}

PrimeCase prime_case(const Digraph& g, const SccPartition& part, const Path& p) {
  if (p.empty() || !is_valid_path(g, p.vertices())) return PrimeCase::none;
  if (is_simple_cycle(p.vertices())) return PrimeCase::cycle;
  if (within_component(g, part, p)) return PrimeCase::within_component;
  if (across_components(g, part, p)) return PrimeCase::across_components;
  return PrimeCase::none;
}

}  // namespace pathcov
