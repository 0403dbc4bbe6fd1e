#ifndef PATHCOV_START_END_FILTER_HPP
#define PATHCOV_START_END_FILTER_HPP

#include <array>
#include <vector>

#include "pathcov/digraph.hpp"
#include "pathcov/scc.hpp"

namespace pathcov {

/// Necessary conditions for a vertex to begin or end a prime path that is
/// not a cycle. Deciding the exact sets is NP-complete, so these only prune;
/// every candidate still has to pass is_non_extendable.
///
/// Condition numbering (1..9) follows the standard statement:
///   1  in(v) within SC(v)                 2  out(v) within SC(v)
///   3  |out(in(v)) + {v}| > |in(v)|       4  |in(out(v)) + {v}| > |out(v)|
///   5  |out(in(v)) & SC(v)| >= |in(v)|    6  |in(out(v)) & SC(v)| >= |out(v)|
///   7  |in(in(v)) & SC(v)| >= |in(v)|     8  |out(out(v)) & SC(v)| >= |out(v)|
///   9  (end, start) is not an edge
/// where out(S)/in(S) denote neighbourhood unions over a set S.
class StartEndFilter {
 public:
  StartEndFilter(const Digraph& g, const SccPartition& part);

  /// Truth value of condition `i` (1..8) for vertex `v`.
  bool condition(int i, Vertex v) const { return conditions_[v][i - 1]; }

  bool is_start(Vertex v) const { return is_start_[v]; }
  bool is_end(Vertex v) const { return is_end_[v]; }

  /// Condition 9.
  bool pair_ok(Vertex end, Vertex start) const { return !graph_->has_edge(end, start); }

  /// Ascending.
  std::vector<Vertex> starts() const;
  std::vector<Vertex> ends() const;

 private:
  const Digraph* graph_;
  std::vector<std::array<bool, 8>> conditions_;
  std::vector<char> is_start_;
  std::vector<char> is_end_;
};

}  // namespace pathcov

#endif  // PATHCOV_START_END_FILTER_HPP
