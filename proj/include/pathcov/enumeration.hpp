#ifndef PATHCOV_ENUMERATION_HPP
#define PATHCOV_ENUMERATION_HPP

#include <memory>
#include <optional>
#include <vector>

#include "pathcov/circuit.hpp"
#include "pathcov/digraph.hpp"
#include "pathcov/path.hpp"
#include "pathcov/scc.hpp"
#include "pathcov/start_end_filter.hpp"
#include "pathcov/stream.hpp"

namespace pathcov {

/// Every simple cycle of the graph, one representative per rotation class.
///
/// Anchors are taken in ascending order; each cycle is reported starting at
/// its smallest vertex, because after an anchor is exhausted it is removed
/// from the working graph. Self-loops come out as (v, v).
class SimpleCycleStream final : public PathStream {
 public:
  explicit SimpleCycleStream(const Digraph& g);

  std::optional<Path> next() override;
  std::size_t peak_retained_paths() const override;
  std::size_t memory_bytes() const override;
  std::uint64_t steps() const override;

 private:
  const Digraph* graph_;
  std::vector<char> remaining_;
  Vertex anchor_ = 0;
  std::optional<CircuitEnumerator> circuit_;
  std::size_t peak_ = 0;
  std::uint64_t finished_steps_ = 0;
};

/// Ex(G, v): G plus a sentinel x_v = vertex_count(G) with an edge (x_v, v)
/// and an edge (u, x_v) for every end candidate u with (u, v) not in E.
/// Simple cycles through x_v are exactly the simple paths from v to those
/// end candidates.
struct ExtendedGraph {
  Vertex start;
  Vertex sentinel;
  Digraph graph;
};

/// Throws InvalidGraph when `v` is not a start candidate.
ExtendedGraph extend_graph(const Digraph& g, const StartEndFilter& filter, Vertex v);

/// Direct restatement of non-extendability for a simple path:
/// in(head) within V(p) minus last, and out(last) within V(p) minus head.
/// Throws InvalidGraph when `p` is not simple.
bool is_non_extendable(const Digraph& g, const Path& p);

/// Every non-extendable simple path, grouped by start vertex (ascending).
///
/// For each start candidate the search runs on the strongly connected
/// component of the sentinel in Ex(G, v); each cycle through the sentinel
/// is stripped of it and kept only if it passes is_non_extendable.
class NonExtendableStream final : public PathStream {
 public:
  explicit NonExtendableStream(const Digraph& g);

  std::optional<Path> next() override;
  std::size_t peak_retained_paths() const override;
  std::size_t memory_bytes() const override;
  std::uint64_t steps() const override;

  /// Cycles through the sentinel rejected by the post-filter.
  std::uint64_t rejected() const { return rejected_; }

 private:
  bool open_next_start();

  const Digraph* graph_;
  SccPartition partition_;
  StartEndFilter filter_;
  std::vector<Vertex> starts_;
  std::size_t start_index_ = 0;
  std::unique_ptr<ExtendedGraph> extended_;
  std::optional<CircuitEnumerator> circuit_;
  std::vector<char> on_path_;
  std::size_t peak_ = 0;
  std::uint64_t finished_steps_ = 0;
  std::uint64_t rejected_ = 0;
};

/// All prime paths: every rotation of every simple cycle, then every
/// non-extendable simple path. No path is emitted twice.
class PrimePathStream final : public PathStream {
 public:
  explicit PrimePathStream(const Digraph& g);

  std::optional<Path> next() override;
  std::size_t peak_retained_paths() const override;
  std::size_t memory_bytes() const override;
  std::uint64_t steps() const override;

 private:
  const Digraph* graph_;
  std::unique_ptr<SimpleCycleStream> cycles_;
  std::unique_ptr<NonExtendableStream> paths_;
  std::optional<Path> cycle_;
  std::size_t rotation_ = 0;
  std::size_t cycle_peak_ = 0;
  std::uint64_t cycle_steps_ = 0;
};

std::unique_ptr<PathStream> simple_cycles(const Digraph& g);
std::unique_ptr<PathStream> non_extendable_simple_paths(const Digraph& g);
std::unique_ptr<PathStream> prime_paths(const Digraph& g);

/// Drains a stream into a vector.
std::vector<Path> collect(PathStream& stream);

}  // namespace pathcov

#endif  // PATHCOV_ENUMERATION_HPP
