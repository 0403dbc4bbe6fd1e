#ifndef PATHCOV_CHARACTERIZATION_HPP
#define PATHCOV_CHARACTERIZATION_HPP

#include "pathcov/digraph.hpp"
#include "pathcov/path.hpp"
#include "pathcov/scc.hpp"

namespace pathcov {

/// Which case of the SCC-based prime path characterization a path meets.
enum class PrimeCase {
  none,
  /// The path is a simple cycle.
  cycle,
  /// A simple path inside one component whose head's predecessors and
  /// last vertex's successors all lie on the path, excluding the opposite end.
  within_component,
  /// A simple path crossing two or more components along a simple path of
  /// the condensation, with in(head) inside the first cut and out(last)
  /// inside the last cut.
  across_components,
};

const char* to_string(PrimeCase c);

/// Evaluates the three cases independently and returns the one that holds.
/// A path is prime iff the result is not PrimeCase::none.
PrimeCase prime_case(const Digraph& g, const SccPartition& part, const Path& p);

/// Number of cases that hold at once (0 or 1 for any valid path).
int prime_case_count(const Digraph& g, const SccPartition& part, const Path& p);

}  // namespace pathcov

#endif  // PATHCOV_CHARACTERIZATION_HPP
