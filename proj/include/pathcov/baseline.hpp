#ifndef PATHCOV_BASELINE_HPP
#define PATHCOV_BASELINE_HPP

#include <chrono>
#include <optional>
#include <vector>

#include "pathcov/digraph.hpp"
#include "pathcov/path.hpp"

namespace pathcov {

enum class BaselineStatus { completed, timed_out, budget_exceeded };

const char* to_string(BaselineStatus status);

struct BaselineLimits {
  std::optional<std::chrono::steady_clock::time_point> deadline;
  /// Cap on stored path nodes (one vertex each); 0 means unlimited.
  std::size_t max_cells = 0;
};

struct BaselineResult {
  BaselineStatus status = BaselineStatus::completed;
  /// Complete only when status == completed.
  std::vector<Path> paths;
  std::size_t peak_cells = 0;
  std::size_t peak_paths = 0;
  /// Allocated bytes of the path store and index lists at their peak.
  std::size_t peak_bytes = 0;
};

/// Classical breadth-wise prime path construction: start from every single
/// vertex, extend forward while the path stays simple, keep the ones that
/// close a simple cycle or cannot be extended, then drop every kept path that
/// is a proper subpath of another kept one. Materializes everything; used as
/// the correctness oracle and the timing baseline.
BaselineResult baseline_prime_paths(const Digraph& g, const BaselineLimits& limits);

/// Unlimited run; always complete.
std::vector<Path> baseline_prime_paths(const Digraph& g);

}  // namespace pathcov

#endif  // PATHCOV_BASELINE_HPP
