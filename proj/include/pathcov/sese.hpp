#ifndef PATHCOV_SESE_HPP
#define PATHCOV_SESE_HPP

#include <span>
#include <string>
#include <vector>

#include "pathcov/digraph.hpp"

namespace pathcov {

/// Single-entry single-exit graph. Construct through make_sese() to get the
/// invariants checked.
struct SeseGraph {
  Digraph graph;
  Vertex entry = 0;
  Vertex exit = 0;
};

struct SeseViolation {
  enum class Kind {
    too_few_vertices,
    entry_is_exit,
    entry_has_incoming,
    exit_has_outgoing,
    unreachable_from_entry,
    cannot_reach_exit,
    unknown_terminal,
  };
  Kind kind;
  Vertex vertex = 0;

  friend bool operator==(const SeseViolation&, const SeseViolation&) = default;
};

struct SeseReport {
  std::vector<SeseViolation> violations;

  bool ok() const { return violations.empty(); }
  /// One line per violation, vertices named by `labels` when given.
  std::vector<std::string> describe(std::span<const std::string> labels = {}) const;
};

SeseReport validate_sese(const Digraph& g, Vertex entry, Vertex exit);

class NotSese : public InvalidGraph {
 public:
  explicit NotSese(SeseReport report);
  const SeseReport& report() const { return report_; }

 private:
  SeseReport report_;
};

/// Throws NotSese with the full report on any violation.
SeseGraph make_sese(Digraph g, Vertex entry, Vertex exit);

}  // namespace pathcov

#endif  // PATHCOV_SESE_HPP
