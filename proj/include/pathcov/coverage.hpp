#ifndef PATHCOV_COVERAGE_HPP
#define PATHCOV_COVERAGE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "pathcov/line_graph.hpp"
#include "pathcov/path.hpp"
#include "pathcov/sese.hpp"
#include "pathcov/stream.hpp"

namespace pathcov {

struct CoverageConfig {
  /// Maximum number of coverage items packed into one test case; >= 1.
  std::size_t k = 1;
  /// Traverse each cycle twice so that every rotation is covered.
  bool double_cycle = false;
};

struct TestCase {
  Path path;
  std::size_t items_covered = 0;

  friend bool operator==(const TestCase&, const TestCase&) = default;
};

class TestCaseStream : public Stream<TestCase> {
 public:
  /// Coverage items pulled from the underlying item stream(s) so far.
  virtual std::uint64_t items_consumed() const = 0;
};

enum class Criterion { prime_path, simple_cycle, simple_path, e_acyclic };

const char* to_string(Criterion c);

/// Where test cases may begin and end. For a SESE graph these are {s} and
/// {t}; for a line graph, every line vertex leaving s and every one entering t.
struct Terminals {
  std::vector<Vertex> entries;
  std::vector<char> is_exit;

  static Terminals of(const SeseGraph& g);
};

/// Packs items from `items` into test cases.
///
/// The first item of a test case is reached by the shortest path from the
/// entries; each further item is appended via the shortest path from the
/// current end to its head. A test case is closed (shortest path to an exit)
/// when it holds k items, when the next item cannot be reached from the
/// current end, or when the item stream runs out.
class AccumulatingCoverage final : public TestCaseStream {
 public:
  AccumulatingCoverage(const Digraph& g, Terminals terminals, std::unique_ptr<PathStream> items,
                       CoverageConfig config);

  std::optional<TestCase> next() override;
  std::size_t peak_retained_paths() const override;
  std::size_t memory_bytes() const override;
  std::uint64_t steps() const override { return items_->steps(); }
  std::uint64_t items_consumed() const override { return consumed_; }

 private:
  Path from_entry(Vertex to) const;
  TestCase close(std::size_t items);

  const Digraph* graph_;
  Terminals terminals_;
  std::unique_ptr<PathStream> items_;
  CoverageConfig config_;
  Path current_;
  std::size_t count_ = 0;
  std::uint64_t consumed_ = 0;
  bool exhausted_ = false;
};

/// Throws InvalidGraph when k == 0.
void validate(const CoverageConfig& config);

std::unique_ptr<TestCaseStream> simple_cycle_coverage(const SeseGraph& g, CoverageConfig config);
std::unique_ptr<TestCaseStream> simple_path_coverage(const SeseGraph& g, std::size_t k);
/// Cycle phase with double_cycle, then the simple path phase.
std::unique_ptr<TestCaseStream> prime_path_coverage(const SeseGraph& g, std::size_t k);
/// Prime path coverage of the line graph, reduced back to paths of g.
std::unique_ptr<TestCaseStream> e_acyclic_path_coverage(const SeseGraph& g, std::size_t k);

/// Dispatch by criterion; double_cycle only affects Criterion::simple_cycle.
std::unique_ptr<TestCaseStream> coverage(const SeseGraph& g, Criterion criterion,
                                         CoverageConfig config);

}  // namespace pathcov

#endif  // PATHCOV_COVERAGE_HPP
