#ifndef PATHCOV_COMMANDS_HPP
#define PATHCOV_COMMANDS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "pathcov/coverage.hpp"
#include "pathcov/graph_document.hpp"
#include "pathcov/run_stats.hpp"

namespace pathcov {

/// Process exit statuses of the command line tool.
enum class ExitCode : int {
  completed = 0,
  usage = 1,
  truncated = 2,
  invalid_input = 3,
  not_sese = 4,
  verify_failed = 5,
};

enum class EnumerationTarget { prime_paths, simple_cycles, non_extendable_simple_paths };
enum class OutputFormat { lines, ndjson };

std::optional<EnumerationTarget> parse_target(std::string_view name);
std::optional<Criterion> parse_criterion(std::string_view name);
const char* to_string(EnumerationTarget target);

std::unique_ptr<PathStream> open_stream(const Digraph& g, EnumerationTarget target);

struct EnumerateOptions {
  EnumerationTarget target = EnumerationTarget::prime_paths;
  std::optional<std::uint64_t> max_items;
  std::optional<double> timeout_secs;
  OutputFormat format = OutputFormat::lines;
  bool stats = false;
};

struct RunOutcome {
  ExitCode code = ExitCode::completed;
  RunStats stats;
};

/// Writes one path per line to `out`, flushing each line; the stats
/// document (when requested) goes to `diag` only.
RunOutcome run_enumerate(const LabeledGraph& g, const EnumerateOptions& options, std::ostream& out,
                         std::ostream& diag);

struct CoverOptions {
  Criterion criterion = Criterion::prime_path;
  std::size_t k = 1;
  bool double_cycle = false;
  bool verify = false;
  /// Verification is skipped when the item set is larger than this.
  std::uint64_t verify_cap = 100000;
  OutputFormat format = OutputFormat::lines;
  bool stats = false;
};

RunOutcome run_cover(const LabeledGraph& g, const CoverOptions& options, std::ostream& out,
                     std::ostream& diag);

/// SESE report on `out`; not_sese when any violation is found.
ExitCode run_check(const LabeledGraph& g, std::ostream& out);

enum class Engine { stream, ao_baseline };

struct BenchOptions {
  std::vector<Engine> engines{Engine::stream, Engine::ao_baseline};
  std::optional<double> timeout_secs;
  std::optional<std::uint64_t> max_items;
  /// Cell budget for the baseline's stored paths; 0 means unlimited.
  std::size_t baseline_max_cells = std::size_t{1} << 27;
};

/// The reference configuration: 10,000,000 items for the stream and an
/// hour-long baseline timeout, multiplied by `scale`.
BenchOptions reference_preset(double scale);

struct BenchReport {
  std::vector<RunStats> runs;
  std::string to_json(const std::string& graph_name, std::size_t vertices, std::size_t edges) const;
  std::string table() const;
};

/// Runs each engine in turn on prime path enumeration; a timeout of one
/// engine never aborts the next.
BenchReport run_bench(const Digraph& g, const BenchOptions& options);

/// Single engine runs used by bench.
RunStats bench_stream(const Digraph& g, std::optional<double> timeout_secs,
                      std::optional<std::uint64_t> max_items);
RunStats bench_baseline(const Digraph& g, std::optional<double> timeout_secs, std::size_t max_cells);

}  // namespace pathcov

#endif  // PATHCOV_COMMANDS_HPP
