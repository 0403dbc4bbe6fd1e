#include "pathcov/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "pathcov/baseline.hpp"
#include "pathcov/enumeration.hpp"

namespace pathcov {

namespace {

using Clock = std::chrono::steady_clock;

std::optional<Clock::time_point> deadline_after(Clock::time_point start, std::optional<double> secs) {
  if (!secs) return std::nullopt;
  return start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(*secs));
}

void write_path(std::ostream& out, const Path& p, const std::vector<std::string>& labels,
                OutputFormat format) {
  out << (format == OutputFormat::ndjson ? format_path_ndjson(p, labels) : format_path(p, labels))
      << '\n'
      << std::flush;
}

// Fresh item set for --verify, or nullopt when it exceeds the cap.
std::optional<std::vector<Path>> verification_items(const SeseGraph& g, const CoverOptions& options) {
  std::vector<Path> items;
  auto take = [&](PathStream& s, auto&& sink) {
    while (auto p = s.next()) {
      sink(std::move(*p));
      if (items.size() > options.verify_cap) return false;
    }
    return true;
  };
  auto push = [&](Path p) { items.push_back(std::move(p)); };
  auto push_rotations = [&](Path c) {
    for (auto& r : rotations(c)) items.push_back(std::move(r));
  };

  switch (options.criterion) {
    case Criterion::simple_cycle: {
      SimpleCycleStream s(g.graph);
      if (options.double_cycle ? !take(s, push_rotations) : !take(s, push)) return std::nullopt;
      break;
    }
    case Criterion::simple_path: {
      NonExtendableStream s(g.graph);
      if (!take(s, push)) return std::nullopt;
      break;
    }
    case Criterion::prime_path: {
      PrimePathStream s(g.graph);
      if (!take(s, push)) return std::nullopt;
      break;
    }
    case Criterion::e_acyclic: {
      // Every e-acyclic path lifts to a simple path of L(G), which is a
      // subpath of some prime path of L(G).
      const LineGraph lg = line_graph(g.graph);
      PrimePathStream s(lg.graph);
      if (!take(s, [&](Path p) { items.push_back(line_path_reduce(lg, p)); })) return std::nullopt;
      break;
    }
  }
  return items;
}

}  // namespace

std::optional<EnumerationTarget> parse_target(std::string_view name) {
  if (name == "prime-paths") return EnumerationTarget::prime_paths;
  if (name == "simple-cycles") return EnumerationTarget::simple_cycles;
  if (name == "non-extendable-simple-paths") return EnumerationTarget::non_extendable_simple_paths;
  return std::nullopt;
}

std::optional<Criterion> parse_criterion(std::string_view name) {
  if (name == "prime-path") return Criterion::prime_path;
  if (name == "simple-cycle") return Criterion::simple_cycle;
  if (name == "simple-path") return Criterion::simple_path;
  if (name == "e-acyclic") return Criterion::e_acyclic;
  return std::nullopt;
}

const char* to_string(EnumerationTarget target) {
  switch (target) {
    case EnumerationTarget::prime_paths:
      return "prime-paths";
    case EnumerationTarget::simple_cycles:
      return "simple-cycles";
    case EnumerationTarget::non_extendable_simple_paths:
      return "non-extendable-simple-paths";
  }
  return "unknown";
}

std::unique_ptr<PathStream> open_stream(const Digraph& g, EnumerationTarget target) {
  switch (target) {
    case EnumerationTarget::prime_paths:
      return prime_paths(g);
    case EnumerationTarget::simple_cycles:
      return simple_cycles(g);
    case EnumerationTarget::non_extendable_simple_paths:
      return non_extendable_simple_paths(g);
  }
  return nullptr;
}

RunOutcome run_enumerate(const LabeledGraph& g, const EnumerateOptions& options, std::ostream& out,
                         std::ostream& diag) {
  RunOutcome outcome;
  outcome.stats.engine = std::string("stream:") + to_string(options.target);
  PeriodRecorder clock;
  const auto deadline = deadline_after(clock.start(), options.timeout_secs);
  std::size_t peak_bytes = 0;
  {
    auto stream = open_stream(g.graph, options.target);
    while (true) {
      if (options.max_items && clock.items() >= *options.max_items) {
        outcome.stats.status = "truncated";
        break;
      }
      if (deadline && Clock::now() >= *deadline) {
        outcome.stats.status = "timeout";
        break;
      }
      auto p = stream->next();
      if (!p) break;
      clock.item();
      peak_bytes = std::max(peak_bytes, stream->memory_bytes());
      write_path(out, *p, g.labels, options.format);
    }
    outcome.stats.peak_retained_paths = stream->peak_retained_paths();
  }
  clock.finish(outcome.stats);
  outcome.stats.peak_memory_estimate = peak_bytes + g.graph.memory_bytes();
  outcome.code = outcome.stats.completed() ? ExitCode::completed : ExitCode::truncated;
  if (options.stats) diag << outcome.stats.to_json() << '\n' << std::flush;
  return outcome;
}

RunOutcome run_cover(const LabeledGraph& g, const CoverOptions& options, std::ostream& out,
                     std::ostream& diag) {
  RunOutcome outcome;
  outcome.stats.engine = std::string("cover:") + to_string(options.criterion);
  if (options.k < 1) {
    diag << "error: --k must be at least 1\n";
    outcome.code = ExitCode::invalid_input;
    return outcome;
  }
  if (options.double_cycle && options.criterion != Criterion::simple_cycle) {
    diag << "error: --double-cycle only applies to the simple-cycle criterion\n";
    outcome.code = ExitCode::invalid_input;
    return outcome;
  }
  SeseGraph sese;
  try {
    sese = g.sese();
  } catch (const NotSese& e) {
    diag << "error: " << e.what() << '\n';
    for (const auto& line : e.report().describe(g.labels)) diag << "  " << line << '\n';
    outcome.code = ExitCode::not_sese;
    return outcome;
  }

  PeriodRecorder clock;
  std::vector<Path> suite;
  std::size_t peak_bytes = 0;
  {
    auto stream = coverage(sese, options.criterion, {options.k, options.double_cycle});
    while (auto tc = stream->next()) {
      clock.item();
      peak_bytes = std::max(peak_bytes, stream->memory_bytes());
      write_path(out, tc->path, g.labels, options.format);
      if (options.verify) suite.push_back(std::move(tc->path));
    }
    outcome.stats.peak_retained_paths = stream->peak_retained_paths();
  }
  clock.finish(outcome.stats);
  outcome.stats.peak_memory_estimate = peak_bytes + g.graph.memory_bytes();

  if (options.verify) {
    auto items = verification_items(sese, options);
    if (!items) {
      diag << "verify: skipped (more than " << options.verify_cap << " items)\n";
    } else {
      std::size_t uncovered = 0;
      for (const auto& item : *items) {
        const bool hit = std::any_of(suite.begin(), suite.end(),
                                     [&](const Path& t) { return covers(t, item); });
        if (!hit) {
          if (uncovered < 10) diag << "verify: uncovered " << format_path(item, g.labels) << '\n';
          ++uncovered;
        }
      }
      if (uncovered == 0) {
        diag << "verify: ok (" << items->size() << " items covered by " << suite.size()
             << " test cases)\n";
      } else {
        diag << "verify: FAILED (" << uncovered << " of " << items->size() << " items uncovered)\n";
        outcome.code = ExitCode::verify_failed;
      }
    }
  }
  if (options.stats) diag << outcome.stats.to_json() << '\n' << std::flush;
  return outcome;
}

ExitCode run_check(const LabeledGraph& g, std::ostream& out) {
  out << "vertices: " << g.graph.vertex_count() << "\nedges: " << g.graph.edge_count()
      << "\nstrongly connected components: " << scc_partition(g.graph).size() << '\n';
  if (!g.has_terminals()) {
    out << "not SESE: entry and exit are not both given\n";
    return ExitCode::not_sese;
  }
  const auto report = validate_sese(g.graph, *g.entry, *g.exit);
  if (report.ok()) {
    out << "SESE: ok (entry " << g.labels[*g.entry] << ", exit " << g.labels[*g.exit] << ")\n";
    return ExitCode::completed;
  }
  out << "not SESE:\n";
  for (const auto& line : report.describe(g.labels)) out << "  " << line << '\n';
  return ExitCode::not_sese;
}

BenchOptions reference_preset(double scale) {
  BenchOptions options;
  options.max_items = 10'000'000;
  options.timeout_secs = 3600.0 * scale;
  return options;
}

RunStats bench_stream(const Digraph& g, std::optional<double> timeout_secs,
                      std::optional<std::uint64_t> max_items) {
  RunStats stats;
  stats.engine = "stream";
  PeriodRecorder clock;
  const auto deadline = deadline_after(clock.start(), timeout_secs);
  std::size_t peak_bytes = 0;
  {
    PrimePathStream stream(g);
    while (true) {
      if (max_items && clock.items() >= *max_items) {
        stats.status = "truncated";
        break;
      }
      if (deadline && Clock::now() >= *deadline) {
        stats.status = "timeout";
        break;
      }
      if (!stream.next()) break;
      clock.item();
      if ((clock.items() & 1023) == 1) peak_bytes = std::max(peak_bytes, stream.memory_bytes());
    }
    peak_bytes = std::max(peak_bytes, stream.memory_bytes());
    stats.peak_retained_paths = stream.peak_retained_paths();
  }
  clock.finish(stats);
  stats.peak_memory_estimate = peak_bytes + g.memory_bytes();
  return stats;
}

RunStats bench_baseline(const Digraph& g, std::optional<double> timeout_secs, std::size_t max_cells) {
  RunStats stats;
  stats.engine = "ao-baseline";
  PeriodRecorder clock;
  BaselineLimits limits;
  limits.deadline = deadline_after(clock.start(), timeout_secs);
  limits.max_cells = max_cells;
  auto result = baseline_prime_paths(g, limits);
  stats.status = to_string(result.status);
  const double elapsed = clock.elapsed();
  stats.elapsed = elapsed;
  stats.items_emitted = result.paths.size();
  // Everything arrives at the end, so the only period is the whole run.
  stats.avg_period = stats.items_emitted > 0 ? elapsed / static_cast<double>(stats.items_emitted) : 0.0;
  stats.max_period = elapsed;
  stats.peak_retained_paths = result.peak_paths;
  stats.peak_memory_estimate = result.peak_bytes + g.memory_bytes();
  return stats;
}

BenchReport run_bench(const Digraph& g, const BenchOptions& options) {
  BenchReport report;
  for (Engine engine : options.engines) {
    if (engine == Engine::stream) {
      report.runs.push_back(bench_stream(g, options.timeout_secs, options.max_items));
    } else {
      report.runs.push_back(bench_baseline(g, options.timeout_secs, options.baseline_max_cells));
    }
  }
  return report;
}

std::string BenchReport::to_json(const std::string& graph_name, std::size_t vertices,
                                 std::size_t edges) const {
  nlohmann::json runs_json = nlohmann::json::array();
  for (const auto& r : runs) runs_json.push_back(nlohmann::json::parse(r.to_json()));
  nlohmann::json j{{"graph", {{"name", graph_name}, {"vertices", vertices}, {"edges", edges}}},
                   {"runs", std::move(runs_json)}};
  return j.dump(2);
}

std::string BenchReport::table() const {
  std::ostringstream os;
  os << std::left << std::setw(13) << "engine" << std::setw(17) << "status" << std::right
     << std::setw(12) << "items" << std::setw(12) << "elapsed[s]" << std::setw(14) << "avg period[s]"
     << std::setw(14) << "max period[s]" << std::setw(10) << "retained" << std::setw(14) << "memory[B]"
     << '\n';
  for (const auto& r : runs) {
    os << std::left << std::setw(13) << r.engine << std::setw(17) << r.status << std::right
       << std::setw(12) << r.items_emitted << std::setw(12) << std::fixed << std::setprecision(4)
       << r.elapsed << std::setw(14) << std::scientific << std::setprecision(3) << r.avg_period
       << std::setw(14) << r.max_period << std::setw(10) << r.peak_retained_paths << std::setw(14)
       << r.peak_memory_estimate << '\n'
       << std::defaultfloat;
  }
  return os.str();
}

}  // namespace pathcov
