// pathcov: stream prime paths and coverage test paths of a directed graph.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pathcov/commands.hpp"

namespace {

using pathcov::ExitCode;

struct InputOptions {
  std::string path;
  std::string format = "auto";
  std::string entry;
  std::string exit;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--input", in.path, "Graph file (JSON or DOT)")->required();
  cmd->add_option("--input-format", in.format, "auto, json or dot")
      ->check(CLI::IsMember({"auto", "json", "dot"}));
  cmd->add_option("--entry", in.entry, "Entry vertex label (overrides the document)");
  cmd->add_option("--exit", in.exit, "Exit vertex label (overrides the document)");
}

pathcov::LabeledGraph load(const InputOptions& in) {
  std::ifstream file(in.path, std::ios::binary);
  if (!file) throw pathcov::ParseError(pathcov::ParseError::Kind::syntax, "cannot open " + in.path);
  std::ostringstream text;
  text << file.rdbuf();
  auto format = pathcov::GraphFormat::automatic;
  if (in.format == "json") format = pathcov::GraphFormat::json;
  if (in.format == "dot") format = pathcov::GraphFormat::dot;
  auto doc = pathcov::parse_document(text.str(), format);
  if (!in.entry.empty()) doc.entry = in.entry;
  if (!in.exit.empty()) doc.exit = in.exit;
  return pathcov::build_graph(std::move(doc));
}

pathcov::OutputFormat output_format(const std::string& name) {
  return name == "ndjson" ? pathcov::OutputFormat::ndjson : pathcov::OutputFormat::lines;
}

std::vector<pathcov::Engine> parse_engines(const std::vector<std::string>& names) {
  std::vector<pathcov::Engine> engines;
  for (const auto& n : names) {
    engines.push_back(n == "stream" ? pathcov::Engine::stream : pathcov::Engine::ao_baseline);
  }
  return engines;
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  CLI::App app{"Streaming prime path enumeration and path-based test generation"};
  app.require_subcommand(1);

  // enumerate
  InputOptions enum_in;
  std::string target;
  std::uint64_t max_items = 0;
  double timeout = 0.0;
  std::string format = "lines";
  bool stats = false;
  auto* enumerate = app.add_subcommand("enumerate", "Stream coverage items, one path per line");
  enumerate->add_option("target", target, "prime-paths, simple-cycles or non-extendable-simple-paths")
      ->required()
      ->check(CLI::IsMember({"prime-paths", "simple-cycles", "non-extendable-simple-paths"}));
  add_input_options(enumerate, enum_in);
  enumerate->add_option("--max-items", max_items, "Stop after this many items");
  enumerate->add_option("--timeout-secs", timeout, "Stop after this many seconds");
  enumerate->add_option("--format", format, "lines or ndjson")->check(CLI::IsMember({"lines", "ndjson"}));
  enumerate->add_flag("--stats", stats, "Write run statistics to stderr");

  // cover
  InputOptions cover_in;
  std::string criterion;
  std::size_t k = 1;
  bool double_cycle = false;
  bool verify = false;
  std::uint64_t verify_cap = 100000;
  std::string cover_format = "lines";
  bool cover_stats = false;
  auto* cover = app.add_subcommand("cover", "Stream test paths for a coverage criterion");
  cover->add_option("criterion", criterion, "prime-path, simple-cycle, simple-path or e-acyclic")
      ->required()
      ->check(CLI::IsMember({"prime-path", "simple-cycle", "simple-path", "e-acyclic"}));
  add_input_options(cover, cover_in);
  cover->add_option("--k", k, "Coverage items accumulated per test case")->required();
  cover->add_flag("--double-cycle", double_cycle, "Traverse cycles twice (simple-cycle only)");
  cover->add_flag("--verify", verify, "Re-check coverage against a fresh item enumeration");
  cover->add_option("--verify-cap", verify_cap, "Skip verification above this many items");
  cover->add_option("--format", cover_format, "lines or ndjson")->check(CLI::IsMember({"lines", "ndjson"}));
  cover->add_flag("--stats", cover_stats, "Write run statistics to stderr");

  // check
  InputOptions check_in;
  auto* check = app.add_subcommand("check", "Validate a graph and its SESE structure");
  add_input_options(check, check_in);

  // bench
  InputOptions bench_in;
  std::vector<std::string> engines{"stream", "ao-baseline"};
  double bench_timeout = 0.0;
  std::uint64_t bench_max_items = 0;
  std::size_t max_cells = std::size_t{1} << 27;
  std::string stats_out;
  std::string preset;
  double scale = 1.0;
  auto* bench = app.add_subcommand("bench", "Time the streaming enumerator against the classical baseline");
  add_input_options(bench, bench_in);
  bench->add_option("--engines", engines, "Comma-separated: stream, ao-baseline")
      ->delimiter(',')
      ->check(CLI::IsMember({"stream", "ao-baseline"}));
  bench->add_option("--timeout-secs", bench_timeout, "Per-engine timeout");
  bench->add_option("--max-items", bench_max_items, "Item limit for the stream engine");
  bench->add_option("--baseline-max-cells", max_cells, "Stored-vertex budget for the baseline (0 = none)");
  bench->add_option("--stats-out", stats_out, "Write the JSON stats document here");
  bench->add_option("--preset", preset, "reference: 10,000,000 stream items, 1 h baseline timeout")
      ->check(CLI::IsMember({"reference"}));
  bench->add_option("--scale", scale, "Multiplier applied to the preset timeout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ExitCode::usage);
  }

  try {
    if (*enumerate) {
      auto g = load(enum_in);
      pathcov::EnumerateOptions options;
      options.target = *pathcov::parse_target(target);
      if (max_items > 0) options.max_items = max_items;
      if (timeout > 0) options.timeout_secs = timeout;
      options.format = output_format(format);
      options.stats = stats;
      return static_cast<int>(pathcov::run_enumerate(g, options, std::cout, std::cerr).code);
    }
    if (*cover) {
      auto g = load(cover_in);
      pathcov::CoverOptions options;
      options.criterion = *pathcov::parse_criterion(criterion);
      options.k = k;
      options.double_cycle = double_cycle;
      options.verify = verify;
      options.verify_cap = verify_cap;
      options.format = output_format(cover_format);
      options.stats = cover_stats;
      return static_cast<int>(pathcov::run_cover(g, options, std::cout, std::cerr).code);
    }
    if (*check) {
      auto g = load(check_in);
      return static_cast<int>(pathcov::run_check(g, std::cout));
    }
    if (*bench) {
      auto g = load(bench_in);
      pathcov::BenchOptions options = preset == "reference" ? pathcov::reference_preset(scale) : pathcov::BenchOptions{};
      options.engines = parse_engines(engines);
      if (bench_timeout > 0) options.timeout_secs = bench_timeout;
      if (bench_max_items > 0) options.max_items = bench_max_items;
      options.baseline_max_cells = max_cells;
      const auto report = pathcov::run_bench(g.graph, options);
      std::cout << report.table();
      const auto doc = report.to_json(g.document.name.value_or(bench_in.path), g.graph.vertex_count(),
                                      g.graph.edge_count());
      if (!stats_out.empty()) {
        std::ofstream(stats_out) << doc << '\n';
      } else {
        std::cerr << doc << '\n';
      }
      return 0;
    }
  } catch (const pathcov::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::invalid_input);
  } catch (const pathcov::InvalidGraph& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::invalid_input);
  }
  return static_cast<int>(ExitCode::usage);
}
