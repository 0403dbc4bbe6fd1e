#include "pathcov/coverage.hpp"

#include <algorithm>
#include <functional>

#include "pathcov/enumeration.hpp"
#include "pathcov/shortest_path.hpp"

namespace pathcov {

namespace {

/// Runs phase streams back to back; each phase is created only once the
/// previous one is exhausted.
class PhasedCoverage final : public TestCaseStream {
 public:
  using Factory = std::function<std::unique_ptr<TestCaseStream>()>;

  explicit PhasedCoverage(std::vector<Factory> phases) : phases_(std::move(phases)) {}

  std::optional<TestCase> next() override {
    while (true) {
      if (!current_) {
        if (phase_ >= phases_.size()) return std::nullopt;
        current_ = phases_[phase_++]();
      }
      if (auto tc = current_->next()) return tc;
      retire();
    }
  }

  std::size_t peak_retained_paths() const override {
    return std::max(peak_, current_ ? current_->peak_retained_paths() : 0);
  }
  std::size_t memory_bytes() const override { return current_ ? current_->memory_bytes() : 0; }
  std::uint64_t steps() const override { return steps_ + (current_ ? current_->steps() : 0); }
  std::uint64_t items_consumed() const override {
    return consumed_ + (current_ ? current_->items_consumed() : 0);
  }

 private:
  void retire() {
    peak_ = std::max(peak_, current_->peak_retained_paths());
    steps_ += current_->steps();
    consumed_ += current_->items_consumed();
    current_.reset();
  }

  std::vector<Factory> phases_;
  std::size_t phase_ = 0;
  std::unique_ptr<TestCaseStream> current_;
  std::size_t peak_ = 0;
  std::uint64_t steps_ = 0;
  std::uint64_t consumed_ = 0;
};

/// Coverage over L(G) whose test cases are mapped back to G.
class LineGraphCoverage final : public TestCaseStream {
 public:
  LineGraphCoverage(const SeseGraph& g, std::size_t k)
      : line_(std::make_unique<LineGraph>(line_graph(g.graph))) {
    Terminals terminals;
    terminals.is_exit.assign(line_->edge_of.size(), 0);
    for (Vertex i = 0; i < line_->edge_of.size(); ++i) {
      if (line_->edge_of[i].from == g.entry) terminals.entries.push_back(i);
      if (line_->edge_of[i].to == g.exit) terminals.is_exit[i] = 1;
    }
    const Digraph* lg = &line_->graph;
    inner_ = std::make_unique<PhasedCoverage>(std::vector<PhasedCoverage::Factory>{
        [lg, terminals, k] {
          return std::make_unique<AccumulatingCoverage>(*lg, terminals, simple_cycles(*lg),
                                                        CoverageConfig{k, true});
        },
        [lg, terminals, k] {
          return std::make_unique<AccumulatingCoverage>(
              *lg, terminals, non_extendable_simple_paths(*lg), CoverageConfig{k, false});
        }});
  }

  std::optional<TestCase> next() override {
    auto tc = inner_->next();
    if (!tc) return std::nullopt;
    return TestCase{line_path_reduce(*line_, tc->path), tc->items_covered};
  }

  std::size_t peak_retained_paths() const override { return inner_->peak_retained_paths(); }
  std::size_t memory_bytes() const override {
    return inner_->memory_bytes() + line_->graph.memory_bytes() +
           line_->edge_of.capacity() * sizeof(Edge);
  }
  std::uint64_t steps() const override { return inner_->steps(); }
  std::uint64_t items_consumed() const override { return inner_->items_consumed(); }

 private:
  std::unique_ptr<LineGraph> line_;
  std::unique_ptr<TestCaseStream> inner_;
};

}  // namespace

const char* to_string(Criterion c) {
  switch (c) {
    case Criterion::prime_path:
      return "prime-path";
    case Criterion::simple_cycle:
      return "simple-cycle";
    case Criterion::simple_path:
      return "simple-path";
    case Criterion::e_acyclic:
      return "e-acyclic";
  }
  return "unknown";
}

Terminals Terminals::of(const SeseGraph& g) {
  Terminals t;
  t.entries = {g.entry};
  t.is_exit.assign(g.graph.vertex_count(), 0);
  t.is_exit[g.exit] = 1;
  return t;
}

void validate(const CoverageConfig& config) {
  if (config.k < 1) throw InvalidGraph("coverage: k must be at least 1");
}

AccumulatingCoverage::AccumulatingCoverage(const Digraph& g, Terminals terminals,
                                           std::unique_ptr<PathStream> items,
                                           CoverageConfig config)
    : graph_(&g), terminals_(std::move(terminals)), items_(std::move(items)), config_(config) {
  validate(config_);
}

Path AccumulatingCoverage::from_entry(Vertex to) const {
  auto p = shortest_path_from_any(*graph_, terminals_.entries, to);
  if (!p) throw InvalidGraph("coverage: item head is not reachable from the entry");
  return std::move(*p);
}

TestCase AccumulatingCoverage::close(std::size_t items) {
  auto tail = shortest_path_to_any(*graph_, current_.last(), terminals_.is_exit);
  if (!tail) throw InvalidGraph("coverage: exit is not reachable from the end of a test case");
  TestCase tc{join(current_, *tail), items};
  current_ = Path();
  count_ = 0;
  return tc;
}

std::optional<TestCase> AccumulatingCoverage::next() {
  while (!exhausted_) {
    auto item = items_->next();
    if (!item) {
      exhausted_ = true;
      if (count_ != 0) return close(count_);
      break;
    }
    ++consumed_;
    Path c = config_.double_cycle ? doubled(*item) : std::move(*item);
    ++count_;
    if (count_ == 1) {
      current_ = join(from_entry(c.head()), c);
      if (config_.k == 1) return close(1);
      continue;
    }
    auto bridge = shortest_path(*graph_, current_.last(), c.head());
    if (!bridge) {
      TestCase done = close(count_ - 1);
      current_ = join(from_entry(c.head()), c);
      count_ = 1;
      return done;
    }
    current_ = join(join(current_, *bridge), c);
    if (count_ == config_.k) return close(count_);
  }
  return std::nullopt;
}

std::size_t AccumulatingCoverage::peak_retained_paths() const {
  // The test case under construction and the item being appended.
  return items_->peak_retained_paths() + 2;
}

std::size_t AccumulatingCoverage::memory_bytes() const {
  return items_->memory_bytes() + current_.size() * sizeof(Vertex) +
         terminals_.entries.capacity() * sizeof(Vertex) + terminals_.is_exit.capacity();
}

std::unique_ptr<TestCaseStream> simple_cycle_coverage(const SeseGraph& g, CoverageConfig config) {
  return std::make_unique<AccumulatingCoverage>(g.graph, Terminals::of(g), simple_cycles(g.graph),
                                                config);
}

std::unique_ptr<TestCaseStream> simple_path_coverage(const SeseGraph& g, std::size_t k) {
  return std::make_unique<AccumulatingCoverage>(g.graph, Terminals::of(g),
                                                non_extendable_simple_paths(g.graph),
                                                CoverageConfig{k, false});
}

std::unique_ptr<TestCaseStream> prime_path_coverage(const SeseGraph& g, std::size_t k) {
  validate({k, false});
  const SeseGraph* sese = &g;
  return std::make_unique<PhasedCoverage>(std::vector<PhasedCoverage::Factory>{
      [sese, k] { return simple_cycle_coverage(*sese, {k, true}); },
      [sese, k] { return simple_path_coverage(*sese, k); }});
}

std::unique_ptr<TestCaseStream> e_acyclic_path_coverage(const SeseGraph& g, std::size_t k) {
  validate({k, false});
  return std::make_unique<LineGraphCoverage>(g, k);
}

std::unique_ptr<TestCaseStream> coverage(const SeseGraph& g, Criterion criterion,
                                         CoverageConfig config) {
  switch (criterion) {
    case Criterion::prime_path:
      return prime_path_coverage(g, config.k);
    case Criterion::simple_cycle:
      return simple_cycle_coverage(g, config);
    case Criterion::simple_path:
      return simple_path_coverage(g, config.k);
    case Criterion::e_acyclic:
      return e_acyclic_path_coverage(g, config.k);
  }
  throw InvalidGraph("coverage: unknown criterion");
}

}  // namespace pathcov
