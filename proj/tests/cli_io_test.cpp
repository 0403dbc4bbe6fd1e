#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "json.hpp"
#include "pathcov/commands.hpp"
#include "pathcov/sese.hpp"
#include "support/graphs.hpp"

using namespace pathcov;

namespace {

LabeledGraph labeled(const Digraph& g, bool terminals = true) {
  GraphDocument doc;
  for (Vertex v = 0; v < g.vertex_count(); ++v) doc.vertices.push_back("v" + std::to_string(v));
  for (auto e : g.edges()) doc.edges.emplace_back(doc.vertices[e.from], doc.vertices[e.to]);
  if (terminals) {
    doc.entry = doc.vertices.front();
    doc.exit = doc.vertices.back();
  }
  return build_graph(std::move(doc));
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

const char* chain_json = R"({"vertices":["s","a","t"],"edges":[["s","a"],["a","t"]],"entry":"s","exit":"t"})";

}  // namespace

TEST_CASE("json documents") {
  auto g = parse_graph(chain_json);
  CHECK(g.graph.vertex_count() == 3);
  CHECK(g.graph.has_edge(0, 1));
  CHECK(g.graph.has_edge(1, 2));
  CHECK(g.has_terminals());
  CHECK(g.labels == std::vector<std::string>{"s", "a", "t"});
  CHECK(g.sese().exit == 2);
  CHECK(g.find("a") == Vertex{1});
  CHECK_FALSE(g.find("zz").has_value());

  auto bare = parse_graph(R"({"name":"x","vertices":["s","a","t"],"edges":[["s","a"],["a","t"]]})");
  CHECK_FALSE(bare.has_terminals());
  CHECK(bare.document.name == "x");
  CHECK_THROWS_AS(bare.sese(), NotSese);
}

TEST_CASE("parse errors are distinguished") {
  auto kind_of = [](const char* text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.kind();
    }
    FAIL("no error");
    return ParseError::Kind::syntax;
  };
  CHECK(kind_of("{") == ParseError::Kind::syntax);
  CHECK(kind_of(R"({"vertices":"s","edges":[]})") == ParseError::Kind::syntax);
  CHECK(kind_of(R"({"vertices":["s"],"edges":[["s"]]})") == ParseError::Kind::syntax);
  CHECK(kind_of(R"({"vertices":["s"],"edges":[["s","q"]]})") == ParseError::Kind::unknown_endpoint);
  CHECK(kind_of(R"({"vertices":["s","t"],"edges":[["s","t"],["s","t"]]})") == ParseError::Kind::duplicate_edge);
  CHECK(kind_of(R"({"vertices":["s","s"],"edges":[]})") == ParseError::Kind::duplicate_label);
  CHECK(kind_of(R"({"vertices":["s"],"edges":[],"entry":"q"})") == ParseError::Kind::unknown_terminal);
  CHECK(kind_of("graph { a -- b }") == ParseError::Kind::syntax);
  CHECK(kind_of("digraph { a -> }") == ParseError::Kind::syntax);
}

TEST_CASE("dot subset matches the json form") {
  auto dot = parse_document("digraph { s -> a; a -> t; }");
  dot.entry = "s";
  dot.exit = "t";
  auto from_dot = build_graph(dot);
  auto from_json = parse_graph(chain_json);
  CHECK(from_dot.graph == from_json.graph);
  CHECK(from_dot.labels == from_json.labels);
  CHECK(from_dot.entry == from_json.entry);
  CHECK(from_dot.exit == from_json.exit);
}

TEST_CASE("dot subset details") {
  auto doc = parse_dot_document(R"(
    // leading comment
    strict digraph "cfg" {
      graph [rankdir=LR];
      node [shape=box];
      rankdir = TB
      "entry block" -> b1 -> b2 [label="x"];  /* chain */
      b1 -> b1
      lonely;
      # hash comment
      b2 -> 7;
    })");
  CHECK(doc.name == "cfg");
  CHECK(doc.vertices == std::vector<std::string>{"entry block", "b1", "b2", "lonely", "7"});
  CHECK(doc.edges.size() == 4);
  CHECK_THROWS_AS(parse_dot_document("digraph { subgraph c { a -> b } }"), ParseError);
}

TEST_CASE("documents round-trip through json") {
  std::mt19937 rng(401);
  for (int round = 0; round < 30; ++round) {
    auto g = labeled(fixtures::random_sese(rng, 3 + round % 6, 0.3));
    auto again = parse_graph(to_json(g.document));
    CHECK(again.graph == g.graph);
    CHECK(again.labels == g.labels);
    CHECK(again.entry == g.entry);
    CHECK(again.exit == g.exit);
  }
}

TEST_CASE("path formats") {
  std::vector<std::string> labels{"s", "a", "t"};
  CHECK(format_path(Path{0, 1, 2}, labels) == "s,a,t");
  CHECK(format_path_ndjson(Path{0, 1, 2}, labels) == R"({"path":["s","a","t"]})");
}

TEST_CASE("sese validation") {
  CHECK(validate_sese(fixtures::g_ex(), 0, 14).ok());

  Digraph unreachable(4, {{0, 1}, {1, 3}, {2, 3}});
  auto r = validate_sese(unreachable, 0, 3);
  REQUIRE_FALSE(r.ok());
  std::vector<std::string> labels{"s", "a", "u", "t"};
  auto msgs = r.describe(labels);
  CHECK(std::any_of(msgs.begin(), msgs.end(), [](auto& m) { return m.find("u") != std::string::npos; }));

  Digraph into_entry(3, {{0, 1}, {1, 0}, {1, 2}});
  auto r2 = validate_sese(into_entry, 0, 2);
  auto msgs2 = r2.describe();
  CHECK(std::any_of(msgs2.begin(), msgs2.end(),
                    [](auto& m) { return m.find("entry has incoming edge") != std::string::npos; }));

  CHECK_FALSE(validate_sese(Digraph(1), 0, 0).ok());
  CHECK_THROWS_AS(make_sese(into_entry, 0, 2), NotSese);
}

TEST_CASE("enumerate command") {
  std::ostringstream out, diag;
  auto d4 = labeled(fixtures::diamond(4));
  auto r = run_enumerate(d4, {}, out, diag);
  CHECK(r.code == ExitCode::completed);
  CHECK(lines(out.str()).size() == 16);
  CHECK(diag.str().empty());

  std::ostringstream out2, diag2;
  EnumerateOptions limited;
  limited.max_items = 1000;
  limited.stats = true;
  auto d30 = labeled(fixtures::diamond(30));
  auto r2 = run_enumerate(d30, limited, out2, diag2);
  CHECK(r2.code == ExitCode::truncated);
  CHECK(r2.stats.status == "truncated");
  const auto got = lines(out2.str());
  CHECK(got.size() == 1000);
  CHECK(out2.str().back() == '\n');
  for (const auto& l : got) CHECK(l.find('{') == std::string::npos);
  auto stats = nlohmann::json::parse(diag2.str());
  CHECK(stats["items_emitted"] == 1000);
  CHECK(stats["avg_period"].get<double>() == doctest::Approx(stats["elapsed"].get<double>() / 1000));

  std::ostringstream out3, diag3;
  EnumerateOptions cycles;
  cycles.target = EnumerationTarget::simple_cycles;
  CHECK(run_enumerate(d4, cycles, out3, diag3).code == ExitCode::completed);
  CHECK(out3.str().empty());

  std::ostringstream out4, diag4;
  EnumerateOptions nd;
  nd.format = OutputFormat::ndjson;
  run_enumerate(labeled(fixtures::g_loop()), nd, out4, diag4);
  for (const auto& l : lines(out4.str())) CHECK(nlohmann::json::parse(l).contains("path"));
}

TEST_CASE("enumerate honours the timeout") {
  std::ostringstream out, diag;
  EnumerateOptions options;
  options.timeout_secs = 0.2;
  auto r = run_enumerate(labeled(fixtures::diamond(30)), options, out, diag);
  CHECK(r.code == ExitCode::truncated);
  CHECK(r.stats.status == "timeout");
  CHECK(r.stats.elapsed < 2.0);
}

TEST_CASE("cover command") {
  auto loop = labeled(fixtures::g_loop());
  std::ostringstream out, diag;
  CoverOptions options;
  options.k = 10;
  options.verify = true;
  CHECK(run_cover(loop, options, out, diag).code == ExitCode::completed);
  CHECK(lines(out.str()).size() == 2);
  CHECK(diag.str().find("verify: ok") != std::string::npos);

  std::ostringstream out2, diag2;
  options.k = 1;
  CHECK(run_cover(labeled(fixtures::diamond(4)), options, out2, diag2).code == ExitCode::completed);
  CHECK(lines(out2.str()).size() == 16);

  std::ostringstream out3, diag3;
  options.criterion = Criterion::e_acyclic;
  CHECK(run_cover(parse_graph(chain_json), options, out3, diag3).code == ExitCode::completed);
  CHECK(out3.str() == "s,a,t\n");

  for (auto c : {Criterion::simple_cycle, Criterion::simple_path, Criterion::prime_path, Criterion::e_acyclic}) {
    std::ostringstream o, d;
    CoverOptions all;
    all.criterion = c;
    all.k = 2;
    all.verify = true;
    all.double_cycle = c == Criterion::simple_cycle;
    CHECK(run_cover(labeled(fixtures::g_ex()), all, o, d).code == ExitCode::completed);
    CHECK(d.str().find("verify: ok") != std::string::npos);
  }
}

TEST_CASE("cover rejects bad input") {
  std::ostringstream out, diag;
  CoverOptions options;
  options.k = 0;
  CHECK(run_cover(labeled(fixtures::g_loop()), options, out, diag).code == ExitCode::invalid_input);

  options.k = 1;
  options.double_cycle = true;
  CHECK(run_cover(labeled(fixtures::g_loop()), options, out, diag).code == ExitCode::invalid_input);

  options.double_cycle = false;
  CHECK(run_cover(labeled(fixtures::g_loop(), false), options, out, diag).code == ExitCode::not_sese);
  std::ostringstream d2;
  CHECK(run_cover(labeled(Digraph(4, {{0, 1}, {1, 3}, {2, 3}})), options, out, d2).code == ExitCode::not_sese);
  CHECK(d2.str().find("v2") != std::string::npos);
  CHECK(out.str().empty());
}

TEST_CASE("check command") {
  std::ostringstream out;
  CHECK(run_check(labeled(fixtures::g_ex()), out) == ExitCode::completed);
  CHECK(out.str().find("SESE: ok") != std::string::npos);
  std::ostringstream bad;
  CHECK(run_check(labeled(fixtures::g_ex(), false), bad) == ExitCode::not_sese);
}

TEST_CASE("bench command") {
  auto report = run_bench(fixtures::diamond(4), {});
  REQUIRE(report.runs.size() == 2);
  CHECK(report.runs[0].engine == "stream");
  CHECK(report.runs[1].engine == "ao-baseline");
  for (const auto& r : report.runs) {
    CHECK(r.completed());
    CHECK(r.items_emitted == 16);
    CHECK(r.avg_period == doctest::Approx(r.elapsed / 16));
  }
  auto doc = nlohmann::json::parse(report.to_json("d4", 13, 16));
  CHECK(doc["runs"].size() == 2);
  CHECK(report.table().find("ao-baseline") != std::string::npos);

  BenchOptions options;
  options.timeout_secs = 0.5;
  options.max_items = 10000;
  auto big = run_bench(fixtures::diamond(30), options);
  CHECK(big.runs[0].status == "truncated");
  CHECK(big.runs[0].items_emitted == 10000);
  CHECK(big.runs[1].status != "completed");

  auto preset = reference_preset(0.5);
  CHECK(preset.max_items == 10'000'000u);
  CHECK(*preset.timeout_secs == doctest::Approx(1800.0));
}
