#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "pathcov/circuit.hpp"
#include "pathcov/enumeration.hpp"
#include "pathcov/scc.hpp"
#include "pathcov/start_end_filter.hpp"
#include "support/graphs.hpp"

using namespace pathcov;
using fixtures::seq_set;

namespace {

std::vector<Path> drain(CircuitEnumerator& c) {
  std::vector<Path> out;
  while (auto p = c.next()) out.push_back(std::move(*p));
  return out;
}

std::vector<char> all_active(const Digraph& g) { return std::vector<char>(g.vertex_count(), 1); }

}  // namespace

TEST_CASE("filter golden: condition 3 without condition 5") {
  auto g = fixtures::g_3_not_5();
  auto part = scc_partition(g);
  CHECK(part.size() == 2);
  StartEndFilter f(g, part);
  CHECK(f.condition(3, 0));
  CHECK_FALSE(f.condition(5, 0));
  CHECK_FALSE(f.is_start(0));

  auto r = fixtures::reversed(g);
  StartEndFilter fr(r, scc_partition(r));
  CHECK(fr.condition(4, 0));
  CHECK_FALSE(fr.condition(6, 0));
  CHECK_FALSE(fr.is_end(0));
}

TEST_CASE("filter golden: condition 5 without condition 3") {
  auto g = fixtures::g_not_3_5();
  auto part = scc_partition(g);
  CHECK(part.size() == 1);
  StartEndFilter f(g, part);
  CHECK_FALSE(f.condition(3, 0));
  CHECK(f.condition(5, 0));
  CHECK_FALSE(f.is_start(0));

  auto r = fixtures::reversed(g);
  StartEndFilter fr(r, scc_partition(r));
  CHECK_FALSE(fr.condition(4, 0));
  CHECK(fr.condition(6, 0));
  CHECK_FALSE(fr.is_end(0));
}

TEST_CASE("source vertex of a DAG passes every start condition") {
  auto g = fixtures::diamond(2);
  StartEndFilter f(g, scc_partition(g));
  for (int i : {1, 3, 5, 7}) CHECK(f.condition(i, 0));
  CHECK(f.is_start(0));
  CHECK(f.is_end(6));
  CHECK(f.pair_ok(6, 0));
  CHECK_FALSE(f.pair_ok(0, 1));
}

TEST_CASE("filters never reject a prime path endpoint") {
  std::mt19937 rng(101);
  for (int round = 0; round < 150; ++round) {
    auto g = fixtures::random_digraph(rng, 2 + round % 7, 0.1 * (1 + round % 5));
    StartEndFilter f(g, scc_partition(g));
    for (const auto& p : oracle::non_extendable_simple_paths(oracle::adj_of(g))) {
      if (p.size() < 2) continue;
      CHECK(f.is_start(p.front()));
      CHECK(f.is_end(p.back()));
      CHECK(f.pair_ok(p.back(), p.front()));
    }
  }
}

TEST_CASE("extended graph shape") {
  auto g = fixtures::g_loop();
  StartEndFilter f(g, scc_partition(g));
  auto ex = extend_graph(g, f, 0);
  CHECK(ex.sentinel == 4);
  CHECK(ex.graph.vertex_count() == 5);
  CHECK(ex.graph.has_edge(4, 0));
  CHECK(ex.graph.out(4).size() == 1);
  for (auto e : g.edges()) CHECK(ex.graph.has_edge(e.from, e.to));
  for (Vertex u = 0; u < 4; ++u) {
    CHECK(ex.graph.has_edge(u, 4) == (f.is_end(u) && !g.has_edge(u, 0)));
  }

  auto ex_graph = fixtures::g_ex();
  StartEndFilter fx(ex_graph, scc_partition(ex_graph));
  for (Vertex v = 0; v < ex_graph.vertex_count(); ++v) {
    if (!fx.is_start(v)) CHECK_THROWS_AS(extend_graph(ex_graph, fx, v), InvalidGraph);
  }
}

TEST_CASE("cycles through the sentinel match simple paths to qualifying ends") {
  std::mt19937 rng(103);
  for (int round = 0; round < 120; ++round) {
    auto g = fixtures::random_digraph(rng, 2 + round % 6, 0.1 + 0.05 * (round % 7));
    StartEndFilter f(g, scc_partition(g));
    const auto paths = oracle::simple_paths(oracle::adj_of(g));
    for (auto v : f.starts()) {
      auto ex = extend_graph(g, f, v);
      CircuitEnumerator circuit(ex.graph, all_active(ex.graph), ex.sentinel);
      std::size_t cycles = 0;
      while (auto c = circuit.next()) {
        ++cycles;
        CHECK(c->head() == ex.sentinel);
        CHECK(c->last() == ex.sentinel);
      }
      std::size_t expected = 0;
      for (const auto& p : paths) {
        if (p.front() == v && f.is_end(p.back()) && !g.has_edge(p.back(), v)) ++expected;
      }
      CHECK(cycles == expected);
    }
  }
}

TEST_CASE("circuit examples") {
  Digraph tri(3, {{0, 1}, {1, 2}, {2, 0}});
  CircuitEnumerator c1(tri, all_active(tri), 0);
  CHECK(drain(c1) == std::vector<Path>{Path{0, 1, 2, 0}});
  CHECK(c1.done());

  Digraph two(2, {{0, 1}, {1, 0}});
  CircuitEnumerator c2(two, all_active(two), 0);
  CHECK(drain(c2) == std::vector<Path>{Path{0, 1, 0}});

  auto ex = fixtures::g_ex();
  auto part = scc_partition(ex);
  std::vector<char> mask(ex.vertex_count(), 0);
  for (auto v : part.classes[part.class_of[2]]) mask[v] = 1;
  CircuitEnumerator c3(ex, mask, 2);
  CHECK(drain(c3) == std::vector<Path>{Path{2, 11, 3, 2}});
}

TEST_CASE("circuit keeps the stack blocked and simple") {
  auto g = fixtures::complete(5);
  CircuitEnumerator c(g, all_active(g), 0);
  std::size_t count = 0;
  while (auto p = c.next()) {
    ++count;
    auto s = c.stack();
    CHECK(is_simple(s));
    for (auto v : s) CHECK(c.is_blocked(v));
    CHECK(p->head() == 0);
  }
  // cycles of K5 through a fixed vertex
  CHECK(count == 4 + 12 + 24 + 24);
  CHECK(c.peak_depth() <= 5);
}

TEST_CASE("simple cycles on named graphs") {
  CHECK(collect(*simple_cycles(fixtures::diamond(4))).empty());
  CHECK(collect(*simple_cycles(fixtures::g_loop())) == std::vector<Path>{Path{1, 2, 1}});
  CHECK(collect(*simple_cycles(Digraph(2, {{0, 0}, {1, 1}}))) == std::vector<Path>{Path{0, 0}, Path{1, 1}});
}

TEST_CASE("simple cycle counts on complete digraphs") {
  const std::size_t frozen[] = {0, 0, 1, 5, 20, 84, 409};
  for (std::size_t n = 2; n <= 6; ++n) {
    auto g = fixtures::complete(n);
    CHECK(collect(*simple_cycles(g)).size() == frozen[n]);
  }
}

TEST_CASE("simple cycles equal the exhaustive canonical set") {
  std::mt19937 rng(107);
  for (int round = 0; round < 200; ++round) {
    auto g = fixtures::random_digraph(rng, 1 + round % 8, 0.1 * (1 + round % 5));
    auto got = collect(*simple_cycles(g));
    auto set = seq_set(got);
    CHECK(set.size() == got.size());
    CHECK(set == oracle::canonical_cycles(oracle::adj_of(g)));
  }
}

TEST_CASE("is_non_extendable") {
  auto ex = fixtures::g_ex();
  CHECK(is_non_extendable(ex, Path{2, 11, 3, 10, 14}));
  auto loop = fixtures::g_loop();
  CHECK(is_non_extendable(loop, Path{0, 1, 2, 3}));
  CHECK_FALSE(is_non_extendable(loop, Path{1, 2, 3}));
  CHECK_THROWS_AS(is_non_extendable(loop, Path{1, 2, 1}), InvalidGraph);
  CHECK(is_non_extendable(Digraph(1), Path{0}));
}

TEST_CASE("non-extendable simple paths on named graphs") {
  CHECK(collect(*non_extendable_simple_paths(fixtures::diamond(1))) ==
        std::vector<Path>{Path{0, 1, 3}, Path{0, 2, 3}});
  CHECK(collect(*non_extendable_simple_paths(fixtures::g_loop())) == std::vector<Path>{Path{0, 1, 2, 3}});
  Digraph pp2(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}});
  CHECK(seq_set(collect(*non_extendable_simple_paths(pp2))) == oracle::SeqSet{{0, 1, 2}, {2, 1, 0}});
  CHECK(collect(*non_extendable_simple_paths(Digraph(3))) == std::vector<Path>{Path{0}, Path{1}, Path{2}});
}

TEST_CASE("non-extendable simple paths equal the exhaustive set") {
  std::mt19937 rng(109);
  for (int round = 0; round < 200; ++round) {
    auto g = fixtures::random_digraph(rng, 1 + round % 8, 0.1 * (1 + round % 5));
    auto got = collect(*non_extendable_simple_paths(g));
    auto set = seq_set(got);
    CHECK(set.size() == got.size());
    CHECK(set == oracle::non_extendable_simple_paths(oracle::adj_of(g)));
  }
}

TEST_CASE("prime paths on named graphs") {
  CHECK(collect(*prime_paths(fixtures::diamond(4))).size() == 16);
  CHECK(seq_set(collect(*prime_paths(fixtures::g_loop()))) == oracle::SeqSet{{1, 2, 1}, {2, 1, 2}, {0, 1, 2, 3}});
  CHECK(collect(*prime_paths(Digraph(3, {{0, 1}, {1, 2}}))) == std::vector<Path>{Path{0, 1, 2}});
}

TEST_CASE("prime paths list rotations first, then open paths") {
  auto got = collect(*prime_paths(fixtures::g_ex()));
  bool open_seen = false;
  for (const auto& p : got) {
    if (is_simple_cycle(p.vertices())) {
      CHECK_FALSE(open_seen);
    } else {
      open_seen = true;
    }
  }
  CHECK(seq_set(got) == oracle::prime_paths(oracle::adj_of(fixtures::g_ex())));
}

TEST_CASE("streams report bounded retained paths and steps") {
  auto g = fixtures::diamond(12);
  auto s = prime_paths(g);
  std::size_t n = 0;
  while (s->next()) ++n;
  CHECK(n == 4096);
  CHECK(s->peak_retained_paths() <= g.vertex_count() + 2);
  CHECK(s->memory_bytes() > 0);
  CHECK(s->steps() > 0);
  CHECK_FALSE(s->next().has_value());
}

TEST_CASE("streaming work grows with requested items, not with the total") {
  auto g = fixtures::diamond(30);
  const auto m = g.edge_count(), nv = g.vertex_count();
  for (std::size_t want : {1u, 10u, 100u, 1000u}) {
    auto s = prime_paths(g);
    for (std::size_t i = 0; i < want; ++i) REQUIRE(s->next().has_value());
    CHECK(s->steps() <= 4 * (want + 1) * (m + nv));
  }
}
