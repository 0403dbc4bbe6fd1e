#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>
#include <random>

#include "pathcov/baseline.hpp"
#include "pathcov/characterization.hpp"
#include "pathcov/enumeration.hpp"
#include "pathcov/scc.hpp"
#include "support/graphs.hpp"

using namespace pathcov;
using fixtures::seq_set;

TEST_CASE("baseline on named graphs") {
  CHECK(baseline_prime_paths(fixtures::diamond(4)).size() == 16);
  CHECK(seq_set(baseline_prime_paths(fixtures::g_loop())) == oracle::SeqSet{{1, 2, 1}, {2, 1, 2}, {0, 1, 2, 3}});
  CHECK(seq_set(baseline_prime_paths(Digraph(4))) == oracle::SeqSet{{0}, {1}, {2}, {3}});
  CHECK(baseline_prime_paths(Digraph(0)).empty());
  CHECK(seq_set(baseline_prime_paths(Digraph(1, {{0, 0}}))) == oracle::SeqSet{{0, 0}});
}

TEST_CASE("baseline equals the exhaustive prime path set") {
  std::mt19937 rng(211);
  for (int round = 0; round < 200; ++round) {
    auto g = fixtures::random_digraph(rng, 1 + round % 8, 0.1 * (1 + round % 5));
    auto got = baseline_prime_paths(g);
    auto set = seq_set(got);
    CHECK(set.size() == got.size());
    CHECK(set == oracle::prime_paths(oracle::adj_of(g)));
  }
}

TEST_CASE("baseline honours the deadline") {
  BaselineLimits limits;
  limits.deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(50);
  const auto t0 = std::chrono::steady_clock::now();
  auto r = baseline_prime_paths(fixtures::diamond(30), limits);
  const auto waited = std::chrono::steady_clock::now() - t0;
  CHECK(r.status == BaselineStatus::timed_out);
  CHECK(waited < std::chrono::seconds(2));
  CHECK(std::string(to_string(r.status)) == "timeout");
}

TEST_CASE("baseline honours the cell budget") {
  BaselineLimits limits;
  limits.max_cells = 1000;
  auto r = baseline_prime_paths(fixtures::diamond(12), limits);
  CHECK(r.status == BaselineStatus::budget_exceeded);
  CHECK(r.paths.empty());

  limits.max_cells = 0;
  auto full = baseline_prime_paths(fixtures::diamond(6), limits);
  CHECK(full.status == BaselineStatus::completed);
  CHECK(full.paths.size() == 64);
  CHECK(full.peak_cells > 0);
  CHECK(full.peak_paths >= 64);
}

TEST_CASE("characterization cases on the example graph") {
  auto g = fixtures::g_ex();
  auto part = scc_partition(g);
  CHECK(prime_case(g, part, Path{11, 3, 2, 11}) == PrimeCase::cycle);
  CHECK(prime_case(g, part, Path{2, 11, 3, 10, 14}) == PrimeCase::across_components);
  // (v5, v9) closes a cycle, so this path is extendable
  CHECK(prime_case(g, part, Path{9, 6, 5}) == PrimeCase::none);
  CHECK(prime_case(g, part, Path{0, 1}) == PrimeCase::none);
  CHECK(prime_case_count(g, part, Path{11, 3, 2, 11}) == 1);

  Digraph pp2(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}});
  CHECK(prime_case(pp2, scc_partition(pp2), Path{0, 1, 2}) == PrimeCase::within_component);
}

TEST_CASE("characterization agrees with the definition on every simple path") {
  std::mt19937 rng(223);
  for (int round = 0; round < 150; ++round) {
    auto g = fixtures::random_digraph(rng, 1 + round % 7, 0.1 * (1 + round % 5));
    auto part = scc_partition(g);
    const auto a = oracle::adj_of(g);
    const auto primes = oracle::prime_paths(a);
    auto pool = oracle::simple_paths(a);
    for (const auto& c : oracle::simple_cycles_all_rotations(a)) pool.insert(c);
    for (const auto& p : pool) {
      const int hits = prime_case_count(g, part, Path(p));
      CHECK(hits <= 1);
      CHECK((prime_case(g, part, Path(p)) != PrimeCase::none) == (primes.count(p) > 0));
    }
  }
}

TEST_CASE("every emitted prime path satisfies exactly one case") {
  std::mt19937 rng(227);
  for (int round = 0; round < 100; ++round) {
    auto g = fixtures::random_digraph(rng, 2 + round % 8, 0.1 * (1 + round % 5));
    auto part = scc_partition(g);
    for (const auto& p : collect(*prime_paths(g))) CHECK(prime_case_count(g, part, p) == 1);
  }
}
