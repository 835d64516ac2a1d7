#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "bcast/graph.hpp"
#include "bcast/rng.hpp"
#include "helpers.hpp"

using namespace bcast;

namespace {

Topology chain3() { return make_topology(3, {{0, 1}, {1, 2}}); }

Topology complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (i != j) edges.emplace_back(j, i);
  return make_topology(n, edges);
}

}  // namespace

TEST_CASE("erdos renyi degenerate probabilities") {
  CHECK(generate_erdos_renyi(3, 0.0, 7).edge_count() == 0);
  CHECK(generate_erdos_renyi(3, 1.0, 7).edge_count() == 6);
}

TEST_CASE("erdos renyi is deterministic under a fixed seed") {
  Topology a = generate_erdos_renyi(15, 0.3, 42);
  Topology b = generate_erdos_renyi(15, 0.3, 42);
  CHECK(a.in_neighbors == b.in_neighbors);
  Topology c = generate_erdos_renyi(15, 0.3, 43);
  CHECK(a.in_neighbors != c.in_neighbors);  // overwhelmingly likely
}

TEST_CASE("erdos renyi edge count matches p n (n-1) within 3 SE") {
  const int n = 15;
  const double p = 0.3;
  const int samples = 200;
  double total = 0.0;
  for (int s = 0; s < samples; ++s)
    total += static_cast<double>(generate_erdos_renyi(n, p, 1000 + s).edge_count());
  const double mean = total / samples;
  const double expect = p * n * (n - 1);
  const double se = std::sqrt(n * (n - 1) * p * (1 - p) / samples);
  CHECK(std::abs(mean - expect) <= 3.0 * se);
}

TEST_CASE("no self loops ever") {
  Topology t = generate_erdos_renyi(10, 0.8, 5);
  for (int i = 0; i < t.n; ++i) CHECK_FALSE(t.has_edge(i, i));
}

TEST_CASE("spanning tree on chains and complete graphs") {
  Topology t = chain3();
  CHECK(has_spanning_tree(t, 0));
  CHECK_FALSE(has_spanning_tree(t, 2));
  Topology k4 = complete(4);
  for (int v = 0; v < 4; ++v) CHECK(has_spanning_tree(k4, v));
}

TEST_CASE("spanning tree agrees with transitive-closure oracle") {
  // Exhaustive over all 64 labelled digraphs on 3 nodes.
  const std::pair<int, int> pairs[6] = {{0, 1}, {0, 2}, {1, 0},
                                        {1, 2}, {2, 0}, {2, 1}};
  for (int mask = 0; mask < 64; ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (int b = 0; b < 6; ++b)
      if (mask & (1 << b)) edges.push_back(pairs[b]);
    Topology t = make_topology(3, edges);
    for (int root = 0; root < 3; ++root)
      CHECK(has_spanning_tree(t, root) == testutil::spanning_oracle(t, root));
  }
  // Random digraphs up to n = 6.
  for (int s = 0; s < 150; ++s) {
    int n = 4 + s % 3;
    Topology t = generate_erdos_renyi(n, 0.25, 9000 + s);
    for (int root = 0; root < n; ++root)
      CHECK(has_spanning_tree(t, root) == testutil::spanning_oracle(t, root));
  }
}

TEST_CASE("in_neighbors examples") {
  Topology t = chain3();
  CHECK(in_neighbors(t, 1) == std::vector<int>{0});
  CHECK(in_neighbors(t, 0).empty());
  CHECK(in_neighbors(complete(3), 2) == std::vector<int>{0, 1});
}

TEST_CASE("topology validation") {
  CHECK_THROWS_AS(make_topology(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(make_topology(2, {{0, 1}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(make_topology(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(generate_erdos_renyi(3, 1.5, 0), std::invalid_argument);
}

TEST_CASE("rate matrix accessors and uniform split") {
  Topology t = chain3();
  RateMatrix r = uniform_rates(t, 2.0);
  CHECK(r.rate(t, 0, 1) == doctest::Approx(2.0));
  CHECK(r.rate(t, 1, 2) == doctest::Approx(2.0));
  CHECK(r.rate(t, 2, 0) == 0.0);
  RateMatrix z = zero_rates(t);
  CHECK(z.rate(t, 0, 1) == 0.0);
}

TEST_CASE("edge list round-trips topology and rates") {
  Rng rng(11);
  Topology t = generate_erdos_renyi(8, 0.4, 3);
  RateMatrix r = testutil::random_budget_rates(t, 1.7, rng);
  std::stringstream ss;
  write_edge_list(ss, t, r);
  WeightedGraph g = read_edge_list(ss);
  CHECK(g.topology.n == t.n);
  CHECK(g.topology.in_neighbors == t.in_neighbors);
  CHECK(g.topology.out_neighbors == t.out_neighbors);
  REQUIRE(g.rates.w.size() == r.w.size());
  for (std::size_t i = 0; i < r.w.size(); ++i) {
    REQUIRE(g.rates.w[i].size() == r.w[i].size());
    for (std::size_t k = 0; k < r.w[i].size(); ++k)
      CHECK(g.rates.w[i][k] == r.w[i][k]);  // exact round-trip
  }
}

TEST_CASE("edge list rejects malformed input") {
  std::stringstream empty("");
  CHECK_THROWS(read_edge_list(empty));
  std::stringstream bad("3\n0 0 1.0\n");
  CHECK_THROWS(read_edge_list(bad));
  std::stringstream negative("2\n0 1 -2.0\n");
  CHECK_THROWS(read_edge_list(negative));
}
