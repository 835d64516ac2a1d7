#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bcast/exact_ctmc.hpp"
#include "bcast/graph.hpp"
#include "bcast/rng.hpp"
#include "helpers.hpp"

using namespace bcast;

namespace {

constexpr double kOneMinusExpMinus1 = 0.63212055882855768;

// Dense view of a sparse generator row for comparisons.
std::vector<double> dense_row(const Generator& g, std::size_t s) {
  std::vector<double> row(g.num_states(), 0.0);
  row[s] = -g.exit_rate[s];
  for (std::uint64_t e = g.row_offset[s]; e < g.row_offset[s + 1]; ++e)
    row[g.target[e]] += g.rate[e];
  return row;
}

}  // namespace

TEST_CASE("two-node single-edge generator matches the hand enumeration") {
  Topology t = make_topology(2, {{0, 1}});
  RateMatrix r = uniform_rates(t, 0.7);  // single in-edge gets the budget
  Generator g = build_generator(t, r);
  REQUIRE(g.num_states() == 4);
  // state {0} = 0b01 jumps to {0,1} = 0b11 at rate 0.7
  auto row = dense_row(g, 1);
  CHECK(row[3] == doctest::Approx(0.7));
  CHECK(row[1] == doctest::Approx(-0.7));
  // states {} and {1} are absorbing
  CHECK(g.exit_rate[0] == 0.0);
  CHECK(g.exit_rate[2] == 0.0);
}

TEST_CASE("no edges gives the zero generator") {
  Topology t = make_topology(3, {});
  Generator g = build_generator(t, zero_rates(t));
  CHECK(g.rate.empty());
  for (double e : g.exit_rate) CHECK(e == 0.0);
}

TEST_CASE("complete 3-node digraph from a single informed node") {
  Topology t = make_topology(3, {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}});
  RateMatrix r = zero_rates(t);
  for (auto& row : r.w) std::fill(row.begin(), row.end(), 1.0);
  Generator g = build_generator(t, r);
  auto row = dense_row(g, 0b001);  // only node 0 informed
  CHECK(row[0b011] == doctest::Approx(1.0));
  CHECK(row[0b101] == doctest::Approx(1.0));
  CHECK(row[0b001] == doctest::Approx(-2.0));
}

TEST_CASE("generator agrees with the dense oracle on random instances") {
  for (int s = 0; s < 20; ++s) {
    Rng rng(500 + s);
    int n = 2 + s % 4;
    Topology t = generate_erdos_renyi(n, 0.5, 700 + s);
    RateMatrix r = testutil::random_budget_rates(t, 1.3, rng);
    Generator g = build_generator(t, r);
    auto dense = testutil::dense_generator(t, r);
    for (std::size_t row = 0; row < g.num_states(); ++row) {
      auto sparse_row = dense_row(g, row);
      double row_sum = 0.0;
      for (std::size_t col = 0; col < sparse_row.size(); ++col) {
        CHECK(sparse_row[col] == doctest::Approx(dense[row][col]).epsilon(1e-12));
        row_sum += sparse_row[col];
        if (col != row) {
          CHECK(sparse_row[col] >= 0.0);
          if (sparse_row[col] > 0.0) {
            // upward transitions only: exactly one extra bit
            auto diff = col ^ row;
            CHECK((diff & (diff - 1)) == 0);
            CHECK((col & row) == row);
          }
        }
      }
      CHECK(std::abs(row_sum) <= 1e-12);
    }
  }
}

TEST_CASE("generator rejects networks beyond the cap") {
  Topology t = make_topology(21, {});
  CHECK_THROWS_AS(build_generator(t, zero_rates(t)), std::invalid_argument);
  CHECK_NOTHROW(build_generator(t, zero_rates(t), 22));
}

TEST_CASE("propagate with dt=0 is the identity") {
  Topology t = make_topology(2, {{0, 1}});
  Generator g = build_generator(t, uniform_rates(t, 1.0));
  JointDistribution d = JointDistribution::point_mass(2, 1);
  JointDistribution out = propagate(d, g, 0.0);
  CHECK(out.v == d.v);
}

TEST_CASE("two-state chain closed form at dt=1") {
  Topology t = make_topology(2, {{0, 1}});
  Generator g = build_generator(t, uniform_rates(t, 1.0));
  JointDistribution d = propagate(JointDistribution::point_mass(2, 0b01), g, 1.0);
  CHECK(d.v[0b01] == doctest::Approx(1.0 - kOneMinusExpMinus1).epsilon(1e-9));
  CHECK(d.v[0b11] == doctest::Approx(kOneMinusExpMinus1).epsilon(1e-9));
  CHECK(marginal_informed(d, 1) == doctest::Approx(kOneMinusExpMinus1).epsilon(1e-9));
}

TEST_CASE("all-informed state is absorbing") {
  Topology t = generate_erdos_renyi(4, 0.6, 9);
  Generator g = build_generator(t, uniform_rates(t, 2.0));
  auto all = static_cast<std::uint32_t>((1u << 4) - 1);
  JointDistribution d = propagate(JointDistribution::point_mass(4, all), g, 3.0);
  CHECK(d.v[all] == doctest::Approx(1.0));
  for (int i = 0; i < 4; ++i) CHECK(marginal_informed(d, i) == doctest::Approx(1.0));
}

TEST_CASE("marginals of degenerate distributions") {
  JointDistribution empty = JointDistribution::point_mass(3, 0);
  for (int i = 0; i < 3; ++i) CHECK(marginal_informed(empty, i) == 0.0);
  JointDistribution full = JointDistribution::point_mass(3, 0b111);
  for (int i = 0; i < 3; ++i) CHECK(marginal_informed(full, i) == 1.0);
}

TEST_CASE("uniformization agrees with dense RK4 to 1e-8") {
  for (int s = 0; s < 12; ++s) {
    Rng rng(41 + s);
    int n = 2 + s % 4;  // up to 5 nodes
    Topology t = generate_erdos_renyi(n, 0.5, 910 + s);
    RateMatrix r = testutil::random_budget_rates(t, 2.0, rng);
    Generator g = build_generator(t, r);
    auto x0 = static_cast<std::uint32_t>(rng.below(1u << n));
    JointDistribution d0 = JointDistribution::point_mass(n, x0);
    for (double dt : {0.3, 1.0, 2.5}) {
      JointDistribution fast = propagate(d0, g, dt);
      auto slow = testutil::dense_propagate(d0.v, testutil::dense_generator(t, r), dt);
      double err = 0.0;
      for (std::size_t i = 0; i < slow.size(); ++i)
        err = std::max(err, std::abs(fast.v[i] - slow[i]));
      CHECK(err <= 1e-8);
      double sum = 0.0;
      for (double v : fast.v) sum += v;
      CHECK(std::abs(sum - 1.0) <= 1e-9);
    }
  }
}

TEST_CASE("predict_marginals trivial cases") {
  Topology t = generate_erdos_renyi(5, 0.5, 77);
  RateMatrix r = uniform_rates(t, 2.0);
  NetworkState all{std::vector<std::uint8_t>(5, 1)};
  for (double p : predict_marginals(all, t, r, 4.0)) CHECK(p == 1.0);

  NetworkState x = NetworkState::single_seed(5, 2);
  auto now = predict_marginals(x, t, r, 0.0);
  for (int i = 0; i < 5; ++i)
    CHECK(now[static_cast<std::size_t>(i)] == doctest::Approx(x.informed(i) ? 1.0 : 0.0));
}

TEST_CASE("conditioned chain equals full-space propagation") {
  for (int s = 0; s < 10; ++s) {
    Rng rng(1300 + s);
    int n = 3 + s % 3;
    Topology t = generate_erdos_renyi(n, 0.5, 210 + s);
    RateMatrix r = testutil::random_budget_rates(t, 1.5, rng);
    NetworkState x = testutil::random_seed_state(n, rng);
    const double dt = 0.8;
    auto fast = predict_marginals(x, t, r, dt);
    Generator g = build_generator(t, r);
    JointDistribution d = propagate(JointDistribution::point_mass(n, x.mask()), g, dt);
    for (int i = 0; i < n; ++i)
      CHECK(fast[static_cast<std::size_t>(i)] ==
            doctest::Approx(marginal_informed(d, i)).epsilon(1e-10));
  }
}

TEST_CASE("marginals never shrink under propagation from a point mass") {
  Rng rng(4242);
  Topology t = generate_erdos_renyi(5, 0.4, 33);
  RateMatrix r = testutil::random_budget_rates(t, 2.0, rng);
  NetworkState x = NetworkState::single_seed(5, 0);
  std::vector<double> prev(5, 0.0);
  for (double dt : {0.0, 0.25, 0.5, 1.0, 2.0, 4.0}) {
    auto p = predict_marginals(x, t, r, dt);
    for (int i = 0; i < 5; ++i) {
      CHECK(p[static_cast<std::size_t>(i)] >= prev[static_cast<std::size_t>(i)] - 1e-9);
      prev[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i)];
    }
  }
}
