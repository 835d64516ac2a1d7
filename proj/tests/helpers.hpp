// Shared test utilities: independent dense-matrix oracles for the joint
// chain and random instance generators. Everything here is deliberately
// written against the raw transition rule rather than the library's sparse
// builder, so the two paths can check each other.
#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "bcast/graph.hpp"
#include "bcast/rng.hpp"
#include "bcast/state.hpp"

namespace testutil {

inline double binomial(int n, int k) {
  double v = 1.0;
  for (int i = 1; i <= k; ++i)
    v *= static_cast<double>(n - k + i) / static_cast<double>(i);
  return v;
}

/// Simplex-distributed in-edge rates with per-node budget mu.
inline bcast::RateMatrix random_budget_rates(const bcast::Topology& t,
                                             double mu, bcast::Rng& rng) {
  bcast::RateMatrix r = bcast::zero_rates(t);
  for (auto& row : r.w) {
    if (row.empty()) continue;
    double total = 0.0;
    for (double& w : row) {
      w = 0.05 + rng.uniform();
      total += w;
    }
    for (double& w : row) w *= mu / total;
  }
  return r;
}

/// Dense generator built directly from the transition rule: from state s,
/// node m (bit clear) flips at the sum of rates over informed in-neighbors.
inline std::vector<std::vector<double>> dense_generator(
    const bcast::Topology& t, const bcast::RateMatrix& r) {
  const std::size_t states = std::size_t{1} << t.n;
  std::vector<std::vector<double>> q(states, std::vector<double>(states, 0.0));
  for (std::size_t s = 0; s < states; ++s) {
    for (int m = 0; m < t.n; ++m) {
      if (s & (std::size_t{1} << m)) continue;
      double lambda = 0.0;
      const auto& nbrs = t.in_neighbors[static_cast<std::size_t>(m)];
      for (std::size_t k = 0; k < nbrs.size(); ++k) {
        if (s & (std::size_t{1} << nbrs[k]))
          lambda += r.w[static_cast<std::size_t>(m)][k];
      }
      if (lambda > 0.0) {
        q[s][s | (std::size_t{1} << m)] += lambda;
        q[s][s] -= lambda;
      }
    }
  }
  return q;
}

/// High-resolution RK4 integration of dv'/dt = v'Q, independent of the
/// library's uniformization path.
inline std::vector<double> dense_propagate(
    const std::vector<double>& v0, const std::vector<std::vector<double>>& q,
    double dt, int steps = 4000) {
  const std::size_t states = v0.size();
  std::vector<double> v = v0;
  const double h = dt / steps;
  auto rhs = [&](const std::vector<double>& u) {
    std::vector<double> d(states, 0.0);
    for (std::size_t i = 0; i < states; ++i) {
      if (u[i] == 0.0) continue;
      for (std::size_t j = 0; j < states; ++j) {
        if (q[i][j] != 0.0) d[j] += u[i] * q[i][j];
      }
    }
    return d;
  };
  for (int s = 0; s < steps; ++s) {
    auto k1 = rhs(v);
    std::vector<double> tmp(states);
    for (std::size_t i = 0; i < states; ++i) tmp[i] = v[i] + h / 2 * k1[i];
    auto k2 = rhs(tmp);
    for (std::size_t i = 0; i < states; ++i) tmp[i] = v[i] + h / 2 * k2[i];
    auto k3 = rhs(tmp);
    for (std::size_t i = 0; i < states; ++i) tmp[i] = v[i] + h * k3[i];
    auto k4 = rhs(tmp);
    for (std::size_t i = 0; i < states; ++i)
      v[i] += h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
  }
  return v;
}

/// Reachability oracle via transitive closure (Floyd-Warshall style).
inline bool spanning_oracle(const bcast::Topology& t, int root) {
  const int n = t.n;
  std::vector<std::vector<char>> reach(
      static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) {
    reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    for (int j : t.out_neighbors[static_cast<std::size_t>(i)])
      reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = 1;
  for (int j = 0; j < n; ++j)
    if (!reach[static_cast<std::size_t>(root)][static_cast<std::size_t>(j)])
      return false;
  return true;
}

/// Random single-seed state over n nodes.
inline bcast::NetworkState random_seed_state(int n, bcast::Rng& rng) {
  return bcast::NetworkState::single_seed(
      n, static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
}

}  // namespace testutil
