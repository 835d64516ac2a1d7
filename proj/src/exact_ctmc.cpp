#include "bcast/exact_ctmc.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace bcast {

JointDistribution JointDistribution::point_mass(int n, std::uint32_t state) {
  JointDistribution d;
  d.n = n;
  d.v.assign(std::size_t{1} << n, 0.0);
  d.v[state] = 1.0;
  return d;
}

double Generator::max_exit_rate() const {
  double m = 0.0;
  for (double e : exit_rate) m = std::max(m, e);
  return m;
}

namespace {

Generator build_impl(const Topology& t, const RateMatrix& r,
                     std::uint32_t informed_mask, int cap) {
  if (t.n > cap)
    throw std::invalid_argument(
        "exact chain: n exceeds the state-space cap (" + std::to_string(cap) +
        ")");
  if (static_cast<int>(r.w.size()) != t.n)
    throw std::invalid_argument("exact chain: rate matrix shape mismatch");

  Generator g;
  g.informed_mask = informed_mask;
  for (int i = 0; i < t.n; ++i) {
    if (!(informed_mask & (1u << i))) g.free_nodes.push_back(i);
  }
  g.num_free = static_cast<int>(g.free_nodes.size());
  const std::size_t num_states = std::size_t{1} << g.num_free;

  // Bit position of each free node within a row index; -1 for fixed nodes.
  std::vector<int> bit_of(static_cast<std::size_t>(t.n), -1);
  for (int k = 0; k < g.num_free; ++k)
    bit_of[static_cast<std::size_t>(g.free_nodes[k])] = k;

  g.row_offset.assign(num_states + 1, 0);
  g.exit_rate.assign(num_states, 0.0);

  // Two passes: count transitions per row, then fill.
  std::vector<std::uint32_t> targets;
  std::vector<double> rates;
  for (std::size_t s = 0; s < num_states; ++s) {
    double exit = 0.0;
    for (int k = 0; k < g.num_free; ++k) {
      if (s & (std::size_t{1} << k)) continue;  // already informed
      int m = g.free_nodes[k];
      const auto& nbrs = t.in_neighbors[static_cast<std::size_t>(m)];
      const auto& ws = r.w[static_cast<std::size_t>(m)];
      double lambda = 0.0;
      for (std::size_t e = 0; e < nbrs.size(); ++e) {
        int j = nbrs[e];
        bool informed = (informed_mask & (1u << j)) ||
                        (bit_of[static_cast<std::size_t>(j)] >= 0 &&
                         (s & (std::size_t{1}
                               << bit_of[static_cast<std::size_t>(j)])));
        if (informed) lambda += ws[e];
      }
      if (lambda > 0.0) {
        targets.push_back(static_cast<std::uint32_t>(s | (std::size_t{1} << k)));
        rates.push_back(lambda);
        exit += lambda;
      }
    }
    g.exit_rate[s] = exit;
    g.row_offset[s + 1] = targets.size();
  }
  g.target = std::move(targets);
  g.rate = std::move(rates);
  return g;
}

}  // namespace

Generator build_generator(const Topology& t, const RateMatrix& r, int cap) {
  return build_impl(t, r, 0u, cap);
}

Generator build_generator_conditioned(const Topology& t, const RateMatrix& r,
                                      std::uint32_t informed_mask, int cap) {
  return build_impl(t, r, informed_mask, cap);
}

JointDistribution propagate(const JointDistribution& d, const Generator& g,
                            double dt) {
  if (dt < 0.0) throw std::invalid_argument("propagate: dt must be >= 0");
  if (d.v.size() != g.num_states())
    throw std::invalid_argument("propagate: distribution/generator mismatch");

  const double lambda = g.max_exit_rate();
  JointDistribution out = d;
  if (dt == 0.0 || lambda == 0.0) return out;

  // Uniformization in chunks: eta per chunk kept moderate so the Poisson
  // weights stay well inside double range.
  const double kMaxEta = 200.0;
  int chunks = static_cast<int>(std::ceil(lambda * dt / kMaxEta));
  chunks = std::max(chunks, 1);
  const double step = dt / chunks;
  const double eta = lambda * step;
  const double tail_tol = 1e-12;

  std::vector<double> cur(out.v.size());
  std::vector<double> next(out.v.size());
  std::vector<double> acc(out.v.size());

  for (int c = 0; c < chunks; ++c) {
    cur = out.v;
    std::fill(acc.begin(), acc.end(), 0.0);
    double weight = std::exp(-eta);
    double cum = weight;
    for (std::size_t s = 0; s < cur.size(); ++s) acc[s] = weight * cur[s];

    const std::size_t max_terms =
        static_cast<std::size_t>(eta + 10.0 * std::sqrt(eta + 1.0) + 50.0);
    for (std::size_t k = 1; k <= max_terms; ++k) {
      // next = cur * P, with P = I + Q/lambda.
      std::fill(next.begin(), next.end(), 0.0);
      for (std::size_t s = 0; s < cur.size(); ++s) {
        double mass = cur[s];
        if (mass == 0.0) continue;
        next[s] += mass * (1.0 - g.exit_rate[s] / lambda);
        for (std::uint64_t e = g.row_offset[s]; e < g.row_offset[s + 1]; ++e) {
          next[g.target[e]] += mass * (g.rate[e] / lambda);
        }
      }
      cur.swap(next);
      weight *= eta / static_cast<double>(k);
      cum += weight;
      for (std::size_t s = 0; s < cur.size(); ++s) acc[s] += weight * cur[s];
      if (1.0 - cum <= tail_tol && static_cast<double>(k) >= eta) break;
    }
    out.v = acc;
  }

  double total = std::accumulate(out.v.begin(), out.v.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-6)
    throw std::runtime_error("propagate: probability mass drifted beyond 1e-6");
  for (double& p : out.v) p /= total;
  return out;
}

double marginal_informed(const JointDistribution& d, int i) {
  if (i < 0 || i >= d.n)
    throw std::invalid_argument("marginal_informed: node out of range");
  double p = 0.0;
  const std::size_t bit = std::size_t{1} << i;
  for (std::size_t s = 0; s < d.v.size(); ++s) {
    if (s & bit) p += d.v[s];
  }
  return p;
}

std::vector<double> predict_marginals(const NetworkState& x, const Topology& t,
                                      const RateMatrix& r, double dt, int cap) {
  if (x.n() != t.n)
    throw std::invalid_argument("predict_marginals: state size mismatch");
  std::vector<double> p(static_cast<std::size_t>(t.n), 1.0);
  if (x.all_informed()) return p;

  Generator g = build_generator_conditioned(t, r, x.mask(), cap);
  JointDistribution d0;
  d0.n = g.num_free;
  d0.v.assign(g.num_states(), 0.0);
  d0.v[0] = 1.0;
  JointDistribution d = propagate(d0, g, dt);

  for (int k = 0; k < g.num_free; ++k) {
    double pk = 0.0;
    const std::size_t bit = std::size_t{1} << k;
    for (std::size_t s = 0; s < d.v.size(); ++s) {
      if (s & bit) pk += d.v[s];
    }
    p[static_cast<std::size_t>(g.free_nodes[k])] = pk;
  }
  return p;
}

}  // namespace bcast
