#pragma once

#include <cstdint>
#include <vector>

#include "bcast/graph.hpp"
#include "bcast/state.hpp"

namespace bcast {

inline constexpr int kDefaultExactCap = 20;

/// Probability vector over joint network states. State index s encodes
/// "node k informed" as bit k of s; entries sum to 1.
struct JointDistribution {
  int n = 0;
  std::vector<double> v;

  static JointDistribution point_mass(int n, std::uint32_t state);
};

/// Sparse infinitesimal generator of the joint chain, stored CSR-style.
/// Rows hold only the upward transitions (one extra informed node per
/// jump); exit_rate[s] is the negated diagonal. Generators conditioned on
/// an already-informed set enumerate only the remaining free nodes:
/// bit k of a row index corresponds to free_nodes[k].
struct Generator {
  int num_free = 0;                  // state space is 2^num_free
  std::vector<int> free_nodes;       // bit position -> node id
  std::uint32_t informed_mask = 0;   // nodes informed in every state
  std::vector<std::uint64_t> row_offset;
  std::vector<std::uint32_t> target;
  std::vector<double> rate;
  std::vector<double> exit_rate;

  std::size_t num_states() const { return std::size_t{1} << num_free; }
  double max_exit_rate() const;
};

/// Full joint-chain generator over all 2^n states. Rejects n > cap.
Generator build_generator(const Topology& t, const RateMatrix& r,
                          int cap = kDefaultExactCap);

/// Generator conditioned on the informed set: the chain is restricted to
/// the states reachable from `informed_mask` (a monotone process never
/// un-informs a node), which re-indexes the space to 2^(#non-informed).
Generator build_generator_conditioned(const Topology& t, const RateMatrix& r,
                                      std::uint32_t informed_mask,
                                      int cap = kDefaultExactCap);

/// Propagates the distribution over [0, dt] with the generator held
/// constant (uniformization of v' <- v' exp(Q dt), accuracy ~1e-12).
/// Throws if probability mass drifts by more than 1e-6.
JointDistribution propagate(const JointDistribution& d, const Generator& g,
                            double dt);

/// Pr{node i informed} = sum of v over states with bit i set.
double marginal_informed(const JointDistribution& d, int i);

/// E[X_i(t + dt)] for every node, starting from the point mass at x.
/// Entries for already-informed nodes are exactly 1.
std::vector<double> predict_marginals(const NetworkState& x, const Topology& t,
                                      const RateMatrix& r, double dt,
                                      int cap = kDefaultExactCap);

}  // namespace bcast
