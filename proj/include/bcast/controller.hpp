#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "bcast/exact_ctmc.hpp"
#include "bcast/graph.hpp"
#include "bcast/moment_closure.hpp"
#include "bcast/state.hpp"

namespace bcast {

enum class Predictor { kExactCtmc, kMomentClosure, kOpenLoop };

/// Whose budget an edge weight draws from: the receiving node's (summing
/// a node's in-edge rates to mu) or the transmitting node's (out-edges).
enum class BudgetOrientation { kInEdges, kOutEdges };

struct ControllerConfig {
  double dt = 1.0;   // control window
  double r = 0.22;   // desired exponential convergence rate
  double mu = 2.0;   // per-node rate budget
  int grid = 4;      // simplex discretization resolution K
  Predictor predictor = Predictor::kExactCtmc;
  BudgetOrientation orientation = BudgetOrientation::kInEdges;
  int exact_cap = kDefaultExactCap;
  double horizon_factor = 100.0;  // trial runaway guard: factor * n / mu
  bool baseline_floor = false;    // keep spanning-tree edges above mu/(10 K)
  int baseline_root = 0;

  void validate() const;
};

/// Per-node weight vectors over each node's budgeted edges, aligned with
/// in_neighbors (receiver orientation) or out_neighbors (transmitter
/// orientation). Non-empty vectors sum to mu; degree-zero nodes are empty.
struct RateAllocation {
  BudgetOrientation orientation = BudgetOrientation::kInEdges;
  std::vector<std::vector<double>> w;
};

/// Total quadratic actuation cost: sum over nodes and edges of weight^2.
double cost(const RateAllocation& a);

/// Integer compositions of `grid` over `degree` parts, lexicographically
/// ascending. The admissible action set is these scaled by mu/grid.
std::vector<std::vector<int>> admissible_compositions(int degree, int grid);

/// The admissible weight vectors for node i (set size C(K+d-1, d-1)).
std::vector<std::vector<double>> admissible_allocations(
    int i, const Topology& t, const ControllerConfig& cfg);

/// True iff every node satisfies 1 - p_i <= (1 - X_i) exp(-r dt), where
/// p_i is the predicted informed probability (or its guaranteed lower
/// bound, under the interval overload).
bool check_constraint(const NetworkState& x, std::span<const double> predicted,
                      const ControllerConfig& cfg);
bool check_constraint(const NetworkState& x, std::span<const Interval> predicted,
                      const ControllerConfig& cfg);

/// Budget split uniformly over every node's budgeted edges.
RateAllocation uniform_allocation(const Topology& t,
                                  const ControllerConfig& cfg);

/// Maximum-pressure fallback: a non-informed node splits its budget evenly
/// over in-edges from informed sources (a transmitter splits over edges to
/// non-informed targets); nodes with no such informative edges split evenly.
RateAllocation auxiliary_allocation(const NetworkState& x, const Topology& t,
                                    const ControllerConfig& cfg);

/// Expands an allocation into per-in-edge simulation rates.
RateMatrix to_rate_matrix(const RateAllocation& a, const Topology& t);

struct RhcResult {
  RateAllocation allocation;
  bool feasible = true;  // every node's subproblem admitted an action
  std::vector<std::uint8_t> node_feasible;
  std::vector<double> predicted;  // scored probability for the applied weights
  std::vector<double> residual;   // (1-p_i) - (1-X_i) e^{-r dt}
};

/// Receding-horizon solver. One window per call: each node's subproblem is
/// solved over its own action grid, scoring a candidate with the configured
/// predictor while the rest of the network is held at the auxiliary
/// allocation (so scores depend only on (state, candidate) and per-node
/// minimization equals minimization over the product action space).
/// Falls back to the auxiliary action for nodes with no feasible candidate.
///
/// Cost ties are broken by retaining the previous window's choice, then by
/// lexicographic order; the instance carries that incumbent plus a score
/// cache keyed by (state, candidate), so one controller serves one trial.
class RhcController {
 public:
  RhcController(Topology t, ControllerConfig cfg);

  RhcResult solve(const NetworkState& x);

  /// Scores one candidate for one node: the predicted informed probability
  /// of `node` after one window under (candidate, auxiliary fill). Exposed
  /// so exhaustive-search checks can share the solver's objective.
  double score_candidate(const NetworkState& x, int node,
                         std::span<const double> weights);

  void reset();

  const Topology& topology() const { return topo_; }
  const ControllerConfig& config() const { return cfg_; }

 private:
  struct NodeActions {
    std::vector<std::vector<int>> compositions;  // lexicographic
    std::vector<double> costs;
    std::vector<int> by_cost;  // indices sorted by (cost, lex)
  };

  void sync_state(const NetworkState& x);
  double score_in_weights(const NetworkState& x, int node,
                          const std::vector<double>& weights,
                          const RateMatrix& fill);
  double score_cached(const NetworkState& x, int node, std::uint64_t code,
                      const std::vector<double>& weights,
                      const RateMatrix& fill);
  const ClosureTrajectory& closure_env(const NetworkState& x,
                                       const RateMatrix& fill);
  std::vector<double> predict_for(const NetworkState& x, const RateMatrix& m);
  std::vector<double> weights_of(int node, int cand) const;
  int candidate_index(int node, const std::vector<int>& composition) const;
  void solve_in_edges(const NetworkState& x, RhcResult& res);
  void solve_out_edges(const NetworkState& x, RhcResult& res);
  void apply_baseline_floor(RateAllocation& a) const;

  Topology topo_;
  ControllerConfig cfg_;
  std::vector<NodeActions> actions_;
  std::vector<std::optional<std::vector<int>>> incumbent_;
  std::map<std::uint64_t, double> score_cache_;  // keyed (node, candidate)
  std::optional<ClosureTrajectory> env_;         // fill trajectory, this state
  std::optional<NetworkState> last_state_;
};

/// One-shot solve with a fresh controller (no incumbent carry-over).
RhcResult solve_rhc(const NetworkState& x, const Topology& t,
                    const ControllerConfig& cfg);

}  // namespace bcast
