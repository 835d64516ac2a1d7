#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "bcast/controller.hpp"
#include "bcast/graph.hpp"
#include "bcast/rng.hpp"
#include "bcast/state.hpp"

namespace bcast {

inline constexpr std::array<double, 5> kCompletionFractions{0.2, 0.4, 0.6,
                                                            0.8, 1.0};

struct TrialEvent {
  double time = 0.0;  // absolute trial time once recorded by run_trial
  int node = 0;
};

/// Controller output applied over one window, kept for the decision log.
struct WindowLog {
  double time = 0.0;
  bool feasible = true;
  std::vector<std::vector<double>> weights;
  std::vector<double> residual;
  std::vector<std::uint8_t> node_feasible;
};

struct TrialRecord {
  std::uint64_t seed = 0;
  int root = 0;
  std::vector<TrialEvent> events;
  std::vector<WindowLog> windows;  // empty in open-loop mode
  std::array<double, 5> completion{};
  double final_time = 0.0;
  int feasible_windows = 0;
  int total_windows = 0;
};

/// Exact jump-process simulation of one window with the rates held
/// constant: every non-informed node i fires at hazard
/// sum_{j in N_i, X_j = 1} w_ij, hazards recomputed after each event.
/// Event times are relative to the window start.
std::pair<NetworkState, std::vector<TrialEvent>> step_window(
    const NetworkState& x, const Topology& t, const RateMatrix& r, double dt,
    Rng& rng);

/// Alternates controller windows (or the fixed uniform allocation in
/// open-loop mode) with exact window simulation until everyone is
/// informed. Deterministic given the seed. Throws if simulated time
/// exceeds cfg.horizon_factor * n / mu.
TrialRecord run_trial(const Topology& t, const ControllerConfig& cfg, int root,
                      std::uint64_t seed);

struct ExperimentSummary {
  std::vector<TrialRecord> trials;
};

/// Runs one trial per seed. fixed_root < 0 draws each trial's root
/// uniformly (from a dedicated stream, so paired runs across models share
/// roots) among nodes that span the graph.
ExperimentSummary run_experiment(const Topology& t, const ControllerConfig& cfg,
                                 const std::vector<std::uint64_t>& seeds,
                                 int fixed_root = -1);

/// Informed count at absolute time tt (root counts from time zero).
int informed_count_at(const TrialRecord& trial, double tt);

struct FractionStats {
  double fraction = 0.0;
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
};

std::vector<FractionStats> completion_stats(const ExperimentSummary& s);

struct BinStats {
  double time = 0.0;  // right edge of the bin
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
};

/// Mean/min/max informed counts sampled at multiples of the bin width.
/// Width <= 0 picks (longest completion)/6.
std::vector<BinStats> binned_informed(const ExperimentSummary& s,
                                      double bin_width);

/// Per-bin difference of mean informed counts between two experiments
/// (paired bar-chart data). A shared grid is built from the longer run.
std::vector<std::pair<double, double>> paired_mean_difference(
    const ExperimentSummary& a, const ExperimentSummary& b, double bin_width);

}  // namespace bcast
