#pragma once

#include <iosfwd>
#include <vector>

#include "bcast/graph.hpp"
#include "bcast/state.hpp"

namespace bcast {

/// Universal bounds on Pr{A and B} given the marginals a = Pr{A}, b = Pr{B}.
double frechet_lower(double a, double b);
double frechet_upper(double a, double b);

/// Per-node bound variables of the 4n-dimensional closure system: upper and
/// lower bounds on the informed and non-informed probabilities. Initialized
/// from a known state, upper == lower == the exact indicators.
struct ClosureState {
  std::vector<double> upper_inf;
  std::vector<double> lower_inf;
  std::vector<double> upper_non;
  std::vector<double> lower_non;

  int n() const { return static_cast<int>(upper_inf.size()); }
};

ClosureState closure_from_state(const NetworkState& x);

/// Advances the closure ODEs over dt with rates held constant.
///
/// Per edge (j -> i) the transfer bounds are
///   upper: min{1 - ui, un_i, uj}       (the bounding operator composed
///                                       with the upper Frechet bound)
///   lower: max{0, ln_i + lj - 1}
/// The informed bounds grow by their transfer; each non-informed bound
/// shrinks by the complementary transfer (upper-non by the lower transfer,
/// lower-non by the upper transfer), so every bound moves as slowly or as
/// quickly as the worst admissible joint law allows.
///
/// Classic RK4 with fixed step min(dt, 1e-2)/max(1, max total in-rate);
/// states are clamped to [0,1] and re-ordered after each step. Throws if a
/// value escapes [0,1] by more than 1e-9 before clamping.
ClosureState integrate_closure(const ClosureState& c, const Topology& t,
                               const RateMatrix& r, double dt);

/// Trajectory recorded on the integrator's fixed-step grid; samples[k]
/// holds the state at time k*h, with samples.size() == steps + 1.
struct ClosureTrajectory {
  double h = 0.0;
  std::vector<ClosureState> samples;
};

ClosureTrajectory integrate_closure_recorded(const ClosureState& c,
                                             const Topology& t,
                                             const RateMatrix& r, double dt);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Guaranteed envelope of Pr{node i informed}:
/// lo = max{lower_inf, 1 - upper_non}, hi = min{upper_inf, 1 - lower_non}.
std::vector<Interval> informed_bounds(const ClosureState& c);

/// Bounds on the expected number of informed nodes (sums informed_bounds).
Interval expected_count_bounds(const ClosureState& c);

/// Debug dump of the envelope along a trajectory: "time,node,lo,hi" rows.
void write_bounds_csv(std::ostream& os, const ClosureTrajectory& traj);

}  // namespace bcast
