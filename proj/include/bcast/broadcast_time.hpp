#pragma once

namespace bcast {

/// Decay envelope of the expected non-informed count under the per-window
/// exponential constraint: (n - s0) * exp(-r t).
double decay_envelope(int n, int s0, double r, double t);

/// First control instant k*dt at which the envelope of non-informed nodes
/// drops to at most one: smallest k*dt with (n - s0) exp(-r k dt) <= 1.
double compute_tau1(int n, int s0, double r, double dt);

/// Closed-form upper bound on the expected broadcast completion time:
/// tau1 + (n - s0) dt exp(-r tau1) / (1 - exp(-r dt)).
double expected_broadcast_upper_bound(int n, int s0, double r, double dt);

struct BroadcastBound {
  double tau1 = 0.0;
  double bound = 0.0;
  int n = 0;
  int s0 = 0;
  double r = 0.0;
  double dt = 0.0;
};

BroadcastBound make_broadcast_bound(int n, int s0, double r, double dt);

}  // namespace bcast
