#include "bcast/broadcast_time.hpp"

#include <cmath>
#include <stdexcept>

namespace bcast {

namespace {

void check_params(int n, int s0, double r, double t_or_dt, bool positive) {
  if (n < 1 || s0 < 1 || s0 > n)
    throw std::invalid_argument("broadcast bound: need 1 <= s0 <= n");
  if (r <= 0.0) throw std::invalid_argument("broadcast bound: r must be > 0");
  if (positive ? (t_or_dt <= 0.0) : (t_or_dt < 0.0))
    throw std::invalid_argument("broadcast bound: bad time argument");
}

}  // namespace

double decay_envelope(int n, int s0, double r, double t) {
  check_params(n, s0, r, t, /*positive=*/false);
  return static_cast<double>(n - s0) * std::exp(-r * t);
}

double compute_tau1(int n, int s0, double r, double dt) {
  check_params(n, s0, r, dt, /*positive=*/true);
  const double deficit = static_cast<double>(n - s0);
  if (deficit <= 1.0) return 0.0;
  long k = static_cast<long>(std::ceil(std::log(deficit) / (r * dt)));
  if (k < 0) k = 0;
  // Enforce minimality exactly at the integer boundary.
  while (k > 0 && deficit * std::exp(-r * dt * static_cast<double>(k - 1)) <= 1.0)
    --k;
  while (deficit * std::exp(-r * dt * static_cast<double>(k)) > 1.0) ++k;
  return static_cast<double>(k) * dt;
}

double expected_broadcast_upper_bound(int n, int s0, double r, double dt) {
  check_params(n, s0, r, dt, /*positive=*/true);
  if (s0 == n) return 0.0;
  const double tau1 = compute_tau1(n, s0, r, dt);
  const double deficit = static_cast<double>(n - s0);
  return tau1 + deficit * dt * std::exp(-r * tau1) / (1.0 - std::exp(-r * dt));
}

BroadcastBound make_broadcast_bound(int n, int s0, double r, double dt) {
  BroadcastBound b;
  b.n = n;
  b.s0 = s0;
  b.r = r;
  b.dt = dt;
  b.tau1 = compute_tau1(n, s0, r, dt);
  b.bound = expected_broadcast_upper_bound(n, s0, r, dt);
  return b;
}

}  // namespace bcast
