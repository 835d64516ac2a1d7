#include "bcast/moment_closure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace bcast {

double frechet_lower(double a, double b) { return std::max(0.0, a + b - 1.0); }

double frechet_upper(double a, double b) { return std::min(a, b); }

ClosureState closure_from_state(const NetworkState& x) {
  ClosureState c;
  const auto n = static_cast<std::size_t>(x.n());
  c.upper_inf.resize(n);
  c.lower_inf.resize(n);
  c.upper_non.resize(n);
  c.lower_non.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double xi = x.x[i] ? 1.0 : 0.0;
    c.upper_inf[i] = xi;
    c.lower_inf[i] = xi;
    c.upper_non[i] = 1.0 - xi;
    c.lower_non[i] = 1.0 - xi;
  }
  return c;
}

namespace {

struct Derivative {
  std::vector<double> upper_inf, lower_inf, upper_non, lower_non;
};

void eval_rhs(const ClosureState& c, const Topology& t, const RateMatrix& r,
              Derivative& d) {
  const int n = c.n();
  d.upper_inf.assign(static_cast<std::size_t>(n), 0.0);
  d.lower_inf.assign(static_cast<std::size_t>(n), 0.0);
  d.upper_non.assign(static_cast<std::size_t>(n), 0.0);
  d.lower_non.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    const auto si = static_cast<std::size_t>(i);
    const auto& nbrs = t.in_neighbors[si];
    const auto& ws = r.w[si];
    double up = 0.0, lo = 0.0;
    const double head = std::min(1.0 - c.upper_inf[si], c.upper_non[si]);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      const auto sj = static_cast<std::size_t>(nbrs[k]);
      up += ws[k] * frechet_upper(head, c.upper_inf[sj]);
      lo += ws[k] * frechet_lower(c.lower_non[si], c.lower_inf[sj]);
    }
    d.upper_inf[si] = up;
    d.lower_non[si] = -up;
    d.lower_inf[si] = lo;
    d.upper_non[si] = -lo;
  }
}

void axpy(const ClosureState& base, const Derivative& d, double h,
          ClosureState& out) {
  const std::size_t n = base.upper_inf.size();
  for (std::size_t i = 0; i < n; ++i) {
    out.upper_inf[i] = base.upper_inf[i] + h * d.upper_inf[i];
    out.lower_inf[i] = base.lower_inf[i] + h * d.lower_inf[i];
    out.upper_non[i] = base.upper_non[i] + h * d.upper_non[i];
    out.lower_non[i] = base.lower_non[i] + h * d.lower_non[i];
  }
}

void clamp_and_order(ClosureState& c, bool* warned) {
  const double escape_tol = 1e-9;
  const double warn_tol = 1e-7;
  auto fix = [&](std::vector<double>& lower, std::vector<double>& upper) {
    for (std::size_t i = 0; i < lower.size(); ++i) {
      for (double* p : {&lower[i], &upper[i]}) {
        if (*p < -escape_tol || *p > 1.0 + escape_tol)
          throw std::runtime_error("closure: state escaped [0, 1]");
        *p = std::clamp(*p, 0.0, 1.0);
      }
      if (lower[i] > upper[i]) {
        if (lower[i] - upper[i] > warn_tol && !*warned) {
          std::fprintf(stderr,
                       "warning: closure bound ordering violated by %.3g\n",
                       lower[i] - upper[i]);
          *warned = true;
        }
        std::swap(lower[i], upper[i]);  // widen to stay conservative
      }
    }
  };
  fix(c.lower_inf, c.upper_inf);
  fix(c.lower_non, c.upper_non);
}

double max_total_in_rate(const RateMatrix& r) {
  double m = 0.0;
  for (const auto& row : r.w) {
    double s = 0.0;
    for (double w : row) s += w;
    m = std::max(m, s);
  }
  return m;
}

// One RK4 step of size h from c into out (may alias scratch, not c).
void rk4_step(const ClosureState& c, const Topology& t, const RateMatrix& r,
              double h, ClosureState& stage, Derivative& k1, Derivative& k2,
              Derivative& k3, Derivative& k4, ClosureState& out) {
  eval_rhs(c, t, r, k1);
  axpy(c, k1, h / 2.0, stage);
  eval_rhs(stage, t, r, k2);
  axpy(c, k2, h / 2.0, stage);
  eval_rhs(stage, t, r, k3);
  axpy(c, k3, h, stage);
  eval_rhs(stage, t, r, k4);
  const std::size_t n = c.upper_inf.size();
  for (std::size_t i = 0; i < n; ++i) {
    out.upper_inf[i] =
        c.upper_inf[i] + h / 6.0 *
                             (k1.upper_inf[i] + 2.0 * k2.upper_inf[i] +
                              2.0 * k3.upper_inf[i] + k4.upper_inf[i]);
    out.lower_inf[i] =
        c.lower_inf[i] + h / 6.0 *
                             (k1.lower_inf[i] + 2.0 * k2.lower_inf[i] +
                              2.0 * k3.lower_inf[i] + k4.lower_inf[i]);
    out.upper_non[i] =
        c.upper_non[i] + h / 6.0 *
                             (k1.upper_non[i] + 2.0 * k2.upper_non[i] +
                              2.0 * k3.upper_non[i] + k4.upper_non[i]);
    out.lower_non[i] =
        c.lower_non[i] + h / 6.0 *
                             (k1.lower_non[i] + 2.0 * k2.lower_non[i] +
                              2.0 * k3.lower_non[i] + k4.lower_non[i]);
  }
}

}  // namespace

ClosureState integrate_closure(const ClosureState& c, const Topology& t,
                               const RateMatrix& r, double dt) {
  if (dt < 0.0)
    throw std::invalid_argument("integrate_closure: dt must be >= 0");
  if (c.n() != t.n)
    throw std::invalid_argument("integrate_closure: state size mismatch");
  ClosureState cur = c;
  if (dt == 0.0) return cur;

  const double h_target = std::min(dt, 1e-2) / std::max(1.0, max_total_in_rate(r));
  const int steps = std::max(1, static_cast<int>(std::ceil(dt / h_target)));
  const double h = dt / steps;

  ClosureState stage = cur, next = cur;
  Derivative k1, k2, k3, k4;
  bool warned = false;
  for (int s = 0; s < steps; ++s) {
    rk4_step(cur, t, r, h, stage, k1, k2, k3, k4, next);
    clamp_and_order(next, &warned);
    cur = next;
  }
  return cur;
}

ClosureTrajectory integrate_closure_recorded(const ClosureState& c,
                                             const Topology& t,
                                             const RateMatrix& r, double dt) {
  if (dt < 0.0)
    throw std::invalid_argument("integrate_closure: dt must be >= 0");
  ClosureTrajectory traj;
  traj.samples.push_back(c);
  if (dt == 0.0) {
    traj.h = 0.0;
    return traj;
  }
  const double h_target = std::min(dt, 1e-2) / std::max(1.0, max_total_in_rate(r));
  const int steps = std::max(1, static_cast<int>(std::ceil(dt / h_target)));
  traj.h = dt / steps;

  ClosureState cur = c, stage = c, next = c;
  Derivative k1, k2, k3, k4;
  bool warned = false;
  traj.samples.reserve(static_cast<std::size_t>(steps) + 1);
  for (int s = 0; s < steps; ++s) {
    rk4_step(cur, t, r, traj.h, stage, k1, k2, k3, k4, next);
    clamp_and_order(next, &warned);
    cur = next;
    traj.samples.push_back(cur);
  }
  return traj;
}

std::vector<Interval> informed_bounds(const ClosureState& c) {
  std::vector<Interval> b(c.upper_inf.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    double lo = std::max(c.lower_inf[i], 1.0 - c.upper_non[i]);
    double hi = std::min(c.upper_inf[i], 1.0 - c.lower_non[i]);
    if (lo > hi) std::swap(lo, hi);  // round-off only
    b[i] = {lo, hi};
  }
  return b;
}

Interval expected_count_bounds(const ClosureState& c) {
  Interval total{0.0, 0.0};
  for (const Interval& b : informed_bounds(c)) {
    total.lo += b.lo;
    total.hi += b.hi;
  }
  return total;
}

void write_bounds_csv(std::ostream& os, const ClosureTrajectory& traj) {
  os << "time,node,lo,hi\n";
  char buf[128];
  for (std::size_t k = 0; k < traj.samples.size(); ++k) {
    const double time = traj.h * static_cast<double>(k);
    auto bounds = informed_bounds(traj.samples[k]);
    for (std::size_t i = 0; i < bounds.size(); ++i) {
      std::snprintf(buf, sizeof(buf), "%.12g,%zu,%.12g,%.12g\n", time, i,
                    bounds[i].lo, bounds[i].hi);
      os << buf;
    }
  }
}

}  // namespace bcast
