#include "bcast/controller.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace bcast {

namespace {

constexpr double kFeasibilityTol = 1e-12;

// Candidate codes used as cache keys alongside grid indices.
constexpr std::uint64_t kCodeAux = ~std::uint64_t{0};
constexpr std::uint64_t kCodeProbe = ~std::uint64_t{0} - 1;

int find_position(const std::vector<int>& sorted, int value) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), value);
  return static_cast<int>(it - sorted.begin());
}

// Spanning-tree parent of every node reachable from root; -1 elsewhere.
std::vector<int> bfs_tree_parents(const Topology& t, int root) {
  std::vector<int> parent(static_cast<std::size_t>(t.n), -1);
  std::vector<char> seen(static_cast<std::size_t>(t.n), 0);
  std::deque<int> q{root};
  seen[static_cast<std::size_t>(root)] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : t.out_neighbors[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        parent[static_cast<std::size_t>(w)] = v;
        q.push_back(w);
      }
    }
  }
  return parent;
}

}  // namespace

void ControllerConfig::validate() const {
  if (dt <= 0.0) throw std::invalid_argument("controller: dt must be > 0");
  if (r <= 0.0) throw std::invalid_argument("controller: r must be > 0");
  if (mu <= 0.0) throw std::invalid_argument("controller: mu must be > 0");
  if (grid < 1) throw std::invalid_argument("controller: grid must be >= 1");
  if (horizon_factor <= 0.0)
    throw std::invalid_argument("controller: horizon factor must be > 0");
}

double cost(const RateAllocation& a) {
  double total = 0.0;
  for (const auto& row : a.w) {
    for (double w : row) total += w * w;
  }
  return total;
}

std::vector<std::vector<int>> admissible_compositions(int degree, int grid) {
  if (degree < 1) return {};
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(degree), 0);
  // Lexicographic recursion over the leading coordinates.
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == degree - 1) {
      cur[static_cast<std::size_t>(pos)] = remaining;
      out.push_back(cur);
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      cur[static_cast<std::size_t>(pos)] = k;
      self(self, pos + 1, remaining - k);
    }
  };
  rec(rec, 0, grid);
  return out;
}

std::vector<std::vector<double>> admissible_allocations(
    int i, const Topology& t, const ControllerConfig& cfg) {
  const auto& edges = cfg.orientation == BudgetOrientation::kInEdges
                          ? t.in_neighbors[static_cast<std::size_t>(i)]
                          : t.out_neighbors[static_cast<std::size_t>(i)];
  const double unit = cfg.mu / static_cast<double>(cfg.grid);
  std::vector<std::vector<double>> out;
  for (const auto& comp :
       admissible_compositions(static_cast<int>(edges.size()), cfg.grid)) {
    std::vector<double> w(comp.size());
    for (std::size_t k = 0; k < comp.size(); ++k)
      w[k] = unit * static_cast<double>(comp[k]);
    out.push_back(std::move(w));
  }
  return out;
}

bool check_constraint(const NetworkState& x, std::span<const double> predicted,
                      const ControllerConfig& cfg) {
  if (static_cast<int>(predicted.size()) != x.n())
    throw std::invalid_argument("check_constraint: size mismatch");
  const double decay = std::exp(-cfg.r * cfg.dt);
  for (int i = 0; i < x.n(); ++i) {
    const double xi = x.informed(i) ? 1.0 : 0.0;
    const double residual =
        (1.0 - predicted[static_cast<std::size_t>(i)]) - (1.0 - xi) * decay;
    if (residual > kFeasibilityTol) return false;
  }
  return true;
}

bool check_constraint(const NetworkState& x,
                      std::span<const Interval> predicted,
                      const ControllerConfig& cfg) {
  std::vector<double> lower(predicted.size());
  for (std::size_t i = 0; i < predicted.size(); ++i) lower[i] = predicted[i].lo;
  return check_constraint(x, lower, cfg);
}

RateAllocation uniform_allocation(const Topology& t,
                                  const ControllerConfig& cfg) {
  RateAllocation a;
  a.orientation = cfg.orientation;
  a.w.resize(static_cast<std::size_t>(t.n));
  for (int i = 0; i < t.n; ++i) {
    const auto& edges = cfg.orientation == BudgetOrientation::kInEdges
                            ? t.in_neighbors[static_cast<std::size_t>(i)]
                            : t.out_neighbors[static_cast<std::size_t>(i)];
    if (!edges.empty()) {
      a.w[static_cast<std::size_t>(i)].assign(
          edges.size(), cfg.mu / static_cast<double>(edges.size()));
    }
  }
  return a;
}

RateAllocation auxiliary_allocation(const NetworkState& x, const Topology& t,
                                    const ControllerConfig& cfg) {
  RateAllocation a = uniform_allocation(t, cfg);
  for (int i = 0; i < t.n; ++i) {
    const auto si = static_cast<std::size_t>(i);
    if (cfg.orientation == BudgetOrientation::kInEdges) {
      if (x.informed(i)) continue;
      const auto& nbrs = t.in_neighbors[si];
      int informative = 0;
      for (int j : nbrs) informative += x.informed(j) ? 1 : 0;
      if (informative == 0) continue;
      for (std::size_t k = 0; k < nbrs.size(); ++k) {
        a.w[si][k] = x.informed(nbrs[k])
                         ? cfg.mu / static_cast<double>(informative)
                         : 0.0;
      }
    } else {
      if (!x.informed(i)) continue;
      const auto& nbrs = t.out_neighbors[si];
      int informative = 0;
      for (int j : nbrs) informative += x.informed(j) ? 0 : 1;
      if (informative == 0) continue;
      for (std::size_t k = 0; k < nbrs.size(); ++k) {
        a.w[si][k] = x.informed(nbrs[k])
                         ? 0.0
                         : cfg.mu / static_cast<double>(informative);
      }
    }
  }
  return a;
}

RateMatrix to_rate_matrix(const RateAllocation& a, const Topology& t) {
  if (a.orientation == BudgetOrientation::kInEdges) {
    RateMatrix r;
    r.w = a.w;
    return r;
  }
  RateMatrix r = zero_rates(t);
  for (int j = 0; j < t.n; ++j) {
    const auto sj = static_cast<std::size_t>(j);
    const auto& outs = t.out_neighbors[sj];
    for (std::size_t k = 0; k < outs.size(); ++k) {
      int i = outs[k];
      int pos = find_position(t.in_neighbors[static_cast<std::size_t>(i)], j);
      r.w[static_cast<std::size_t>(i)][static_cast<std::size_t>(pos)] =
          a.w[sj][k];
    }
  }
  return r;
}

RhcController::RhcController(Topology t, ControllerConfig cfg)
    : topo_(std::move(t)), cfg_(cfg) {
  cfg_.validate();
  if (cfg_.predictor == Predictor::kExactCtmc && topo_.n > cfg_.exact_cap)
    throw std::invalid_argument(
        "controller: exact predictor infeasible beyond the state-space cap");
  actions_.resize(static_cast<std::size_t>(topo_.n));
  incumbent_.assign(static_cast<std::size_t>(topo_.n), std::nullopt);
  for (int i = 0; i < topo_.n; ++i) {
    const auto& edges = cfg_.orientation == BudgetOrientation::kInEdges
                            ? topo_.in_neighbors[static_cast<std::size_t>(i)]
                            : topo_.out_neighbors[static_cast<std::size_t>(i)];
    // Guard against a combinatorial blow-up of C(K+d-1, d-1) actions.
    double count = 1.0;
    for (int k = 1; k <= cfg_.grid; ++k) {
      count *= static_cast<double>(edges.size() - 1 + k) / k;
      if (count > 2e6)
        throw std::invalid_argument(
            "controller: action grid too large for node degree " +
            std::to_string(edges.size()));
    }
    auto& acts = actions_[static_cast<std::size_t>(i)];
    acts.compositions =
        admissible_compositions(static_cast<int>(edges.size()), cfg_.grid);
    acts.costs.resize(acts.compositions.size());
    const double unit = cfg_.mu / static_cast<double>(cfg_.grid);
    for (std::size_t c = 0; c < acts.compositions.size(); ++c) {
      long sq = 0;
      for (int k : acts.compositions[c]) sq += static_cast<long>(k) * k;
      acts.costs[c] = unit * unit * static_cast<double>(sq);
    }
    acts.by_cost.resize(acts.compositions.size());
    std::iota(acts.by_cost.begin(), acts.by_cost.end(), 0);
    std::stable_sort(acts.by_cost.begin(), acts.by_cost.end(),
                     [&acts](int a, int b) {
                       return acts.costs[static_cast<std::size_t>(a)] <
                              acts.costs[static_cast<std::size_t>(b)];
                     });
  }
}

void RhcController::reset() {
  std::fill(incumbent_.begin(), incumbent_.end(), std::nullopt);
  score_cache_.clear();
  env_.reset();
  last_state_.reset();
}

void RhcController::sync_state(const NetworkState& x) {
  if (!last_state_ || last_state_->x != x.x) {
    score_cache_.clear();
    env_.reset();
    last_state_ = x;
  }
}

std::vector<double> RhcController::weights_of(int node, int cand) const {
  const auto& comp =
      actions_[static_cast<std::size_t>(node)].compositions[static_cast<std::size_t>(cand)];
  const double unit = cfg_.mu / static_cast<double>(cfg_.grid);
  std::vector<double> w(comp.size());
  for (std::size_t k = 0; k < comp.size(); ++k)
    w[k] = unit * static_cast<double>(comp[k]);
  return w;
}

RhcResult RhcController::solve(const NetworkState& x) {
  if (x.n() != topo_.n)
    throw std::invalid_argument("controller: state size mismatch");
  sync_state(x);
  RhcResult res;
  if (cfg_.orientation == BudgetOrientation::kInEdges) {
    solve_in_edges(x, res);
  } else {
    solve_out_edges(x, res);
  }
  if (cfg_.baseline_floor) apply_baseline_floor(res.allocation);
  return res;
}

double RhcController::score_candidate(const NetworkState& x, int node,
                                      std::span<const double> weights) {
  if (x.n() != topo_.n)
    throw std::invalid_argument("controller: state size mismatch");
  sync_state(x);
  RateMatrix fill = to_rate_matrix(auxiliary_allocation(x, topo_, cfg_), topo_);
  std::vector<double> w(weights.begin(), weights.end());
  return score_in_weights(x, node, w, fill);
}

// Predicted informed probability of `node` over one window under the
// candidate weights on its in-edges, the rest of the network at `fill`.
double RhcController::score_in_weights(const NetworkState& x, int node,
                                       const std::vector<double>& weights,
                                       const RateMatrix& fill) {
  if (cfg_.predictor == Predictor::kExactCtmc) {
    RateMatrix m = fill;
    m.w[static_cast<std::size_t>(node)] = weights;
    return predict_marginals(x, topo_, m, cfg_.dt, cfg_.exact_cap)
        [static_cast<std::size_t>(node)];
  }
  // Moment-closure scoring against the frozen fill environment: the
  // neighbours' bound trajectories come from one integration of the full
  // closure system per window; only the node's own four variables are
  // re-integrated per candidate.
  const ClosureTrajectory& env = closure_env(x, fill);
  const auto sn = static_cast<std::size_t>(node);
  const auto& nbrs = topo_.in_neighbors[sn];
  double ui = x.informed(node) ? 1.0 : 0.0;
  double li = ui, un = 1.0 - ui, ln = 1.0 - ui;
  if (env.samples.size() < 2) return std::max(li, 1.0 - un);

  const double h = env.h;
  const std::size_t steps = env.samples.size() - 1;
  // The node's lower-informed variable never feeds back into the RHS, so
  // the stage state is (upper_inf, upper_non, lower_non).
  auto rhs = [&](double cui, double cun, double cln,
                 const std::vector<double>& env_upper,
                 const std::vector<double>& env_lower, double* dui,
                 double* dli, double* dun, double* dln) {
    double up = 0.0, lo = 0.0;
    const double head = std::min(1.0 - cui, cun);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      const auto sj = static_cast<std::size_t>(nbrs[k]);
      up += weights[k] * frechet_upper(head, env_upper[sj]);
      lo += weights[k] * frechet_lower(cln, env_lower[sj]);
    }
    *dui = up;
    *dln = -up;
    *dli = lo;
    *dun = -lo;
  };
  std::vector<double> mid_upper(env.samples[0].upper_inf.size());
  std::vector<double> mid_lower(mid_upper.size());
  for (std::size_t s = 0; s < steps; ++s) {
    const ClosureState& e0 = env.samples[s];
    const ClosureState& e1 = env.samples[s + 1];
    for (std::size_t j = 0; j < mid_upper.size(); ++j) {
      mid_upper[j] = 0.5 * (e0.upper_inf[j] + e1.upper_inf[j]);
      mid_lower[j] = 0.5 * (e0.lower_inf[j] + e1.lower_inf[j]);
    }
    double k1u, k1l, k1n, k1m, k2u, k2l, k2n, k2m;
    double k3u, k3l, k3n, k3m, k4u, k4l, k4n, k4m;
    rhs(ui, li, un, ln, e0.upper_inf, e0.lower_inf, &k1u, &k1l, &k1n, &k1m);
    rhs(ui + h / 2 * k1u, li + h / 2 * k1l, un + h / 2 * k1n, ln + h / 2 * k1m,
        mid_upper, mid_lower, &k2u, &k2l, &k2n, &k2m);
    rhs(ui + h / 2 * k2u, li + h / 2 * k2l, un + h / 2 * k2n, ln + h / 2 * k2m,
        mid_upper, mid_lower, &k3u, &k3l, &k3n, &k3m);
    rhs(ui + h * k3u, li + h * k3l, un + h * k3n, ln + h * k3m, e1.upper_inf,
        e1.lower_inf, &k4u, &k4l, &k4n, &k4m);
    ui += h / 6 * (k1u + 2 * k2u + 2 * k3u + k4u);
    li += h / 6 * (k1l + 2 * k2l + 2 * k3l + k4l);
    un += h / 6 * (k1n + 2 * k2n + 2 * k3n + k4n);
    ln += h / 6 * (k1m + 2 * k2m + 2 * k3m + k4m);
    ui = std::clamp(ui, 0.0, 1.0);
    li = std::clamp(li, 0.0, 1.0);
    un = std::clamp(un, 0.0, 1.0);
    ln = std::clamp(ln, 0.0, 1.0);
    if (li > ui) std::swap(li, ui);
    if (ln > un) std::swap(ln, un);
  }
  return std::max(li, 1.0 - un);  // guaranteed lower bound
}

const ClosureTrajectory& RhcController::closure_env(const NetworkState& x,
                                                    const RateMatrix& fill) {
  if (!env_) {
    env_ = integrate_closure_recorded(closure_from_state(x), topo_, fill,
                                      cfg_.dt);
  }
  return *env_;
}

double RhcController::score_cached(const NetworkState& x, int node,
                                   std::uint64_t code,
                                   const std::vector<double>& weights,
                                   const RateMatrix& fill) {
  const std::uint64_t key =
      (static_cast<std::uint64_t>(node) << 42) ^ (code & ((1ull << 42) - 1));
  auto it = score_cache_.find(key);
  if (it != score_cache_.end()) return it->second;
  double p = score_in_weights(x, node, weights, fill);
  score_cache_.emplace(key, p);
  return p;
}

void RhcController::solve_in_edges(const NetworkState& x, RhcResult& res) {
  const int n = topo_.n;
  const double decay = std::exp(-cfg_.r * cfg_.dt);
  const double theta = 1.0 - decay;
  RateAllocation aux = auxiliary_allocation(x, topo_, cfg_);
  RateMatrix fill = to_rate_matrix(aux, topo_);

  res.allocation.orientation = BudgetOrientation::kInEdges;
  res.allocation.w.assign(static_cast<std::size_t>(n), {});
  res.node_feasible.assign(static_cast<std::size_t>(n), 1);
  res.predicted.assign(static_cast<std::size_t>(n), 1.0);
  res.residual.assign(static_cast<std::size_t>(n), 0.0);

  for (int i = 0; i < n; ++i) {
    const auto si = static_cast<std::size_t>(i);
    const auto& acts = actions_[si];
    const std::size_t degree = topo_.in_neighbors[si].size();

    if (degree == 0) {
      incumbent_[si].reset();
      if (!x.informed(i)) {
        res.feasible = false;
        res.node_feasible[si] = 0;
        res.predicted[si] = 0.0;
        res.residual[si] = theta;
      }
      continue;
    }

    if (x.informed(i)) {
      // Vacuous constraint: minimize cost alone.
      int chosen = acts.by_cost.front();
      if (incumbent_[si]) {
        int inc = candidate_index(i, *incumbent_[si]);
        if (inc >= 0 && acts.costs[static_cast<std::size_t>(inc)] <=
                            acts.costs[static_cast<std::size_t>(chosen)] +
                                kFeasibilityTol)
          chosen = inc;
      }
      res.allocation.w[si] = weights_of(i, chosen);
      incumbent_[si] = acts.compositions[static_cast<std::size_t>(chosen)];
      continue;
    }

    int chosen = -1;
    double chosen_p = 0.0;
    bool probed = false;
    for (int ci : acts.by_cost) {
      const auto w = weights_of(i, ci);
      double p = score_cached(x, i, static_cast<std::uint64_t>(ci), w, fill);
      if (theta - p <= kFeasibilityTol) {
        chosen = ci;
        chosen_p = p;
        break;
      }
      if (!probed && cfg_.predictor == Predictor::kExactCtmc) {
        // The all-mu vector dominates every candidate edge-wise, and the
        // exact marginal is monotone in each rate, so one evaluation can
        // rule out the whole grid.
        probed = true;
        std::vector<double> top(degree, cfg_.mu);
        double p_up = score_cached(x, i, kCodeProbe, top, fill);
        if (theta - p_up > kFeasibilityTol) break;
      }
    }

    if (chosen >= 0 && incumbent_[si]) {
      int inc = candidate_index(i, *incumbent_[si]);
      if (inc >= 0 && inc != chosen &&
          std::abs(acts.costs[static_cast<std::size_t>(inc)] -
                   acts.costs[static_cast<std::size_t>(chosen)]) <=
              kFeasibilityTol) {
        const auto w = weights_of(i, inc);
        double p = score_cached(x, i, static_cast<std::uint64_t>(inc), w, fill);
        if (theta - p <= kFeasibilityTol) {
          chosen = inc;
          chosen_p = p;
        }
      }
    }

    if (chosen >= 0) {
      res.allocation.w[si] = weights_of(i, chosen);
      res.predicted[si] = chosen_p;
      res.residual[si] = theta - chosen_p;
      incumbent_[si] = acts.compositions[static_cast<std::size_t>(chosen)];
    } else {
      res.feasible = false;
      res.node_feasible[si] = 0;
      res.allocation.w[si] = aux.w[si];
      double p = score_cached(x, i, kCodeAux, aux.w[si], fill);
      res.predicted[si] = p;
      res.residual[si] = theta - p;
      incumbent_[si].reset();
    }
  }
}

void RhcController::solve_out_edges(const NetworkState& x, RhcResult& res) {
  const int n = topo_.n;
  const double decay = std::exp(-cfg_.r * cfg_.dt);
  const double theta = 1.0 - decay;
  RateAllocation aux = auxiliary_allocation(x, topo_, cfg_);

  res.allocation.orientation = BudgetOrientation::kOutEdges;
  res.allocation.w.assign(static_cast<std::size_t>(n), {});
  res.node_feasible.assign(static_cast<std::size_t>(n), 1);
  res.predicted.assign(static_cast<std::size_t>(n), 1.0);
  res.residual.assign(static_cast<std::size_t>(n), 0.0);

  // Per-transmitter pass: each informed sender picks the cheapest split
  // that keeps all of its non-informed targets on the decay envelope,
  // holding every other sender at the auxiliary split. This orientation
  // couples subproblems through shared receivers, so it is a heuristic
  // decomposition rather than an exact one.
  for (int j = 0; j < n; ++j) {
    const auto sj = static_cast<std::size_t>(j);
    const auto& acts = actions_[sj];
    const auto& outs = topo_.out_neighbors[sj];
    if (outs.empty()) {
      incumbent_[sj].reset();
      continue;
    }

    std::vector<int> receivers;
    if (x.informed(j)) {
      for (int i : outs)
        if (!x.informed(i)) receivers.push_back(i);
    }

    int chosen = -1;
    if (receivers.empty()) {
      chosen = acts.by_cost.front();
      if (incumbent_[sj]) {
        int inc = candidate_index(j, *incumbent_[sj]);
        if (inc >= 0 && acts.costs[static_cast<std::size_t>(inc)] <=
                            acts.costs[static_cast<std::size_t>(chosen)] +
                                kFeasibilityTol)
          chosen = inc;
      }
    } else {
      for (int ci : acts.by_cost) {
        RateAllocation trial = aux;
        trial.w[sj] = weights_of(j, ci);
        std::vector<double> p = predict_for(x, to_rate_matrix(trial, topo_));
        bool ok = true;
        for (int i : receivers) {
          if (theta - p[static_cast<std::size_t>(i)] > kFeasibilityTol) {
            ok = false;
            break;
          }
        }
        if (ok) {
          chosen = ci;
          break;
        }
      }
    }

    if (chosen >= 0) {
      res.allocation.w[sj] = weights_of(j, chosen);
      incumbent_[sj] = acts.compositions[static_cast<std::size_t>(chosen)];
    } else {
      res.allocation.w[sj] = aux.w[sj];
      incumbent_[sj].reset();
    }
  }

  // Receiver-level bookkeeping under the assembled allocation.
  std::vector<double> p = predict_for(x, to_rate_matrix(res.allocation, topo_));
  for (int i = 0; i < n; ++i) {
    const auto si = static_cast<std::size_t>(i);
    const double xi = x.informed(i) ? 1.0 : 0.0;
    res.predicted[si] = xi == 1.0 ? 1.0 : p[si];
    res.residual[si] = (1.0 - res.predicted[si]) - (1.0 - xi) * decay;
    if (res.residual[si] > kFeasibilityTol) {
      res.node_feasible[si] = 0;
      res.feasible = false;
    }
  }
}

std::vector<double> RhcController::predict_for(const NetworkState& x,
                                               const RateMatrix& m) {
  if (cfg_.predictor == Predictor::kExactCtmc) {
    return predict_marginals(x, topo_, m, cfg_.dt, cfg_.exact_cap);
  }
  ClosureState c =
      integrate_closure(closure_from_state(x), topo_, m, cfg_.dt);
  std::vector<double> p(c.upper_inf.size());
  auto bounds = informed_bounds(c);
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = bounds[i].lo;
  return p;
}

int RhcController::candidate_index(int node,
                                   const std::vector<int>& composition) const {
  const auto& comps = actions_[static_cast<std::size_t>(node)].compositions;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (comps[c] == composition) return static_cast<int>(c);
  }
  return -1;
}

void RhcController::apply_baseline_floor(RateAllocation& a) const {
  const double eps = cfg_.mu / (10.0 * static_cast<double>(cfg_.grid));
  std::vector<int> parent = bfs_tree_parents(topo_, cfg_.baseline_root);
  for (int child = 0; child < topo_.n; ++child) {
    int par = parent[static_cast<std::size_t>(child)];
    if (par < 0) continue;
    int node, pos;
    if (a.orientation == BudgetOrientation::kInEdges) {
      node = child;
      pos = find_position(topo_.in_neighbors[static_cast<std::size_t>(child)],
                          par);
    } else {
      node = par;
      pos = find_position(topo_.out_neighbors[static_cast<std::size_t>(par)],
                          child);
    }
    auto& row = a.w[static_cast<std::size_t>(node)];
    if (row.empty()) continue;
    double& w = row[static_cast<std::size_t>(pos)];
    if (w >= eps) continue;
    const double old = w;
    const double scale = (cfg_.mu - eps) / (cfg_.mu - old);
    for (double& other : row) other *= scale;
    w = eps;
  }
}

RhcResult solve_rhc(const NetworkState& x, const Topology& t,
                    const ControllerConfig& cfg) {
  RhcController controller(t, cfg);
  return controller.solve(x);
}

}  // namespace bcast
