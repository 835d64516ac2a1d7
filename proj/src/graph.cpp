#include "bcast/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <stdexcept>

#include "bcast/rng.hpp"

namespace bcast {

std::size_t Topology::edge_count() const {
  std::size_t c = 0;
  for (const auto& nbrs : in_neighbors) c += nbrs.size();
  return c;
}

bool Topology::has_edge(int from, int to) const {
  const auto& nbrs = in_neighbors[static_cast<std::size_t>(to)];
  return std::binary_search(nbrs.begin(), nbrs.end(), from);
}

Topology make_topology(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1) throw std::invalid_argument("topology: n must be >= 1");
  Topology t;
  t.n = n;
  t.in_neighbors.assign(static_cast<std::size_t>(n), {});
  t.out_neighbors.assign(static_cast<std::size_t>(n), {});
  std::set<std::pair<int, int>> seen;
  for (const auto& [from, to] : edges) {
    if (from < 0 || from >= n || to < 0 || to >= n)
      throw std::invalid_argument("topology: edge endpoint out of range");
    if (from == to)
      throw std::invalid_argument("topology: self-loops are not allowed");
    if (!seen.insert({from, to}).second)
      throw std::invalid_argument("topology: duplicate edge");
    t.in_neighbors[static_cast<std::size_t>(to)].push_back(from);
    t.out_neighbors[static_cast<std::size_t>(from)].push_back(to);
  }
  for (auto& nbrs : t.in_neighbors) std::sort(nbrs.begin(), nbrs.end());
  for (auto& nbrs : t.out_neighbors) std::sort(nbrs.begin(), nbrs.end());
  return t;
}

Topology generate_erdos_renyi(int n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("erdos_renyi: n must be >= 1");
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("erdos_renyi: p must be in [0, 1]");
  Rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (i == j) continue;
      if (rng.bernoulli(p)) edges.emplace_back(j, i);
    }
  }
  return make_topology(n, edges);
}

bool has_spanning_tree(const Topology& t, int root) {
  if (root < 0 || root >= t.n)
    throw std::invalid_argument("has_spanning_tree: root out of range");
  std::vector<char> visited(static_cast<std::size_t>(t.n), 0);
  std::deque<int> frontier{root};
  visited[static_cast<std::size_t>(root)] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    int v = frontier.front();
    frontier.pop_front();
    for (int w : t.out_neighbors[static_cast<std::size_t>(v)]) {
      if (!visited[static_cast<std::size_t>(w)]) {
        visited[static_cast<std::size_t>(w)] = 1;
        ++reached;
        frontier.push_back(w);
      }
    }
  }
  return reached == t.n;
}

const std::vector<int>& in_neighbors(const Topology& t, int i) {
  if (i < 0 || i >= t.n)
    throw std::invalid_argument("in_neighbors: node out of range");
  return t.in_neighbors[static_cast<std::size_t>(i)];
}

double RateMatrix::rate(const Topology& t, int from, int to) const {
  const auto& nbrs = t.in_neighbors[static_cast<std::size_t>(to)];
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), from);
  if (it == nbrs.end() || *it != from) return 0.0;
  auto k = static_cast<std::size_t>(it - nbrs.begin());
  return w[static_cast<std::size_t>(to)][k];
}

RateMatrix zero_rates(const Topology& t) {
  RateMatrix r;
  r.w.resize(static_cast<std::size_t>(t.n));
  for (int i = 0; i < t.n; ++i) {
    r.w[static_cast<std::size_t>(i)].assign(
        t.in_neighbors[static_cast<std::size_t>(i)].size(), 0.0);
  }
  return r;
}

RateMatrix uniform_rates(const Topology& t, double mu) {
  RateMatrix r = zero_rates(t);
  for (int i = 0; i < t.n; ++i) {
    auto& row = r.w[static_cast<std::size_t>(i)];
    if (!row.empty()) {
      double share = mu / static_cast<double>(row.size());
      std::fill(row.begin(), row.end(), share);
    }
  }
  return r;
}

void write_edge_list(std::ostream& os, const Topology& t, const RateMatrix& r) {
  os << t.n << "\n";
  char buf[64];
  for (int i = 0; i < t.n; ++i) {
    const auto& nbrs = t.in_neighbors[static_cast<std::size_t>(i)];
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      std::snprintf(buf, sizeof(buf), "%.17g",
                    r.w[static_cast<std::size_t>(i)][k]);
      os << nbrs[k] << " " << i << " " << buf << "\n";
    }
  }
}

WeightedGraph read_edge_list(std::istream& is) {
  int n = 0;
  if (!(is >> n) || n < 1)
    throw std::runtime_error("edge list: bad or missing node count");
  std::vector<std::pair<int, int>> edges;
  std::vector<double> omegas;
  int j = 0, i = 0;
  double omega = 0.0;
  while (is >> j >> i >> omega) {
    if (omega < 0.0) throw std::runtime_error("edge list: negative rate");
    edges.emplace_back(j, i);
    omegas.push_back(omega);
  }
  if (!is.eof() && is.fail())
    throw std::runtime_error("edge list: malformed line");
  Topology t = make_topology(n, edges);
  RateMatrix r = zero_rates(t);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [from, to] = edges[e];
    const auto& nbrs = t.in_neighbors[static_cast<std::size_t>(to)];
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), from);
    r.w[static_cast<std::size_t>(to)][static_cast<std::size_t>(it - nbrs.begin())] =
        omegas[e];
  }
  return {std::move(t), std::move(r)};
}

void save_edge_list(const std::string& path, const Topology& t,
                    const RateMatrix& r) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  write_edge_list(os, t, r);
  if (!os) throw std::runtime_error("write failed: " + path);
}

WeightedGraph load_edge_list(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open: " + path);
  return read_edge_list(is);
}

}  // namespace bcast
