#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace bcast {

/// Directed communication graph. An edge (j, i) means node j can transmit
/// to node i; in_neighbors[i] lists the sources j of node i, sorted.
struct Topology {
  int n = 0;
  std::vector<std::vector<int>> in_neighbors;
  std::vector<std::vector<int>> out_neighbors;

  std::size_t edge_count() const;
  bool has_edge(int from, int to) const;
};

/// Builds a topology from ordered edge pairs (from, to) and validates it:
/// ids in range, no self-loops, no duplicate edges.
Topology make_topology(int n, const std::vector<std::pair<int, int>>& edges);

/// Directed G(n, p): every ordered pair (j, i), j != i, is an edge
/// independently with probability p. Pairs are visited in row-major order
/// (source-major), one uniform draw per pair, so a seed pins the graph.
Topology generate_erdos_renyi(int n, double p, std::uint64_t seed);

/// True iff every node is reachable from root along edge directions.
bool has_spanning_tree(const Topology& t, int root);

const std::vector<int>& in_neighbors(const Topology& t, int i);

/// Per-edge transmission rates, stored parallel to in_neighbors:
/// w[i][k] is the rate on the edge (in_neighbors[i][k] -> i).
struct RateMatrix {
  std::vector<std::vector<double>> w;

  double rate(const Topology& t, int from, int to) const;
};

RateMatrix zero_rates(const Topology& t);

/// Splits a per-node budget mu uniformly over each node's in-edges.
RateMatrix uniform_rates(const Topology& t, double mu);

struct WeightedGraph {
  Topology topology;
  RateMatrix rates;
};

/// Edge-list text format: first line "n", then one "j i omega" line per
/// edge (j transmits to i at rate omega). Rates round-trip exactly.
void write_edge_list(std::ostream& os, const Topology& t, const RateMatrix& r);
WeightedGraph read_edge_list(std::istream& is);

void save_edge_list(const std::string& path, const Topology& t,
                    const RateMatrix& r);
WeightedGraph load_edge_list(const std::string& path);

}  // namespace bcast
