#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bcast/controller.hpp"

namespace bcast {

enum class ModelKind { kOpenLoop, kCtmc, kRmc };

const char* model_name(ModelKind m);

/// Experiment description parsed from flat "key=value" text. Graph comes
/// either from (n, p, graph_seed) or from an edge-list file.
struct ExperimentConfig {
  // graph
  int n = 0;
  double p = -1.0;
  std::uint64_t graph_seed = 1;
  std::string edge_file;

  ModelKind model = ModelKind::kOpenLoop;
  double mu = 0.0;
  double dt = 0.0;
  double r = 0.0;
  int grid = 4;
  int trials = 1;
  std::uint64_t seed = 1;            // base of the seed ladder
  std::vector<std::uint64_t> seeds;  // explicit list overrides the ladder
  double bin_width = 0.0;            // 0 = auto (longest completion / 6)
  BudgetOrientation budget = BudgetOrientation::kInEdges;
  int root = -1;  // -1 = per-trial random among spanning roots
  int exact_cap = kDefaultExactCap;
  std::string out_dir = "out";

  /// The seed list actually used: explicit seeds, or seed, seed+1, ...
  std::vector<std::uint64_t> resolved_seeds() const;

  ControllerConfig controller() const;
};

/// Parses whitespace-separated "key=value" assignments ('#' starts a
/// comment). Unknown keys, malformed values, missing required keys and
/// range violations raise std::invalid_argument naming the field.
ExperimentConfig parse_config(const std::string& text);

/// Canonical flat text; parse_config(serialize_config(c)) round-trips.
std::string serialize_config(const ExperimentConfig& c);

}  // namespace bcast
