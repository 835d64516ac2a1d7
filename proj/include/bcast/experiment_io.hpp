#pragma once

#include <iosfwd>
#include <string>

#include "bcast/config.hpp"
#include "bcast/graph.hpp"
#include "bcast/simulator.hpp"

namespace bcast {

inline constexpr const char* kVersion = "0.1.0";

struct RunOutput {
  ExperimentConfig effective;  // config with the accepted graph seed
  WeightedGraph graph;
  ExperimentSummary summary;
  std::string out_dir;
};

/// Loads or generates the experiment graph. Generated graphs advance the
/// graph seed until the requested root (or some node, when the root is
/// random) spans the graph; the accepted seed is reported back so a rerun
/// reproduces the same graph immediately.
WeightedGraph prepare_graph(ExperimentConfig& c);

/// Full experiment run: prepares the graph, simulates all trials, and
/// writes summary.csv, bins.csv, events-<k>.csv, decisions-<k>.csv and a
/// re-runnable manifest.txt into the configured output directory.
RunOutput run_to_files(const ExperimentConfig& c);

void write_summary_csv(std::ostream& os, ModelKind model,
                       const ExperimentSummary& s);
void write_bins_csv(std::ostream& os, const ExperimentSummary& s,
                    double bin_width);
void write_events_csv(std::ostream& os, const TrialRecord& trial);
void write_decisions_csv(std::ostream& os, const TrialRecord& trial);
std::string manifest_text(const ExperimentConfig& effective);

}  // namespace bcast
