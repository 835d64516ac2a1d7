#include "bcast/experiment_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace bcast {

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path.string());
  return os;
}

}  // namespace

WeightedGraph prepare_graph(ExperimentConfig& c) {
  if (!c.edge_file.empty()) {
    WeightedGraph g = load_edge_list(c.edge_file);
    c.n = g.topology.n;
    if (c.model == ModelKind::kCtmc && g.topology.n > c.exact_cap)
      throw std::invalid_argument(
          "config: model=ctmc needs n <= " + std::to_string(c.exact_cap));
    if (c.root >= g.topology.n)
      throw std::invalid_argument("config: field 'root': node id out of range");
    if (c.root >= 0 && !has_spanning_tree(g.topology, c.root))
      throw std::invalid_argument(
          "config: fixed root does not span the loaded graph");
    return g;
  }

  const int kMaxAttempts = 1000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::uint64_t seed = c.graph_seed + static_cast<std::uint64_t>(attempt);
    Topology t = generate_erdos_renyi(c.n, c.p, seed);
    bool ok = false;
    if (c.root >= 0) {
      ok = has_spanning_tree(t, c.root);
    } else {
      for (int v = 0; v < t.n && !ok; ++v) ok = has_spanning_tree(t, v);
    }
    if (ok) {
      c.graph_seed = seed;  // the accepted seed; reruns regenerate directly
      RateMatrix rates = uniform_rates(t, c.mu);
      return {std::move(t), std::move(rates)};
    }
  }
  throw std::runtime_error(
      "prepare_graph: no spanning-root graph found after 1000 seeds; "
      "raise p or n");
}

void write_summary_csv(std::ostream& os, ModelKind model,
                       const ExperimentSummary& s) {
  os << "model,fraction,mean_time,min_time,max_time\n";
  for (const FractionStats& fs : completion_stats(s)) {
    os << model_name(model) << "," << num(fs.fraction) << "," << num(fs.mean)
       << "," << num(fs.min) << "," << num(fs.max) << "\n";
  }
}

void write_bins_csv(std::ostream& os, const ExperimentSummary& s,
                    double bin_width) {
  os << "time_bin,mean_informed,min,max\n";
  for (const BinStats& bs : binned_informed(s, bin_width)) {
    os << num(bs.time) << "," << num(bs.mean) << "," << num(bs.min) << ","
       << num(bs.max) << "\n";
  }
}

void write_events_csv(std::ostream& os, const TrialRecord& trial) {
  os << "time,node\n";
  for (const TrialEvent& ev : trial.events) {
    os << num(ev.time) << "," << ev.node << "\n";
  }
}

void write_decisions_csv(std::ostream& os, const TrialRecord& trial) {
  os << "time,node,weights,slack,feasible\n";
  for (const WindowLog& w : trial.windows) {
    for (std::size_t i = 0; i < w.weights.size(); ++i) {
      os << num(w.time) << "," << i << ",";
      for (std::size_t k = 0; k < w.weights[i].size(); ++k) {
        if (k) os << ";";
        os << num(w.weights[i][k]);
      }
      os << "," << num(-w.residual[i]) << ","
         << (w.node_feasible[i] ? 1 : 0) << "\n";
    }
  }
}

std::string manifest_text(const ExperimentConfig& effective) {
  std::string text;
  text += "# bcast run manifest (re-runnable: bcast run <this file>)\n";
  text += std::string("# version=") + kVersion + "\n";
  text += serialize_config(effective);
  return text;
}

RunOutput run_to_files(const ExperimentConfig& c) {
  RunOutput out;
  out.effective = c;
  out.graph = prepare_graph(out.effective);
  out.out_dir = out.effective.out_dir;

  const std::vector<std::uint64_t> seeds = out.effective.resolved_seeds();
  out.summary = run_experiment(out.graph.topology,
                               out.effective.controller(), seeds,
                               out.effective.root);

  std::filesystem::path dir(out.out_dir);
  std::filesystem::create_directories(dir);

  {
    auto os = open_out(dir / "summary.csv");
    write_summary_csv(os, out.effective.model, out.summary);
  }
  {
    auto os = open_out(dir / "bins.csv");
    write_bins_csv(os, out.summary, out.effective.bin_width);
  }
  for (std::size_t k = 0; k < out.summary.trials.size(); ++k) {
    {
      auto os = open_out(dir / ("events-" + std::to_string(k) + ".csv"));
      write_events_csv(os, out.summary.trials[k]);
    }
    {
      auto os = open_out(dir / ("decisions-" + std::to_string(k) + ".csv"));
      write_decisions_csv(os, out.summary.trials[k]);
    }
  }
  {
    auto os = open_out(dir / "manifest.txt");
    os << manifest_text(out.effective);
  }
  return out;
}

}  // namespace bcast
