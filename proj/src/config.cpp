#include "bcast/config.hpp"

#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

namespace bcast {

const char* model_name(ModelKind m) {
  switch (m) {
    case ModelKind::kOpenLoop: return "open-loop";
    case ModelKind::kCtmc: return "ctmc";
    case ModelKind::kRmc: return "rmc";
  }
  return "?";
}

std::vector<std::uint64_t> ExperimentConfig::resolved_seeds() const {
  if (!seeds.empty()) return seeds;
  std::vector<std::uint64_t> ladder(static_cast<std::size_t>(trials));
  for (int k = 0; k < trials; ++k)
    ladder[static_cast<std::size_t>(k)] = seed + static_cast<std::uint64_t>(k);
  return ladder;
}

ControllerConfig ExperimentConfig::controller() const {
  ControllerConfig cc;
  cc.dt = dt;
  cc.r = r;
  cc.mu = mu;
  cc.grid = grid;
  cc.orientation = budget;
  cc.exact_cap = exact_cap;
  switch (model) {
    case ModelKind::kOpenLoop: cc.predictor = Predictor::kOpenLoop; break;
    case ModelKind::kCtmc: cc.predictor = Predictor::kExactCtmc; break;
    case ModelKind::kRmc: cc.predictor = Predictor::kMomentClosure; break;
  }
  return cc;
}

namespace {

[[noreturn]] void bad_field(const std::string& key, const std::string& why) {
  throw std::invalid_argument("config: field '" + key + "': " + why);
}

long long parse_int(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(value, &used);
  } catch (const std::exception&) {
    bad_field(key, "expected an integer, got '" + value + "'");
  }
  if (used != value.size())
    bad_field(key, "expected an integer, got '" + value + "'");
  return v;
}

double parse_real(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &used);
  } catch (const std::exception&) {
    bad_field(key, "expected a number, got '" + value + "'");
  }
  if (used != value.size())
    bad_field(key, "expected a number, got '" + value + "'");
  return v;
}

std::uint64_t parse_seed(const std::string& key, const std::string& value) {
  long long v = parse_int(key, value);
  if (v < 0) bad_field(key, "must be >= 0");
  return static_cast<std::uint64_t>(v);
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
  // Strip comments, then read whitespace-separated assignments.
  std::string stripped;
  stripped.reserve(text.size());
  bool in_comment = false;
  for (char ch : text) {
    if (ch == '#') in_comment = true;
    if (ch == '\n') in_comment = false;
    stripped.push_back(in_comment ? ' ' : ch);
  }

  std::map<std::string, std::string> kv;
  std::istringstream is(stripped);
  std::string token;
  while (is >> token) {
    auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0)
      throw std::invalid_argument("config: expected key=value, got '" + token +
                                  "'");
    std::string key = token.substr(0, eq);
    std::string value = token.substr(eq + 1);
    if (!kv.emplace(key, value).second)
      throw std::invalid_argument("config: duplicate key '" + key + "'");
  }

  ExperimentConfig c;
  bool have_n = false, have_p = false, have_model = false;
  bool have_mu = false, have_dt = false, have_r = false, have_trials = false;

  for (const auto& [key, value] : kv) {
    if (key == "n") {
      long long v = parse_int(key, value);
      if (v < 1) bad_field(key, "must be >= 1");
      c.n = static_cast<int>(v);
      have_n = true;
    } else if (key == "p") {
      c.p = parse_real(key, value);
      if (c.p < 0.0 || c.p > 1.0) bad_field(key, "must be in [0, 1]");
      have_p = true;
    } else if (key == "graph_seed") {
      c.graph_seed = parse_seed(key, value);
    } else if (key == "edge_file") {
      if (value.empty()) bad_field(key, "must not be empty");
      c.edge_file = value;
    } else if (key == "model") {
      if (value == "open-loop") c.model = ModelKind::kOpenLoop;
      else if (value == "ctmc") c.model = ModelKind::kCtmc;
      else if (value == "rmc") c.model = ModelKind::kRmc;
      else bad_field(key, "expected open-loop|ctmc|rmc, got '" + value + "'");
      have_model = true;
    } else if (key == "mu") {
      c.mu = parse_real(key, value);
      if (c.mu <= 0.0) bad_field(key, "must be > 0");
      have_mu = true;
    } else if (key == "dt") {
      c.dt = parse_real(key, value);
      if (c.dt <= 0.0) bad_field(key, "must be > 0");
      have_dt = true;
    } else if (key == "r") {
      c.r = parse_real(key, value);
      if (c.r <= 0.0) bad_field(key, "must be > 0");
      have_r = true;
    } else if (key == "grid") {
      long long v = parse_int(key, value);
      if (v < 1) bad_field(key, "must be >= 1");
      c.grid = static_cast<int>(v);
    } else if (key == "trials") {
      long long v = parse_int(key, value);
      if (v < 1) bad_field(key, "must be >= 1");
      c.trials = static_cast<int>(v);
      have_trials = true;
    } else if (key == "seed") {
      c.seed = parse_seed(key, value);
    } else if (key == "seeds") {
      std::string item;
      std::istringstream ss(value);
      while (std::getline(ss, item, ',')) {
        if (item.empty()) bad_field(key, "empty entry in list");
        c.seeds.push_back(parse_seed(key, item));
      }
      if (c.seeds.empty()) bad_field(key, "must list at least one seed");
    } else if (key == "bin_width") {
      c.bin_width = parse_real(key, value);
      if (c.bin_width < 0.0) bad_field(key, "must be >= 0 (0 = auto)");
    } else if (key == "budget") {
      if (value == "in") c.budget = BudgetOrientation::kInEdges;
      else if (value == "out") c.budget = BudgetOrientation::kOutEdges;
      else bad_field(key, "expected in|out, got '" + value + "'");
    } else if (key == "root") {
      long long v = parse_int(key, value);
      if (v < -1) bad_field(key, "must be -1 (random) or a node id");
      c.root = static_cast<int>(v);
    } else if (key == "exact_cap") {
      long long v = parse_int(key, value);
      if (v < 1 || v > 30) bad_field(key, "must be in [1, 30]");
      c.exact_cap = static_cast<int>(v);
    } else if (key == "out_dir") {
      if (value.empty()) bad_field(key, "must not be empty");
      c.out_dir = value;
    } else {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }

  if (!have_model) bad_field("model", "required (open-loop|ctmc|rmc)");
  if (!have_mu) bad_field("mu", "required");
  if (!have_dt) bad_field("dt", "required");
  if (!have_r) bad_field("r", "required");
  if (!have_trials && c.seeds.empty()) bad_field("trials", "required");
  if (!c.seeds.empty()) c.trials = static_cast<int>(c.seeds.size());

  if (c.edge_file.empty()) {
    if (!have_n) bad_field("n", "required unless edge_file is given");
    if (!have_p) bad_field("p", "required unless edge_file is given");
  } else if (have_n || have_p) {
    throw std::invalid_argument(
        "config: give either edge_file or (n, p), not both");
  }

  if (c.model == ModelKind::kCtmc && !c.edge_file.empty()) {
    // n unknown until the file is read; checked again by run().
  } else if (c.model == ModelKind::kCtmc && c.n > c.exact_cap) {
    throw std::invalid_argument(
        "config: model=ctmc needs n <= " + std::to_string(c.exact_cap) +
        " (2^n joint states); use model=rmc for larger networks");
  }
  if (c.root >= 0 && have_n && c.root >= c.n)
    bad_field("root", "node id out of range");
  return c;
}

std::string serialize_config(const ExperimentConfig& c) {
  std::ostringstream os;
  char buf[64];
  auto real = [&buf](double v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  if (c.edge_file.empty()) {
    os << "n=" << c.n << "\n";
    os << "p=" << real(c.p) << "\n";
    os << "graph_seed=" << c.graph_seed << "\n";
  } else {
    os << "edge_file=" << c.edge_file << "\n";
  }
  os << "model=" << model_name(c.model) << "\n";
  os << "mu=" << real(c.mu) << "\n";
  os << "dt=" << real(c.dt) << "\n";
  os << "r=" << real(c.r) << "\n";
  os << "grid=" << c.grid << "\n";
  if (c.seeds.empty()) {
    os << "trials=" << c.trials << "\n";
    os << "seed=" << c.seed << "\n";
  } else {
    os << "seeds=";
    for (std::size_t k = 0; k < c.seeds.size(); ++k) {
      if (k) os << ",";
      os << c.seeds[k];
    }
    os << "\n";
  }
  os << "bin_width=" << real(c.bin_width) << "\n";
  os << "budget=" << (c.budget == BudgetOrientation::kInEdges ? "in" : "out")
     << "\n";
  os << "root=" << c.root << "\n";
  os << "exact_cap=" << c.exact_cap << "\n";
  os << "out_dir=" << c.out_dir << "\n";
  return os.str();
}

}  // namespace bcast
