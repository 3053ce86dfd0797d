#include "hyplan/cli/config.hpp"

#include <yaml-cpp/yaml.h>

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace hyplan::cli {

const char* to_string(PlannerKind kind) { return kind == PlannerKind::kHyrrt ? "hyrrt" : "hysst"; }

double negative_x_travel(const SolutionPair& edge) {
  double travel = 0.0;
  for (std::size_t k = 1; k < edge.size(); ++k) travel += std::abs(edge[k].state[0] - edge[k - 1].state[0]);
  return -travel;
}

namespace {

class Reader {
 public:
  explicit Reader(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(const YAML::Node& node, const std::string& message) const {
    std::ostringstream out;
    out << source_;
    if (node.IsDefined() && node.Mark().line >= 0) out << ":" << node.Mark().line + 1;
    out << ": " << message;
    throw ConfigError(out.str());
  }

  void expect_map(const YAML::Node& node, const std::string& what) const {
    if (!node.IsMap()) fail(node, what + " must be a mapping");
  }

  void check_keys(const YAML::Node& node, const std::set<std::string>& allowed, const std::string& what) const {
    for (const auto& kv : node) {
      const auto key = kv.first.as<std::string>();
      if (!allowed.count(key)) fail(kv.first, "unknown key '" + key + "' in " + what);
    }
  }

  double real(const YAML::Node& node, const std::string& what) const {
    if (!node.IsScalar()) fail(node, what + " must be a number");
    try {
      return node.as<double>();
    } catch (const YAML::Exception&) {
      fail(node, what + " must be a number, got '" + node.Scalar() + "'");
    }
  }

  long long integer(const YAML::Node& node, const std::string& what) const {
    if (!node.IsScalar()) fail(node, what + " must be an integer");
    try {
      return node.as<long long>();
    } catch (const YAML::Exception&) {
      fail(node, what + " must be an integer, got '" + node.Scalar() + "'");
    }
  }

  std::uint64_t unsigned_integer(const YAML::Node& node, const std::string& what) const {
    if (!node.IsScalar() || (!node.Scalar().empty() && node.Scalar()[0] == '-')) {
      fail(node, what + " must be a nonnegative integer");
    }
    try {
      return node.as<std::uint64_t>();
    } catch (const YAML::Exception&) {
      fail(node, what + " must be a nonnegative integer, got '" + node.Scalar() + "'");
    }
  }

  bool boolean(const YAML::Node& node, const std::string& what) const {
    try {
      return node.as<bool>();
    } catch (const YAML::Exception&) {
      fail(node, what + " must be true or false");
    }
  }

  std::string text(const YAML::Node& node, const std::string& what) const {
    if (!node.IsScalar()) fail(node, what + " must be a string");
    return node.Scalar();
  }

  Vector vector(const YAML::Node& node, const std::string& what) const {
    if (!node.IsSequence()) fail(node, what + " must be a list of numbers");
    Vector v(static_cast<Eigen::Index>(node.size()));
    for (std::size_t i = 0; i < node.size(); ++i) v[static_cast<Eigen::Index>(i)] = real(node[i], what);
    return v;
  }

  std::vector<Rect> rects(const YAML::Node& node, const std::string& what) const {
    if (!node.IsSequence()) fail(node, what + " must be a list of [x_min, x_max, y_min, y_max]");
    std::vector<Rect> out;
    for (const auto& item : node) {
      const Vector v = vector(item, what);
      if (v.size() != 4) fail(item, what + " entries need 4 numbers");
      if (v[0] > v[1] || v[2] > v[3]) fail(item, what + " entry has min > max");
      out.push_back({v[0], v[1], v[2], v[3]});
    }
    return out;
  }

 private:
  std::string source_;
};

void parse_system(const Reader& r, const YAML::Node& node, RunConfig& cfg) {
  r.expect_map(node, "system");
  if (!node["name"]) r.fail(node, "system.name is required");
  cfg.system_name = r.text(node["name"], "system.name");
  auto num = [&](const char* key, double& slot) {
    if (node[key]) slot = r.real(node[key], std::string("system.") + key);
  };
  if (cfg.system_name == "bouncing_ball") {
    r.check_keys(node, {"name", "e", "gravity", "h_max", "v_max"}, "system");
    auto& c = cfg.bouncing_ball;
    num("e", c.e);
    num("gravity", c.gravity);
    num("h_max", c.h_max);
    num("v_max", c.v_max);
  } else if (cfg.system_name == "pinball") {
    r.check_keys(node,
                 {"name", "walls", "paddles", "e_wall", "e_paddle", "u_max", "paddle_impulse_max", "surface_band",
                  "gravity", "v_max", "a_max"},
                 "system");
    auto& c = cfg.pinball;
    if (node["walls"]) c.walls = r.rects(node["walls"], "system.walls");
    if (node["paddles"]) c.paddles = r.rects(node["paddles"], "system.paddles");
    num("e_wall", c.e_wall);
    num("e_paddle", c.e_paddle);
    num("u_max", c.u_max);
    num("paddle_impulse_max", c.paddle_impulse_max);
    num("surface_band", c.surface_band);
    num("gravity", c.gravity);
    num("v_max", c.v_max);
    num("a_max", c.a_max);
  } else if (cfg.system_name == "multicopter") {
    r.check_keys(node,
                 {"name", "walls", "e", "kappa", "u_max", "surface_band", "v_max", "a_max", "width", "height"},
                 "system");
    auto& c = cfg.multicopter;
    if (node["walls"]) c.walls = r.rects(node["walls"], "system.walls");
    num("e", c.e);
    num("kappa", c.kappa);
    num("u_max", c.u_max);
    num("surface_band", c.surface_band);
    num("v_max", c.v_max);
    num("a_max", c.a_max);
    num("width", c.width);
    num("height", c.height);
  } else {
    r.fail(node["name"], "unknown system '" + cfg.system_name + "' (expected bouncing_ball, pinball or multicopter)");
  }
}

void parse_planner(const Reader& r, const YAML::Node& node, RunConfig& cfg) {
  r.expect_map(node, "planner");
  if (!node["name"]) r.fail(node, "planner.name is required");
  const std::string name = r.text(node["name"], "planner.name");
  std::set<std::string> keys{"name", "p", "K", "Tm", "flow_step", "tau_reach", "max_sampling_attempts"};
  if (name == "hyrrt") {
    cfg.planner = PlannerKind::kHyrrt;
  } else if (name == "hysst") {
    cfg.planner = PlannerKind::kHysst;
    keys.insert({"eps_bn", "eps_s", "batch_size", "cost", "instrumented"});
  } else {
    r.fail(node["name"], "unknown planner '" + name + "' (expected hyrrt or hysst)");
  }
  r.check_keys(node, keys, "planner");

  auto& p = cfg.params;
  auto positive_count = [&](const char* key) {
    const long long v = r.integer(node[key], std::string("planner.") + key);
    if (v < 1) r.fail(node[key], std::string("planner.") + key + " must be at least 1");
    return v;
  };
  if (node["p"]) p.p = r.real(node["p"], "planner.p");
  if (node["K"]) p.K = static_cast<std::size_t>(positive_count("K"));
  if (node["Tm"]) p.flow.max_flow_time = r.real(node["Tm"], "planner.Tm");
  if (node["flow_step"]) p.flow.flow_step = r.real(node["flow_step"], "planner.flow_step");
  if (node["tau_reach"]) p.tau_reach = r.real(node["tau_reach"], "planner.tau_reach");
  if (node["max_sampling_attempts"]) p.max_sampling_attempts = static_cast<int>(positive_count("max_sampling_attempts"));
  if (node["eps_bn"]) p.eps_bn = r.real(node["eps_bn"], "planner.eps_bn");
  if (node["eps_s"]) p.eps_s = r.real(node["eps_s"], "planner.eps_s");
  if (node["batch_size"]) p.batch_size = static_cast<std::size_t>(positive_count("batch_size"));
  if (node["instrumented"]) p.instrumented = r.boolean(node["instrumented"], "planner.instrumented");
  if (node["cost"]) {
    const std::string cost = r.text(node["cost"], "planner.cost");
    if (cost == "hybrid_time") {
      cfg.cost = CostKind::kHybridTime;
      p.cost = hybrid_time_cost;
    } else if (cost == "negative_x_travel") {
      cfg.cost = CostKind::kNegativeXTravel;
      p.cost = negative_x_travel;
    } else {
      r.fail(node["cost"], "unknown cost '" + cost + "' (expected hybrid_time or negative_x_travel)");
    }
  }
  try {
    p.check();
  } catch (const std::exception& e) {
    r.fail(node, std::string("invalid planner parameters: ") + e.what());
  }
}

Box parse_goal(const Reader& r, const YAML::Node& node, int n) {
  if (!node.IsSequence()) r.fail(node, "goal must be a list with one [min, max] or null per state dimension");
  if (static_cast<int>(node.size()) != n) {
    r.fail(node, "goal has " + std::to_string(node.size()) + " entries, the system has " + std::to_string(n) +
                     " state dimensions");
  }
  constexpr double inf = std::numeric_limits<double>::infinity();
  Box box;
  for (const auto& entry : node) {
    if (entry.IsNull()) {
      box.push_back({-inf, inf});
      continue;
    }
    if (!entry.IsSequence() || entry.size() != 2) r.fail(entry, "goal entries must be [min, max] or null");
    Interval iv{-inf, inf};
    if (!entry[0].IsNull()) iv.min = r.real(entry[0], "goal min");
    if (!entry[1].IsNull()) iv.max = r.real(entry[1], "goal max");
    if (iv.min > iv.max) r.fail(entry, "goal entry has min > max");
    box.push_back(iv);
  }
  return box;
}

std::vector<Vector> default_initial_states(const RunConfig& cfg) {
  if (cfg.system_name == "pinball") return pinball_initial_states(cfg.pinball);
  if (cfg.system_name == "multicopter") {
    Vector x(6);
    x << 1.0, 2.0, 0.0, 0.0, 0.0, 0.0;
    return {x};
  }
  Vector x(2);
  x << 1.0, 0.0;
  return {x};
}

void apply_override(YAML::Node& root, const Override& o, const Reader& r) {
  std::string section = "planner";
  std::string key = o.first;
  if (const auto dot = key.find('.'); dot != std::string::npos) {
    section = key.substr(0, dot);
    key = key.substr(dot + 1);
  }
  YAML::Node value;
  try {
    value = YAML::Load(o.second);
  } catch (const YAML::Exception& e) {
    r.fail(YAML::Node(), "cannot parse override value '" + o.second + "' for " + o.first);
  }
  if (key.empty()) r.fail(YAML::Node(), "empty override key in '" + o.first + "'");
  if (section == "seed" || section == "output") {
    r.fail(YAML::Node(), "override '" + o.first + "' does not name a section key");
  }
  if (!root[section] || !root[section].IsMap()) {
    r.fail(YAML::Node(), "override '" + o.first + "' refers to missing section '" + section + "'");
  }
  root[section][key] = value;
}

}  // namespace

RunConfig parse_config(const std::string& text, const std::string& source, const std::vector<Override>& overrides) {
  const Reader r(source);
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    throw ConfigError(source + ":" + std::to_string(e.mark.line + 1) + ": " + e.msg);
  }
  if (!root.IsMap()) r.fail(root, "top level must be a mapping");
  r.check_keys(root, {"system", "planner", "initial_states", "goal", "seed", "output"}, "config");
  if (!root["system"]) r.fail(root, "missing required section 'system'");
  if (!root["planner"]) r.fail(root, "missing required section 'planner'");
  if (!root["goal"]) r.fail(root, "missing required key 'goal'");
  for (const auto& o : overrides) apply_override(root, o, r);

  RunConfig cfg;
  parse_system(r, root["system"], cfg);
  parse_planner(r, root["planner"], cfg);

  HybridSystem sys;
  try {
    sys = make_system(cfg);
  } catch (const std::exception& e) {
    r.fail(root["system"], std::string("invalid system parameters: ") + e.what());
  }

  if (root["initial_states"]) {
    const YAML::Node& node = root["initial_states"];
    if (!node.IsSequence() || node.size() == 0) r.fail(node, "initial_states must be a nonempty list of states");
    for (const auto& item : node) {
      Vector x = r.vector(item, "initial state");
      if (x.size() != sys.state_dim) {
        r.fail(item, "initial state has " + std::to_string(x.size()) + " entries, expected " +
                         std::to_string(sys.state_dim));
      }
      if (!box_contains(sys.state_bounds, x)) r.fail(item, "initial state lies outside the state bounds");
      cfg.initial_states.push_back(std::move(x));
    }
  } else {
    cfg.initial_states = default_initial_states(cfg);
  }
  cfg.goal = parse_goal(r, root["goal"], sys.state_dim);
  if (root["seed"]) cfg.seed = r.unsigned_integer(root["seed"], "seed");
  if (root["output"]) cfg.output_dir = r.text(root["output"], "output");
  return cfg;
}

RunConfig load_config(const std::string& path, const std::vector<Override>& overrides) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open config file");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), path, overrides);
}

HybridSystem make_system(const RunConfig& cfg) {
  if (cfg.system_name == "bouncing_ball") return make_bouncing_ball(cfg.bouncing_ball);
  if (cfg.system_name == "pinball") return make_pinball(cfg.pinball);
  if (cfg.system_name == "multicopter") return make_multicopter(cfg.multicopter);
  throw ConfigError("unknown system '" + cfg.system_name + "'");
}

PlannerProblem make_problem(const RunConfig& cfg) {
  PlannerProblem problem;
  problem.system = make_system(cfg);
  problem.initial_states = cfg.initial_states;
  problem.in_goal = [goal = cfg.goal](const Vector& x) { return box_contains(goal, x); };
  return problem;
}

}  // namespace hyplan::cli
