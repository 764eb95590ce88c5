// Copyright 2026 The Swarmkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "swarm/harness/scenario.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include "swarm/sim/trace.hpp"

namespace swarm::harness {

namespace {

using Kind = ConfigError::Kind;

[[noreturn]] void fail(Kind kind, const std::string& msg) { throw ConfigError(kind, msg); }

template <typename T>
T get(const YAML::Node& node, const char* key, T fallback) {
  const YAML::Node v = node[key];
  if (!v) return fallback;
  try {
    return v.as<T>();
  } catch (const YAML::Exception&) {
    fail(Kind::kParse, std::string("bad value for '") + key + "'");
  }
}

void check_keys(const YAML::Node& node, std::initializer_list<std::string_view> allowed,
                const std::string& where) {
  if (!node.IsMap()) fail(Kind::kParse, where + " must be a mapping");
  for (const auto& kv : node) {
    const auto key = kv.first.as<std::string>();
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      fail(Kind::kInvalidParameter, "unknown key '" + key + "' in " + where);
    }
  }
}

std::mt19937_64 init_rng(std::uint64_t seed, std::uint32_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    stream};
  return std::mt19937_64(seq);
}

constexpr std::uint32_t kHeadingStream = 0x48454144u;
constexpr std::uint32_t kOpinionStream = 0x4f50494eu;

sim::PlatformSpec parse_platform(const YAML::Node& node) {
  if (!node) fail(Kind::kParse, "scenario needs a platform");
  if (node.IsScalar()) return platform_preset(node.as<std::string>());
  check_keys(node,
             {"name", "beam_count", "range_min", "range_max", "radius", "max_linear",
              "max_angular", "protection_threshold"},
             "platform");
  sim::PlatformSpec p = platform_preset(get<std::string>(node, "name", ""));
  p.lidar.beam_count = get<std::size_t>(node, "beam_count", p.lidar.beam_count);
  p.lidar.range_min = get<double>(node, "range_min", p.lidar.range_min);
  p.lidar.range_max = get<double>(node, "range_max", p.lidar.range_max);
  p.radius = get<double>(node, "radius", p.radius);
  p.max_linear = get<double>(node, "max_linear", p.max_linear);
  p.max_angular = get<double>(node, "max_angular", p.max_angular);
  p.protection_threshold = get<double>(node, "protection_threshold", p.protection_threshold);
  return p;
}

core::DriveLimits parse_limits(const YAML::Node& node, core::DriveLimits limits) {
  limits.max_linear = get<double>(node, "max_linear", limits.max_linear);
  limits.max_angular = get<double>(node, "max_angular", limits.max_angular);
  limits.turn_gain = get<double>(node, "turn_gain", limits.turn_gain);
  return limits;
}

PatternConfig parse_pattern(const YAML::Node& node, const sim::PlatformSpec& platform,
                            const std::optional<OpinionSetup>& voting) {
  if (!node || !node.IsMap()) fail(Kind::kParse, "scenario needs a pattern mapping");
  const PatternKind kind = pattern_kind_from_string(get<std::string>(node, "kind", ""));
  const PatternDefaults d = pattern_defaults(platform);
  const core::DriveLimits limits = parse_limits(node, d.limits);
  PatternConfig pc{kind, {}};
  const OpinionSetup opinions = voting.value_or(OpinionSetup{});

  switch (kind) {
    case PatternKind::kAttraction: {
      check_keys(node, {"kind", "max_linear", "max_angular", "turn_gain", "attraction_range"},
                 "pattern");
      pc.params = patterns::AttractionConfig{
          get<double>(node, "attraction_range", d.attraction.attraction_range), limits};
      break;
    }
    case PatternKind::kDispersion: {
      check_keys(node, {"kind", "max_linear", "max_angular", "turn_gain", "dispersion_range"},
                 "pattern");
      pc.params = patterns::DispersionConfig{
          get<double>(node, "dispersion_range", d.dispersion.dispersion_range), limits};
      break;
    }
    case PatternKind::kDrive: {
      check_keys(node, {"kind", "max_linear", "max_angular", "turn_gain", "linear"}, "pattern");
      pc.params = patterns::DriveConfig{get<double>(node, "linear", d.drive.linear), limits};
      break;
    }
    case PatternKind::kRandomWalk: {
      check_keys(node,
                 {"kind", "max_linear", "max_angular", "turn_gain", "drive_min", "drive_max",
                  "turn_min", "turn_max", "linear", "angular", "curved_turn"},
                 "pattern");
      patterns::WalkConfig w = d.random_walk;
      w.drive_min = get<double>(node, "drive_min", w.drive_min);
      w.drive_max = get<double>(node, "drive_max", w.drive_max);
      w.turn_min = get<double>(node, "turn_min", w.turn_min);
      w.turn_max = get<double>(node, "turn_max", w.turn_max);
      w.linear = get<double>(node, "linear", w.linear);
      w.angular = get<double>(node, "angular", w.angular);
      w.curved_turn = get<bool>(node, "curved_turn", w.curved_turn);
      w.limits = limits;
      pc.params = w;
      break;
    }
    case PatternKind::kFlocking: {
      check_keys(node,
                 {"kind", "max_linear", "max_angular", "turn_gain", "front_half_width",
                  "back_half_width", "left_half_width", "right_half_width", "near", "far",
                  "linear", "linear_turning", "angular"},
                 "pattern");
      patterns::FlockingConfig f = d.flocking;
      f.front_half_width = get<double>(node, "front_half_width", f.front_half_width);
      f.back_half_width = get<double>(node, "back_half_width", f.back_half_width);
      f.left_half_width = get<double>(node, "left_half_width", f.left_half_width);
      f.right_half_width = get<double>(node, "right_half_width", f.right_half_width);
      f.near = get<double>(node, "near", f.near);
      f.far = get<double>(node, "far", f.far);
      f.linear = get<double>(node, "linear", f.linear);
      f.linear_turning = get<double>(node, "linear_turning", f.linear_turning);
      f.angular = get<double>(node, "angular", f.angular);
      f.limits = limits;
      pc.params = f;
      break;
    }
    case PatternKind::kMajorityRule:
    case PatternKind::kVoterModel: {
      check_keys(node, {"kind"}, "pattern");
      pc.params = patterns::VotingConfig{kind == PatternKind::kMajorityRule
                                             ? patterns::DecisionRule::kMajority
                                             : patterns::DecisionRule::kVoter,
                                         opinions.window_length, 0.0};
      break;
    }
    case PatternKind::kDiscussedDispersion: {
      check_keys(node,
                 {"kind", "max_linear", "max_angular", "turn_gain", "decision_duration",
                  "mapping"},
                 "pattern");
      patterns::DiscussedDispersionConfig c = d.discussed_dispersion;
      c.decision_duration = get<double>(node, "decision_duration", c.decision_duration);
      if (const YAML::Node m = node["mapping"]) {
        if (!m.IsMap()) fail(Kind::kParse, "mapping must be opinion: distance pairs");
        c.mapping.clear();
        try {
          for (const auto& kv : m) c.mapping[kv.first.as<int>()] = kv.second.as<double>();
        } catch (const YAML::Exception&) {
          fail(Kind::kParse, "mapping must be opinion: distance pairs");
        }
      }
      c.dispersion.limits = limits;
      c.voting = {patterns::DecisionRule::kMajority, opinions.window_length, 0.0};
      pc.params = c;
      break;
    }
  }
  return pc;
}

RobotLayout parse_layout(const YAML::Node& node) {
  if (!node || !node.IsMap()) fail(Kind::kParse, "scenario needs a robots mapping");
  check_keys(node, {"count", "layout", "spacing", "anchor", "heading", "poses"}, "robots");
  RobotLayout l;
  const auto kind = get<std::string>(node, "layout", "line");
  if (kind == "line") {
    l.kind = RobotLayout::Kind::kLine;
  } else if (kind == "explicit") {
    l.kind = RobotLayout::Kind::kExplicit;
  } else {
    fail(Kind::kInvalidParameter, "unknown robot layout '" + kind + "'");
  }
  l.count = get<std::size_t>(node, "count", 0);
  l.spacing = get<double>(node, "spacing", l.spacing);
  const auto anchor = get<std::string>(node, "anchor", "centered");
  if (anchor == "centered") {
    l.anchor = RobotLayout::Anchor::kCentered;
  } else if (anchor == "rightmost_at_center") {
    l.anchor = RobotLayout::Anchor::kRightmostAtCenter;
  } else {
    fail(Kind::kInvalidParameter, "unknown anchor '" + anchor + "'");
  }
  if (const YAML::Node h = node["heading"]; h && h.as<std::string>() != "random") {
    l.heading = get<double>(node, "heading", 0.0);
  }
  if (const YAML::Node poses = node["poses"]) {
    for (const auto& p : poses) {
      if (!p.IsSequence() || p.size() != 3) fail(Kind::kParse, "pose must be [x, y, theta]");
      l.poses.push_back({p[0].as<double>(), p[1].as<double>(), p[2].as<double>()});
    }
  }
  if (l.kind == RobotLayout::Kind::kExplicit) l.count = l.poses.size();
  return l;
}

std::optional<OpinionSetup> parse_voting(const YAML::Node& node) {
  if (!node) return std::nullopt;
  check_keys(node, {"topic", "window", "values", "initial"}, "voting");
  OpinionSetup o;
  o.topic = get<std::string>(node, "topic", o.topic);
  o.window_length = get<double>(node, "window", o.window_length);
  if (const YAML::Node v = node["values"]) o.values = v.as<std::vector<int>>();
  if (const YAML::Node v = node["initial"]; v && v.IsSequence()) {
    o.initial = v.as<std::vector<int>>();
  }
  return o;
}

bool uses_voting(PatternKind k) {
  return k == PatternKind::kMajorityRule || k == PatternKind::kVoterModel ||
         k == PatternKind::kDiscussedDispersion;
}

const std::map<std::string, std::string, std::less<>>& presets() {
  static const std::map<std::string, std::string, std::less<>> table{
      {"experiment1-waffle", R"(name: experiment1-waffle
seed: 1
duration: 300
dt: 0.1
arena: {width: 18, height: 18}
platform: waffle_pi
robots: {count: 7, layout: line, spacing: 1.0, anchor: rightmost_at_center, heading: random}
pattern: {kind: attraction, attraction_range: 2.0}
)"},
      {"experiment1-burger", R"(name: experiment1-burger
seed: 1
duration: 300
dt: 0.1
arena: {width: 18, height: 18}
platform: burger
robots: {count: 7, layout: line, spacing: 1.0, anchor: rightmost_at_center, heading: random}
pattern: {kind: attraction, attraction_range: 2.0}
)"},
      {"experiment1-jackal", R"(name: experiment1-jackal
seed: 1
duration: 300
dt: 0.1
arena: {width: 18, height: 18}
platform: jackal
robots: {count: 5, layout: line, spacing: 1.6, anchor: centered, heading: random}
pattern: {kind: attraction, attraction_range: 3.0}
)"},
      {"experiment2", R"(name: experiment2
seed: 1
duration: 140
dt: 0.1
arena: {width: 18, height: 18}
platform: waffle_pi
robots: {count: 7, layout: line, spacing: 1.0, anchor: centered, heading: random}
pattern:
  kind: discussed_dispersion
  decision_duration: 20
  mapping: {0: 0.6, 1: 1.0, 2: 1.4}
voting: {topic: vote, window: 1.0, values: [0, 1, 2], initial: random}
)"},
  };
  return table;
}

void emit_limits(YAML::Emitter& e, const core::DriveLimits& l) {
  e << YAML::Key << "max_linear" << YAML::Value << sim::format_double(l.max_linear);
  e << YAML::Key << "max_angular" << YAML::Value << sim::format_double(l.max_angular);
  e << YAML::Key << "turn_gain" << YAML::Value << sim::format_double(l.turn_gain);
}

}  // namespace

std::string_view to_string(PatternKind kind) {
  switch (kind) {
    case PatternKind::kAttraction: return "attraction";
    case PatternKind::kDispersion: return "dispersion";
    case PatternKind::kDrive: return "drive";
    case PatternKind::kRandomWalk: return "random_walk";
    case PatternKind::kFlocking: return "flocking";
    case PatternKind::kMajorityRule: return "majority_rule";
    case PatternKind::kVoterModel: return "voter_model";
    case PatternKind::kDiscussedDispersion: return "discussed_dispersion";
  }
  return "unknown";
}

PatternKind pattern_kind_from_string(std::string_view name) {
  for (auto k : {PatternKind::kAttraction, PatternKind::kDispersion, PatternKind::kDrive,
                 PatternKind::kRandomWalk, PatternKind::kFlocking, PatternKind::kMajorityRule,
                 PatternKind::kVoterModel, PatternKind::kDiscussedDispersion}) {
    if (to_string(k) == name) return k;
  }
  fail(Kind::kUnknownPattern, "unknown pattern '" + std::string(name) + "'");
}

core::DriveLimits ScenarioConfig::avoidance_limits() const {
  return protection_limits.value_or(pattern_defaults(platform).limits);
}

std::vector<sim::Segment> ScenarioConfig::walls() const {
  auto w = sim::rectangular_arena(arena_width, arena_height);
  w.insert(w.end(), extra_walls.begin(), extra_walls.end());
  return w;
}

std::size_t ScenarioConfig::robot_count() const {
  return layout.kind == RobotLayout::Kind::kExplicit ? layout.poses.size() : layout.count;
}

std::vector<core::Pose2D> ScenarioConfig::initial_poses(std::uint64_t s) const {
  std::vector<core::Pose2D> poses;
  if (layout.kind == RobotLayout::Kind::kExplicit) {
    poses = layout.poses;
  } else {
    const double n = static_cast<double>(layout.count);
    for (std::size_t i = 0; i < layout.count; ++i) {
      const double k = static_cast<double>(i);
      const double x = layout.anchor == RobotLayout::Anchor::kCentered
                           ? (k - (n - 1.0) / 2.0) * layout.spacing
                           : -(n - 1.0 - k) * layout.spacing;
      poses.push_back({x, 0.0, layout.heading.value_or(0.0)});
    }
    if (!layout.heading) {
      auto rng = init_rng(s, kHeadingStream);
      std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
      for (auto& p : poses) p.theta = core::normalize_angle(angle(rng));
    }
  }
  return poses;
}

std::vector<int> ScenarioConfig::initial_opinions(std::uint64_t s) const {
  if (!voting) return {};
  if (!voting->initial.empty()) return voting->initial;
  auto rng = init_rng(s, kOpinionStream);
  std::uniform_int_distribution<std::size_t> pick(0, voting->values.size() - 1);
  std::vector<int> out;
  for (std::size_t i = 0; i < robot_count(); ++i) out.push_back(voting->values[pick(rng)]);
  return out;
}

void validate(const ScenarioConfig& cfg) {
  try {
    cfg.platform.validate();
  } catch (const std::invalid_argument& e) {
    fail(Kind::kInvalidParameter, e.what());
  }
  if (!(cfg.dt > 0.0)) fail(Kind::kInvalidParameter, "dt must be positive");
  if (cfg.duration < 0.0) fail(Kind::kInvalidParameter, "duration must be non-negative");
  if (!(cfg.arena_width > 0.0 && cfg.arena_height > 0.0)) {
    fail(Kind::kInvalidParameter, "arena dimensions must be positive");
  }
  if (!(cfg.staleness_limit >= 0.0)) {
    fail(Kind::kInvalidParameter, "staleness_limit must be non-negative");
  }

  const auto& p = cfg.platform;
  auto check_limits = [&](const core::DriveLimits& l) {
    if (!(l.max_linear > 0.0 && l.max_linear <= p.max_linear) ||
        !(l.max_angular > 0.0 && l.max_angular <= p.max_angular) || !(l.turn_gain > 0.0)) {
      fail(Kind::kInvalidParameter, "pattern speed limits exceed platform '" + p.name + "'");
    }
  };
  if (cfg.protection_limits) check_limits(*cfg.protection_limits);
  auto check_range = [&](double r, const char* what) {
    if (!(r > p.lidar.range_min)) {
      fail(Kind::kInvalidParameter, std::string(what) + " must exceed the LiDAR floor");
    }
  };

  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, patterns::AttractionConfig>) {
          check_limits(c.limits);
          check_range(c.attraction_range, "attraction_range");
        } else if constexpr (std::is_same_v<T, patterns::DispersionConfig>) {
          check_limits(c.limits);
          check_range(c.dispersion_range, "dispersion_range");
        } else if constexpr (std::is_same_v<T, patterns::DriveConfig>) {
          check_limits(c.limits);
          if (std::abs(c.linear) > c.limits.max_linear) {
            fail(Kind::kInvalidParameter, "drive speed exceeds the pattern limit");
          }
        } else if constexpr (std::is_same_v<T, patterns::WalkConfig>) {
          check_limits(c.limits);
          if (!(0.0 <= c.drive_min && c.drive_min <= c.drive_max) ||
              !(0.0 <= c.turn_min && c.turn_min <= c.turn_max) || !(c.angular > 0.0)) {
            fail(Kind::kInvalidParameter, "random walk intervals are malformed");
          }
        } else if constexpr (std::is_same_v<T, patterns::FlockingConfig>) {
          check_limits(c.limits);
          try {
            c.validate(p.lidar.range_min, p.lidar.range_max);
          } catch (const std::invalid_argument& e) {
            fail(Kind::kInvalidParameter, e.what());
          }
        } else if constexpr (std::is_same_v<T, patterns::VotingConfig>) {
          if (!(c.window_length > 0.0)) {
            fail(Kind::kInvalidParameter, "voting window must be positive");
          }
        } else if constexpr (std::is_same_v<T, patterns::DiscussedDispersionConfig>) {
          check_limits(c.dispersion.limits);
          if (!(c.decision_duration >= 0.0)) {
            fail(Kind::kInvalidParameter, "decision_duration must be non-negative");
          }
          for (const auto& [opinion, distance] : c.mapping) {
            if (distance < p.protection_threshold) {
              fail(Kind::kMappingBelowThreshold,
                   "opinion " + std::to_string(opinion) + " maps to " +
                       sim::format_double(distance) + " m, below the protection threshold " +
                       sim::format_double(p.protection_threshold) + " m");
            }
          }
          if (cfg.voting) {
            for (int v : cfg.voting->values) {
              if (!c.mapping.contains(v)) {
                fail(Kind::kInvalidParameter,
                     "opinion " + std::to_string(v) + " has no mapped distance");
              }
            }
          }
        }
      },
      cfg.pattern.params);

  if (cfg.robot_count() == 0) fail(Kind::kInvalidParameter, "scenario has no robots");
  if (cfg.voting) {
    if (!(cfg.voting->window_length > 0.0)) {
      fail(Kind::kInvalidParameter, "voting window must be positive");
    }
    if (cfg.voting->values.empty()) fail(Kind::kInvalidParameter, "voting needs opinion values");
    if (!cfg.voting->initial.empty()) {
      if (cfg.voting->initial.size() != cfg.robot_count()) {
        fail(Kind::kInvalidParameter, "one initial opinion per robot is required");
      }
      for (int v : cfg.voting->initial) {
        if (std::find(cfg.voting->values.begin(), cfg.voting->values.end(), v) ==
            cfg.voting->values.end()) {
          fail(Kind::kInvalidParameter, "initial opinion " + std::to_string(v) +
                                            " is not among the opinion values");
        }
      }
    }
  }

  // Positions never depend on the seed.
  const auto poses = cfg.initial_poses(cfg.seed);
  const double hx = cfg.arena_width / 2.0 - p.radius;
  const double hy = cfg.arena_height / 2.0 - p.radius;
  const auto walls = cfg.walls();
  for (std::size_t i = 0; i < poses.size(); ++i) {
    const auto& q = poses[i];
    sim::RobotBody body{static_cast<bus::RobotId>(i), q, p.name, p.radius};
    if (std::abs(q.x) >= hx || std::abs(q.y) >= hy || sim::wall_clearance(body, walls) <= 0.0) {
      fail(Kind::kPoseOutsideArena,
           "robot " + std::to_string(i) + " at (" + sim::format_double(q.x) + ", " +
               sim::format_double(q.y) + ") is not inside the arena");
    }
  }
}

namespace {

ScenarioConfig parse_root(const YAML::Node& root) {
  if (!root.IsMap()) fail(Kind::kParse, "scenario must be a mapping");
  check_keys(root,
             {"name", "seed", "duration", "dt", "arena", "platform", "robots", "pattern",
              "voting", "protection", "metrics"},
             "scenario");

  ScenarioConfig cfg;
  cfg.name = get<std::string>(root, "name", "scenario");
  cfg.seed = get<std::uint64_t>(root, "seed", 0);
  cfg.duration = get<double>(root, "duration", cfg.duration);
  cfg.dt = get<double>(root, "dt", cfg.dt);
  if (const YAML::Node arena = root["arena"]) {
    check_keys(arena, {"width", "height", "walls"}, "arena");
    cfg.arena_width = get<double>(arena, "width", cfg.arena_width);
    cfg.arena_height = get<double>(arena, "height", cfg.arena_height);
    if (const YAML::Node walls = arena["walls"]) {
      for (const auto& w : walls) {
        if (!w.IsSequence() || w.size() != 4) fail(Kind::kParse, "wall must be [x0, y0, x1, y1]");
        cfg.extra_walls.push_back(
            {{w[0].as<double>(), w[1].as<double>()}, {w[2].as<double>(), w[3].as<double>()}});
      }
    }
  }
  cfg.platform = parse_platform(root["platform"]);
  cfg.layout = parse_layout(root["robots"]);
  cfg.voting = parse_voting(root["voting"]);
  cfg.pattern = parse_pattern(root["pattern"], cfg.platform, cfg.voting);
  if (uses_voting(cfg.pattern.kind) && !cfg.voting) cfg.voting = OpinionSetup{};
  if (const YAML::Node prot = root["protection"]) {
    check_keys(prot, {"staleness_limit", "max_linear", "max_angular", "turn_gain"},
               "protection");
    cfg.staleness_limit = get<double>(prot, "staleness_limit", cfg.staleness_limit);
    if (prot["max_linear"] || prot["max_angular"] || prot["turn_gain"]) {
      cfg.protection_limits = parse_limits(prot, pattern_defaults(cfg.platform).limits);
    }
  }
  if (const YAML::Node m = root["metrics"]) {
    cfg.metrics.clear();
    for (const auto& name : m.as<std::vector<std::string>>()) {
      static const std::set<std::string> known{"centroid", "pairwise", "clearance",
                                               "collisions", "opinions"};
      if (!known.contains(name)) fail(Kind::kInvalidParameter, "unknown metric '" + name + "'");
      cfg.metrics.insert(name);
    }
  }
  return cfg;
}

}  // namespace

ScenarioConfig parse_scenario(std::string_view yaml_text) {
  ScenarioConfig cfg;
  try {
    cfg = parse_root(YAML::Load(std::string(yaml_text)));
  } catch (const YAML::Exception& e) {
    fail(Kind::kParse, std::string("YAML: ") + e.what());
  }
  validate(cfg);
  return cfg;
}

ScenarioConfig load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Kind::kParse, "cannot open scenario file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str());
}

std::string preset_yaml(std::string_view name) {
  const auto& table = presets();
  auto it = table.find(name);
  if (it == table.end()) fail(Kind::kUnknownPreset, "unknown preset '" + std::string(name) + "'");
  return it->second;
}

ScenarioConfig scenario_preset(std::string_view name) { return parse_scenario(preset_yaml(name)); }

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : presets()) names.push_back(k);
  return names;
}

ScenarioConfig resolve_scenario(const std::string& name_or_path) {
  if (presets().contains(name_or_path)) return scenario_preset(name_or_path);
  if (std::filesystem::exists(name_or_path)) return load_scenario(name_or_path);
  fail(Kind::kUnknownPreset, "'" + name_or_path + "' is neither a preset nor a file");
}

std::string ScenarioConfig::to_yaml() const {
  using sim::format_double;
  YAML::Emitter e;
  e << YAML::BeginMap;
  e << YAML::Key << "name" << YAML::Value << name;
  e << YAML::Key << "seed" << YAML::Value << seed;
  e << YAML::Key << "duration" << YAML::Value << format_double(duration);
  e << YAML::Key << "dt" << YAML::Value << format_double(dt);

  e << YAML::Key << "arena" << YAML::Value << YAML::BeginMap;
  e << YAML::Key << "width" << YAML::Value << format_double(arena_width);
  e << YAML::Key << "height" << YAML::Value << format_double(arena_height);
  if (!extra_walls.empty()) {
    e << YAML::Key << "walls" << YAML::Value << YAML::BeginSeq;
    for (const auto& w : extra_walls) {
      e << YAML::Flow << YAML::BeginSeq << format_double(w.a.x) << format_double(w.a.y)
        << format_double(w.b.x) << format_double(w.b.y) << YAML::EndSeq;
    }
    e << YAML::EndSeq;
  }
  e << YAML::EndMap;

  e << YAML::Key << "platform" << YAML::Value << YAML::BeginMap;
  e << YAML::Key << "name" << YAML::Value << platform.name;
  e << YAML::Key << "beam_count" << YAML::Value << platform.lidar.beam_count;
  e << YAML::Key << "range_min" << YAML::Value << format_double(platform.lidar.range_min);
  e << YAML::Key << "range_max" << YAML::Value << format_double(platform.lidar.range_max);
  e << YAML::Key << "radius" << YAML::Value << format_double(platform.radius);
  e << YAML::Key << "max_linear" << YAML::Value << format_double(platform.max_linear);
  e << YAML::Key << "max_angular" << YAML::Value << format_double(platform.max_angular);
  e << YAML::Key << "protection_threshold" << YAML::Value
    << format_double(platform.protection_threshold);
  e << YAML::EndMap;

  e << YAML::Key << "robots" << YAML::Value << YAML::BeginMap;
  if (layout.kind == RobotLayout::Kind::kExplicit) {
    e << YAML::Key << "layout" << YAML::Value << "explicit";
    e << YAML::Key << "poses" << YAML::Value << YAML::BeginSeq;
    for (const auto& p : layout.poses) {
      e << YAML::Flow << YAML::BeginSeq << format_double(p.x) << format_double(p.y)
        << format_double(p.theta) << YAML::EndSeq;
    }
    e << YAML::EndSeq;
  } else {
    e << YAML::Key << "layout" << YAML::Value << "line";
    e << YAML::Key << "count" << YAML::Value << layout.count;
    e << YAML::Key << "spacing" << YAML::Value << format_double(layout.spacing);
    e << YAML::Key << "anchor" << YAML::Value
      << (layout.anchor == RobotLayout::Anchor::kCentered ? "centered" : "rightmost_at_center");
    e << YAML::Key << "heading" << YAML::Value
      << (layout.heading ? format_double(*layout.heading) : std::string("random"));
  }
  e << YAML::EndMap;

  e << YAML::Key << "pattern" << YAML::Value << YAML::BeginMap;
  e << YAML::Key << "kind" << YAML::Value << std::string(to_string(pattern.kind));
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, patterns::AttractionConfig>) {
          emit_limits(e, c.limits);
          e << YAML::Key << "attraction_range" << YAML::Value << format_double(c.attraction_range);
        } else if constexpr (std::is_same_v<T, patterns::DispersionConfig>) {
          emit_limits(e, c.limits);
          e << YAML::Key << "dispersion_range" << YAML::Value << format_double(c.dispersion_range);
        } else if constexpr (std::is_same_v<T, patterns::DriveConfig>) {
          emit_limits(e, c.limits);
          e << YAML::Key << "linear" << YAML::Value << format_double(c.linear);
        } else if constexpr (std::is_same_v<T, patterns::WalkConfig>) {
          emit_limits(e, c.limits);
          e << YAML::Key << "drive_min" << YAML::Value << format_double(c.drive_min);
          e << YAML::Key << "drive_max" << YAML::Value << format_double(c.drive_max);
          e << YAML::Key << "turn_min" << YAML::Value << format_double(c.turn_min);
          e << YAML::Key << "turn_max" << YAML::Value << format_double(c.turn_max);
          e << YAML::Key << "linear" << YAML::Value << format_double(c.linear);
          e << YAML::Key << "angular" << YAML::Value << format_double(c.angular);
          e << YAML::Key << "curved_turn" << YAML::Value << c.curved_turn;
        } else if constexpr (std::is_same_v<T, patterns::FlockingConfig>) {
          emit_limits(e, c.limits);
          e << YAML::Key << "front_half_width" << YAML::Value << format_double(c.front_half_width);
          e << YAML::Key << "back_half_width" << YAML::Value << format_double(c.back_half_width);
          e << YAML::Key << "left_half_width" << YAML::Value << format_double(c.left_half_width);
          e << YAML::Key << "right_half_width" << YAML::Value << format_double(c.right_half_width);
          e << YAML::Key << "near" << YAML::Value << format_double(c.near);
          e << YAML::Key << "far" << YAML::Value << format_double(c.far);
          e << YAML::Key << "linear" << YAML::Value << format_double(c.linear);
          e << YAML::Key << "linear_turning" << YAML::Value << format_double(c.linear_turning);
          e << YAML::Key << "angular" << YAML::Value << format_double(c.angular);
        } else if constexpr (std::is_same_v<T, patterns::DiscussedDispersionConfig>) {
          emit_limits(e, c.dispersion.limits);
          e << YAML::Key << "decision_duration" << YAML::Value
            << format_double(c.decision_duration);
          e << YAML::Key << "mapping" << YAML::Value << YAML::Flow << YAML::BeginMap;
          for (const auto& [k, v] : c.mapping) e << YAML::Key << k << YAML::Value << format_double(v);
          e << YAML::EndMap;
        }
      },
      pattern.params);
  e << YAML::EndMap;

  if (voting) {
    e << YAML::Key << "voting" << YAML::Value << YAML::BeginMap;
    e << YAML::Key << "topic" << YAML::Value << voting->topic;
    e << YAML::Key << "window" << YAML::Value << format_double(voting->window_length);
    e << YAML::Key << "values" << YAML::Value << YAML::Flow << voting->values;
    if (voting->initial.empty()) {
      e << YAML::Key << "initial" << YAML::Value << "random";
    } else {
      e << YAML::Key << "initial" << YAML::Value << YAML::Flow << voting->initial;
    }
    e << YAML::EndMap;
  }

  e << YAML::Key << "protection" << YAML::Value << YAML::BeginMap;
  e << YAML::Key << "staleness_limit" << YAML::Value << format_double(staleness_limit);
  if (protection_limits) emit_limits(e, *protection_limits);
  e << YAML::EndMap;

  e << YAML::Key << "metrics" << YAML::Value << YAML::Flow
    << std::vector<std::string>(metrics.begin(), metrics.end());
  e << YAML::EndMap;
  return std::string(e.c_str()) + "\n";
}

}  // namespace swarm::harness
