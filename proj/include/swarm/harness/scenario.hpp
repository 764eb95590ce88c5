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

#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "swarm/harness/errors.hpp"
#include "swarm/harness/platform.hpp"
#include "swarm/patterns/combined.hpp"
#include "swarm/patterns/movement.hpp"
#include "swarm/patterns/voting.hpp"
#include "swarm/sim/world.hpp"

namespace swarm::harness {

enum class PatternKind {
  kAttraction,
  kDispersion,
  kDrive,
  kRandomWalk,
  kFlocking,
  kMajorityRule,
  kVoterModel,
  kDiscussedDispersion,
};

std::string_view to_string(PatternKind kind);
PatternKind pattern_kind_from_string(std::string_view name);

/// Typed parameters of the selected pattern. Voting rules carry a
/// VotingConfig; discussed dispersion carries its own voting settings.
using PatternParams =
    std::variant<patterns::AttractionConfig, patterns::DispersionConfig,
                 patterns::DriveConfig, patterns::WalkConfig, patterns::FlockingConfig,
                 patterns::VotingConfig, patterns::DiscussedDispersionConfig>;

struct PatternConfig {
  PatternKind kind = PatternKind::kDrive;
  PatternParams params;
};

/// How the initial poses are laid out.
struct RobotLayout {
  enum class Kind { kLine, kExplicit };
  enum class Anchor { kCentered, kRightmostAtCenter };

  Kind kind = Kind::kLine;
  std::size_t count = 0;
  double spacing = 1.0;
  Anchor anchor = Anchor::kCentered;
  std::optional<double> heading;  // empty: uniform random per seed
  std::vector<core::Pose2D> poses;
};

struct OpinionSetup {
  std::string topic = "vote";
  double window_length = 1.0;
  std::vector<int> values{0, 1, 2};
  std::vector<int> initial;  // empty: uniform over `values` per seed
};

struct ScenarioConfig {
  std::string name;
  std::uint64_t seed = 0;
  double duration = 60.0;  // simulated seconds
  double dt = 0.1;
  double arena_width = 18.0;
  double arena_height = 18.0;
  std::vector<sim::Segment> extra_walls;
  sim::PlatformSpec platform;
  RobotLayout layout;
  PatternConfig pattern;
  std::optional<OpinionSetup> voting;
  double staleness_limit = 0.5;
  /// Speed limits for avoidance commands; unset means the platform's pattern defaults.
  std::optional<core::DriveLimits> protection_limits;
  std::set<std::string> metrics{"centroid", "pairwise", "clearance", "collisions", "opinions"};

  std::vector<sim::Segment> walls() const;
  core::DriveLimits avoidance_limits() const;
  std::size_t robot_count() const;
  /// Poses for `seed`; only random headings depend on it.
  std::vector<core::Pose2D> initial_poses(std::uint64_t seed) const;
  std::vector<int> initial_opinions(std::uint64_t seed) const;

  /// Canonical YAML for this config, enough to rebuild it exactly.
  std::string to_yaml() const;
};

/// Parses and validates a scenario. Throws ConfigError.
ScenarioConfig parse_scenario(std::string_view yaml_text);
ScenarioConfig load_scenario(const std::string& path);

/// Built-in scenarios: experiment1-{burger,waffle,jackal}, experiment2.
ScenarioConfig scenario_preset(std::string_view name);
std::vector<std::string> preset_names();
std::string preset_yaml(std::string_view name);

/// A preset name or a path to a YAML file.
ScenarioConfig resolve_scenario(const std::string& name_or_path);

/// Re-runs every load-time rule. Throws ConfigError.
void validate(const ScenarioConfig& cfg);

}  // namespace swarm::harness
