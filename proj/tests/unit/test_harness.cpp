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


#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "support/oracles.hpp"
#include "swarm/harness/metrics.hpp"
#include "swarm/harness/platform.hpp"
#include "swarm/harness/runner.hpp"
#include "swarm/harness/scenario.hpp"

using namespace swarm;
using namespace swarm::harness;
using Kind = ConfigError::Kind;

namespace {

Kind load_error(const std::string& yaml) {
  try {
    parse_scenario(yaml);
  } catch (const ConfigError& e) {
    return e.kind();
  }
  FAIL("scenario was accepted");
  return Kind::kParse;
}

const char* kSmall = R"(name: small
seed: 4
duration: 3
arena: {width: 6, height: 6}
platform: burger
robots: {count: 3, layout: line, spacing: 0.8}
pattern: {kind: dispersion, dispersion_range: 1.0}
)";

}  // namespace

TEST_CASE("platform presets carry the hardware constants") {
  const auto burger = platform_preset("burger");
  CHECK(burger.lidar.range_min == 0.12);
  CHECK(burger.lidar.range_max == 3.5);
  CHECK(burger.lidar.beam_count == 360);
  CHECK(burger.protection_threshold == 0.5);
  CHECK(burger.radius == 0.15);
  const auto jackal = platform_preset("jackal");
  CHECK(jackal.lidar.range_min == 0.8);
  CHECK(jackal.lidar.range_max == 5.0);
  CHECK(jackal.protection_threshold == 1.2);
  CHECK(jackal.radius == 0.3);
  CHECK(platform_names().size() == 3);
  for (const auto& n : platform_names()) CHECK_NOTHROW(platform_preset(n).validate());
  try {
    platform_preset("roomba");
    FAIL("unknown platform accepted");
  } catch (const ConfigError& e) {
    CHECK(e.kind() == Kind::kUnknownPlatform);
  }
}

TEST_CASE("pattern defaults stay within each platform") {
  for (const auto& n : platform_names()) {
    const auto p = platform_preset(n);
    const auto d = pattern_defaults(p);
    CHECK(d.limits.max_linear <= p.max_linear);
    CHECK(d.limits.max_angular <= p.max_angular);
    CHECK(d.attraction.attraction_range > p.lidar.range_min);
    CHECK_NOTHROW(d.flocking.validate(p.lidar.range_min, p.lidar.range_max));
  }
  CHECK(pattern_defaults(platform_preset("waffle_pi")).attraction.attraction_range == 2.0);
  CHECK(pattern_defaults(platform_preset("jackal")).attraction.attraction_range == 3.0);
}

TEST_CASE("experiment presets") {
  CHECK(preset_names().size() == 4);
  for (const auto& n : preset_names()) CHECK_NOTHROW(scenario_preset(n));

  const auto w = scenario_preset("experiment1-waffle");
  CHECK(w.robot_count() == 7);
  CHECK(w.arena_width == 18.0);
  CHECK(w.arena_height == 18.0);
  CHECK(w.platform.name == "waffle_pi");
  const auto poses = w.initial_poses(1);
  REQUIRE(poses.size() == 7);
  CHECK(poses.back().x == 0.0);
  CHECK(poses.back().y == 0.0);
  for (std::size_t i = 1; i < poses.size(); ++i) {
    CHECK(poses[i].x - poses[i - 1].x == doctest::Approx(1.0));
  }

  const auto e2 = scenario_preset("experiment2");
  CHECK(e2.robot_count() == 7);
  REQUIRE(e2.voting.has_value());
  CHECK(e2.voting->values == std::vector<int>{0, 1, 2});
  const auto& dd = std::get<patterns::DiscussedDispersionConfig>(e2.pattern.params);
  CHECK(dd.decision_duration == 20.0);
  CHECK(dd.mapping.at(0) == 0.6);
  CHECK(dd.mapping.at(1) == 1.0);
  CHECK(dd.mapping.at(2) == 1.4);
}

TEST_CASE("random headings and opinions depend on the seed only") {
  const auto cfg = scenario_preset("experiment2");
  CHECK(cfg.initial_poses(3) == cfg.initial_poses(3));
  CHECK_FALSE(cfg.initial_poses(3) == cfg.initial_poses(4));
  CHECK(cfg.initial_opinions(3) == cfg.initial_opinions(3));
  bool any_diff = false;
  for (std::uint64_t s = 1; s < 10; ++s) {
    any_diff = any_diff || cfg.initial_opinions(s) != cfg.initial_opinions(s + 1);
    for (int o : cfg.initial_opinions(s)) CHECK((o >= 0 && o <= 2));
  }
  CHECK(any_diff);
}

TEST_CASE("distinct load errors") {
  CHECK(load_error("name: [") == Kind::kParse);
  CHECK(load_error("- 1\n- 2\n") == Kind::kParse);
  CHECK(load_error(std::string(kSmall) + "bogus: 1\n") == Kind::kInvalidParameter);
  CHECK(load_error(R"(platform: roomba
robots: {count: 1}
pattern: {kind: drive})") == Kind::kUnknownPlatform);
  CHECK(load_error(R"(platform: burger
robots: {count: 1}
pattern: {kind: teleport})") == Kind::kUnknownPattern);
  CHECK(load_error(R"(platform: burger
robots: {count: 2, layout: line}
pattern: {kind: discussed_dispersion, mapping: {0: 0.4, 1: 1.0}}
voting: {values: [0, 1]})") == Kind::kMappingBelowThreshold);
  CHECK(load_error(R"(arena: {width: 4, height: 4}
platform: burger
robots: {layout: explicit, poses: [[0, 0, 0], [5, 0, 0]]}
pattern: {kind: drive})") == Kind::kPoseOutsideArena);
  CHECK(load_error(R"(platform: burger
robots: {count: 1}
pattern: {kind: attraction, max_linear: 5.0}
)") == Kind::kInvalidParameter);
  CHECK(load_error(R"(platform: jackal
robots: {count: 1}
pattern: {kind: attraction, attraction_range: 0.5}
)") == Kind::kInvalidParameter);
  CHECK(load_error(R"(platform: burger
robots: {count: 2, layout: line}
pattern: {kind: discussed_dispersion, mapping: {0: 0.6}}
voting: {values: [0, 1]})") == Kind::kInvalidParameter);
  CHECK(load_error(R"(platform: burger
robots: {layout: explicit, poses: [[0, 0]]}
pattern: {kind: drive})") == Kind::kParse);
  try {
    scenario_preset("experiment9");
    FAIL("unknown preset accepted");
  } catch (const ConfigError& e) {
    CHECK(e.kind() == Kind::kUnknownPreset);
  }
}

TEST_CASE("platform overrides") {
  const auto cfg = parse_scenario(R"(platform: {name: burger, radius: 0.1, beam_count: 90}
robots: {count: 1}
pattern: {kind: drive, linear: 0.1})");
  CHECK(cfg.platform.radius == 0.1);
  CHECK(cfg.platform.lidar.beam_count == 90);
  CHECK(cfg.platform.lidar.range_min == 0.12);
}

TEST_CASE("canonical YAML reproduces the config") {
  for (const auto& n : preset_names()) {
    const auto cfg = scenario_preset(n);
    const auto text = cfg.to_yaml();
    const auto again = parse_scenario(text);
    CHECK(again.to_yaml() == text);
    CHECK(again.initial_poses(5) == cfg.initial_poses(5));
  }
  auto cfg = parse_scenario(std::string(kSmall) +
                            "protection: {staleness_limit: 0.3, max_linear: 0.1}\n");
  REQUIRE(cfg.protection_limits.has_value());
  CHECK(cfg.avoidance_limits().max_linear == 0.1);
  CHECK(parse_scenario(cfg.to_yaml()).to_yaml() == cfg.to_yaml());
}

TEST_CASE("every pattern kind builds and runs") {
  for (const char* kind : {"attraction", "dispersion", "drive", "random_walk", "flocking",
                           "majority_rule", "voter_model", "discussed_dispersion"}) {
    CAPTURE(kind);
    const std::string yaml = std::string(R"(duration: 2
arena: {width: 8, height: 8}
platform: waffle_pi
robots: {count: 3, layout: line, spacing: 1.0}
pattern: {kind: )") + kind + "}\n";
    const auto cfg = parse_scenario(yaml);
    CHECK(to_string(cfg.pattern.kind) == kind);
    const auto res = run(cfg);
    CHECK(res.trace.rows.size() == 3 * 20);
    CHECK(res.report.ticks() == 20);
  }
}

TEST_CASE("mean distance to centroid") {
  const std::vector<sim::Point> same{{1, 1}, {1, 1}, {1, 1}};
  CHECK(mean_distance_to_centroid(same) == 0.0);
  const std::vector<sim::Point> pair{{0, 0}, {2, 0}};
  CHECK(mean_distance_to_centroid(pair) == doctest::Approx(1.0));
  std::vector<sim::Point> line;
  std::vector<std::pair<double, double>> plain;
  for (int i = 0; i < 7; ++i) {
    line.push_back({static_cast<double>(i), 0.0});
    plain.emplace_back(static_cast<double>(i), 0.0);
  }
  CHECK(mean_distance_to_centroid(line) == doctest::Approx(testing::mdc_oracle(plain)));
  CHECK(mean_distance_to_centroid(line) == doctest::Approx(12.0 / 7.0));
}

TEST_CASE("metrics from a run") {
  const auto cfg = parse_scenario(kSmall);
  CHECK(tick_count(cfg) == 30);
  const auto res = run(cfg);
  const auto& r = res.report;
  CHECK(r.ticks() == 30);
  CHECK(r.mean_distance_to_centroid.size() == 30);
  CHECK(r.min_pairwise_distance.size() == 30);
  CHECK(r.clearance.size() == 30);
  CHECK(r.clearance.front().size() == 3);
  CHECK(r.mean_distance_to_centroid.front() == doctest::Approx(1.6 / 3.0));
  CHECK(r.min_pairwise_distance.front() == doctest::Approx(0.8));
  CHECK(r.clearance.front()[1] == doctest::Approx(0.65));
  CHECK(r.collision_count == 0);
  CHECK_FALSE(r.consensus_time.has_value());

  // Recomputing from the trace alone gives the same report.
  const auto again = compute_metrics(res.trace);
  CHECK(again.mean_distance_to_centroid == r.mean_distance_to_centroid);
  CHECK(again.clearance == r.clearance);
}

TEST_CASE("collisions and consensus are read from the trace") {
  sim::Trace t;
  t.header.dt = 0.5;
  t.header.vote_window = 1.0;
  t.header.robots = {{0, "burger", 0.15}, {1, "burger", 0.15}};
  t.header.walls = sim::rectangular_arena(10, 10);
  auto row = [](std::int64_t tick, int robot, double x, int opinion) {
    sim::TraceRow r;
    r.tick = tick;
    r.time = 0.5 * static_cast<double>(tick);
    r.robot = robot;
    r.pose = {x, 0.0, 0.0};
    r.opinion = opinion;
    return r;
  };
  t.rows = {row(0, 0, 0.0, 1), row(0, 1, 1.0, 2), row(1, 0, 0.0, 1), row(1, 1, 0.2, 2),
            row(2, 0, 0.0, 2), row(2, 1, 0.25, 2), row(3, 0, 0.0, 2), row(3, 1, 1.0, 2)};
  const auto r = compute_metrics(t);
  CHECK(r.collision_count == 2);
  REQUIRE(r.consensus_time.has_value());
  CHECK(*r.consensus_time == 1.0);
  REQUIRE(r.opinion_histograms.size() == 2);
  CHECK(r.opinion_histograms[0].counts == std::map<int, int>{{1, 1}, {2, 1}});
  CHECK(r.opinion_histograms[1].window == 1);
  CHECK(r.opinion_histograms[1].counts == std::map<int, int>{{2, 2}});
}

TEST_CASE("zero duration gives an empty but valid report") {
  auto cfg = parse_scenario(kSmall);
  cfg.duration = 0.0;
  const auto res = run(cfg);
  CHECK(res.trace.rows.empty());
  CHECK(res.report.ticks() == 0);
}

TEST_CASE("outputs land on disk and replay from the embedded config") {
  const auto dir = std::filesystem::temp_directory_path() / "swarmkit_harness_test";
  std::filesystem::remove_all(dir);
  const auto cfg = parse_scenario(kSmall);
  const auto res = run(cfg);
  write_outputs(cfg, res, dir);
  for (const char* f : {"trace.csv", "summary.json", "centroid.tsv", "pairwise.tsv",
                        "clearance.tsv", "opinions.tsv"}) {
    CHECK(std::filesystem::exists(dir / f));
  }
  const auto trace = sim::read_trace_file((dir / "trace.csv").string());
  std::string text;
  for (const auto& l : trace.header.config) text += l + "\n";
  const auto replayed = run(parse_scenario(text));
  CHECK(replayed.trace.rows == res.trace.rows);
  std::filesystem::remove_all(dir);
}
