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

#include "swarm/harness/runner.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "swarm/patterns/combined.hpp"
#include "swarm/patterns/movement.hpp"
#include "swarm/patterns/voting.hpp"

namespace swarm::harness {

namespace {

std::ofstream open_out(const std::filesystem::path& p) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  return out;
}

}  // namespace

std::unique_ptr<patterns::Pattern> make_pattern(const ScenarioConfig& cfg,
                                                bus::RobotId robot,
                                                std::optional<int> initial_opinion) {
  using namespace patterns;
  const int opinion = initial_opinion.value_or(0);
  return std::visit(
      [&](const auto& c) -> std::unique_ptr<Pattern> {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, AttractionConfig>) {
          return std::make_unique<AttractionPattern>(c);
        } else if constexpr (std::is_same_v<T, DispersionConfig>) {
          return std::make_unique<DispersionPattern>(c);
        } else if constexpr (std::is_same_v<T, DriveConfig>) {
          return std::make_unique<DrivePattern>(c);
        } else if constexpr (std::is_same_v<T, WalkConfig>) {
          return std::make_unique<RandomWalkPattern>(c, make_rng(cfg.seed, robot));
        } else if constexpr (std::is_same_v<T, FlockingConfig>) {
          return std::make_unique<FlockingPattern>(c);
        } else if constexpr (std::is_same_v<T, VotingConfig>) {
          return std::make_unique<VotingPattern>(robot, opinion, c, make_rng(cfg.seed, robot));
        } else {
          return std::make_unique<DiscussedDispersionPattern>(robot, opinion, c,
                                                              make_rng(cfg.seed, robot));
        }
      },
      cfg.pattern.params);
}

sim::Simulator build_simulator(const ScenarioConfig& cfg, RunOptions options) {
  validate(cfg);
  sim::SimulatorOptions so;
  so.dt = cfg.dt;
  so.seed = cfg.seed;
  so.parallel_raycast = options.parallel_raycast;
  if (cfg.voting) so.vote_topic = cfg.voting->topic;
  sim::Simulator simulator(cfg.walls(), so);

  const auto poses = cfg.initial_poses(cfg.seed);
  const auto opinions = cfg.initial_opinions(cfg.seed);
  const auto limits = cfg.avoidance_limits();
  for (std::size_t i = 0; i < poses.size(); ++i) {
    const auto id = static_cast<bus::RobotId>(i);
    std::optional<int> opinion;
    if (i < opinions.size()) opinion = opinions[i];
    simulator.add_robot({poses[i], cfg.platform, make_pattern(cfg, id, opinion),
                         {cfg.platform.protection_threshold, cfg.staleness_limit, limits}});
  }
  return simulator;
}

std::int64_t tick_count(const ScenarioConfig& cfg) {
  return std::llround(cfg.duration / cfg.dt);
}

RunResult run(const ScenarioConfig& cfg, RunOptions options) {
  sim::Simulator simulator = build_simulator(cfg, options);
  RunResult result;
  auto& h = result.trace.header;
  h.scenario = cfg.name;
  h.seed = cfg.seed;
  h.dt = cfg.dt;
  if (cfg.voting) h.vote_window = cfg.voting->window_length;
  for (const auto& r : simulator.world().robots) h.robots.push_back({r.id, r.platform, r.radius});
  h.walls = simulator.world().walls;
  std::istringstream yaml(cfg.to_yaml());
  for (std::string line; std::getline(yaml, line);) h.config.push_back(line);

  const std::int64_t ticks = tick_count(cfg);
  result.trace.rows.reserve(static_cast<std::size_t>(ticks) * h.robots.size());
  for (std::int64_t k = 0; k < ticks; ++k) {
    auto rows = simulator.step();
    result.trace.rows.insert(result.trace.rows.end(), rows.begin(), rows.end());
  }
  result.report = compute_metrics(result.trace);
  return result;
}

void write_metrics(const MetricsReport& report, const std::set<std::string>& selection,
                   const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  auto wants = [&](const char* m) { return selection.contains(m); };

  if (wants("centroid")) {
    auto out = open_out(dir / "centroid.tsv");
    out << "time\tmean_distance_to_centroid\n";
    for (std::size_t k = 0; k < report.ticks(); ++k) {
      out << sim::format_double(report.time[k]) << '\t'
          << sim::format_double(report.mean_distance_to_centroid[k]) << '\n';
    }
  }
  if (wants("pairwise")) {
    auto out = open_out(dir / "pairwise.tsv");
    out << "time\tmin_pairwise_distance\n";
    for (std::size_t k = 0; k < report.ticks(); ++k) {
      out << sim::format_double(report.time[k]) << '\t'
          << sim::format_double(report.min_pairwise_distance[k]) << '\n';
    }
  }
  if (wants("clearance") && !report.clearance.empty()) {
    auto out = open_out(dir / "clearance.tsv");
    out << "time";
    for (std::size_t i = 0; i < report.clearance.front().size(); ++i) out << "\trobot_" << i;
    out << '\n';
    for (std::size_t k = 0; k < report.ticks(); ++k) {
      out << sim::format_double(report.time[k]);
      for (double c : report.clearance[k]) out << '\t' << sim::format_double(c);
      out << '\n';
    }
  }
  if (wants("opinions")) {
    auto out = open_out(dir / "opinions.tsv");
    out << "window\ttime\topinion\tcount\n";
    for (const auto& h : report.opinion_histograms) {
      for (const auto& [opinion, count] : h.counts) {
        out << h.window << '\t' << sim::format_double(h.time) << '\t' << opinion << '\t'
            << count << '\n';
      }
    }
  }

  nlohmann::ordered_json summary;
  summary["ticks"] = report.ticks();
  if (report.ticks() > 0) {
    summary["initial_mean_distance_to_centroid"] = report.mean_distance_to_centroid.front();
    summary["final_mean_distance_to_centroid"] = report.mean_distance_to_centroid.back();
    const double fp = report.min_pairwise_distance.back();
    summary["final_min_pairwise_distance"] = std::isfinite(fp) ? nlohmann::json(fp) : nullptr;
    double overall = std::numeric_limits<double>::infinity();
    for (double d : report.min_pairwise_distance) overall = std::min(overall, d);
    summary["min_pairwise_distance"] = std::isfinite(overall) ? nlohmann::json(overall) : nullptr;
    summary["final_clearance"] = report.clearance.back();
  }
  summary["collision_count"] = report.collision_count;
  summary["consensus_time"] =
      report.consensus_time ? nlohmann::json(*report.consensus_time) : nullptr;
  auto out = open_out(dir / "summary.json");
  out << summary.dump(2) << '\n';
}

void write_outputs(const ScenarioConfig& cfg, const RunResult& result,
                   const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  sim::write_trace_file((dir / "trace.csv").string(), result.trace);
  write_metrics(result.report, cfg.metrics, dir);
}

}  // namespace swarm::harness
