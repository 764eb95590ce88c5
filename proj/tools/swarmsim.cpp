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

// swarmsim: run, replay and measure swarm scenarios.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <set>
#include <string>

#include "swarm/harness/metrics.hpp"
#include "swarm/harness/runner.hpp"
#include "swarm/harness/scenario.hpp"
#include "swarm/sim/trace.hpp"

namespace {

using namespace swarm;

std::string join(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

int cmd_run(const std::string& scenario, std::optional<std::uint64_t> seed,
            std::optional<double> duration, const std::string& out_dir, bool serial) {
  harness::ScenarioConfig cfg = harness::resolve_scenario(scenario);
  if (seed) cfg.seed = *seed;
  if (duration) cfg.duration = *duration;
  harness::validate(cfg);
  const auto result = harness::run(cfg, {.parallel_raycast = !serial});
  harness::write_outputs(cfg, result, out_dir);

  const auto& r = result.report;
  std::cout << "scenario " << cfg.name << " seed " << cfg.seed << ": " << r.ticks()
            << " ticks, " << result.trace.header.robots.size() << " robots\n";
  if (r.ticks() > 0) {
    std::cout << "  mean distance to centroid " << r.mean_distance_to_centroid.front()
              << " -> " << r.mean_distance_to_centroid.back() << " m\n";
  }
  std::cout << "  collisions " << r.collision_count << '\n';
  if (r.consensus_time) std::cout << "  consensus at " << *r.consensus_time << " s\n";
  std::cout << "  wrote " << (std::filesystem::path(out_dir) / "trace.csv").string() << '\n';
  return 0;
}

int cmd_replay(const std::string& trace_path, const std::string& out_dir) {
  const sim::Trace recorded = sim::read_trace_file(trace_path);
  if (recorded.header.config.empty()) {
    std::cerr << "trace carries no scenario; cannot replay\n";
    return 2;
  }
  const auto cfg = harness::parse_scenario(join(recorded.header.config));
  const auto result = harness::run(cfg);
  if (!out_dir.empty()) harness::write_outputs(cfg, result, out_dir);

  const auto& a = recorded.rows;
  const auto& b = result.trace.rows;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (!(a[i] == b[i])) {
      std::cout << "diverged at tick " << a[i].tick << " robot " << a[i].robot << '\n';
      return 1;
    }
  }
  if (a.size() != b.size()) {
    std::cout << "row count differs: recorded " << a.size() << ", replayed " << b.size()
              << '\n';
    return 1;
  }
  std::cout << "replay identical (" << a.size() << " rows)\n";
  return 0;
}

int cmd_metrics(const std::string& trace_path, const std::string& out_dir) {
  const sim::Trace trace = sim::read_trace_file(trace_path);
  const auto report = harness::compute_metrics(trace);
  std::set<std::string> selection{"centroid", "pairwise", "clearance", "collisions",
                                  "opinions"};
  harness::write_metrics(report, selection, out_dir);
  std::cout << "metrics for " << report.ticks() << " ticks written to " << out_dir << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Swarm behavior simulator"};
  app.require_subcommand(1);

  std::string scenario;
  std::string trace_path;
  std::string out_dir = "out";
  std::optional<std::uint64_t> seed;
  std::optional<double> duration;
  bool serial = false;

  auto* run = app.add_subcommand("run", "Run a preset or scenario file");
  run->add_option("scenario", scenario, "Preset name or YAML path")->required();
  run->add_option("--seed", seed, "Override the scenario seed");
  run->add_option("--duration", duration, "Override simulated duration in seconds");
  run->add_option("--out", out_dir, "Output directory");
  run->add_flag("--serial", serial, "Use the serial ray-cast kernel");

  auto* replay = app.add_subcommand("replay", "Re-simulate a trace and compare");
  replay->add_option("trace", trace_path, "Trace file")->required();
  std::string replay_out;
  replay->add_option("--out", replay_out, "Also write the replayed outputs here");

  auto* metrics = app.add_subcommand("metrics", "Compute metrics from a trace");
  metrics->add_option("trace", trace_path, "Trace file")->required();
  metrics->add_option("--out", out_dir, "Output directory");

  auto* presets = app.add_subcommand("presets", "List built-in scenarios");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return cmd_run(scenario, seed, duration, out_dir, serial);
    if (*replay) return cmd_replay(trace_path, replay_out);
    if (*metrics) return cmd_metrics(trace_path, out_dir);
    if (*presets) {
      for (const auto& name : harness::preset_names()) std::cout << name << '\n';
      return 0;
    }
  } catch (const harness::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
