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

#include <filesystem>
#include <memory>

#include "swarm/harness/metrics.hpp"
#include "swarm/harness/scenario.hpp"
#include "swarm/patterns/pattern.hpp"
#include "swarm/sim/simulator.hpp"
#include "swarm/sim/trace.hpp"

namespace swarm::harness {

struct RunOptions {
  bool parallel_raycast = true;
};

struct RunResult {
  sim::Trace trace;
  MetricsReport report;
};

/// Pattern instance for robot `robot` of a scenario.
std::unique_ptr<patterns::Pattern> make_pattern(const ScenarioConfig& cfg,
                                                bus::RobotId robot,
                                                std::optional<int> initial_opinion);

/// A ready-to-step simulator for `cfg` at `cfg.seed`.
sim::Simulator build_simulator(const ScenarioConfig& cfg, RunOptions options = {});

/// Number of ticks a run of `cfg` executes.
std::int64_t tick_count(const ScenarioConfig& cfg);

/// Validates, runs duration/dt ticks and computes metrics.
RunResult run(const ScenarioConfig& cfg, RunOptions options = {});

/// Writes trace.csv, summary.json and the selected series files into `dir`.
void write_outputs(const ScenarioConfig& cfg, const RunResult& result,
                   const std::filesystem::path& dir);

/// Writes the metrics of a trace (summary.json + series) into `dir`.
void write_metrics(const MetricsReport& report, const std::set<std::string>& selection,
                   const std::filesystem::path& dir);

}  // namespace swarm::harness
