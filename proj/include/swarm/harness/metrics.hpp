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
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "swarm/sim/trace.hpp"

namespace swarm::harness {

struct OpinionHistogram {
  std::int64_t window = 0;
  double time = 0.0;          // first tick of the window
  std::map<int, int> counts;  // opinion -> robots holding it
};

/// Swarm-level quality measures, one entry per tick for every series.
struct MetricsReport {
  std::vector<double> time;
  std::vector<double> mean_distance_to_centroid;
  std::vector<double> min_pairwise_distance;     // center to center; +inf below two robots
  std::vector<std::vector<double>> clearance;    // [tick][robot], center to nearest surface
  std::size_t collision_count = 0;               // (tick, robot pair) body overlaps
  std::vector<OpinionHistogram> opinion_histograms;
  std::optional<double> consensus_time;          // first tick with one shared opinion

  std::size_t ticks() const { return time.size(); }
};

/// (1/N) * sum of distances from the positions' mean.
double mean_distance_to_centroid(std::span<const sim::Point> positions);

/// Recomputes every metric from a trace alone.
MetricsReport compute_metrics(const sim::Trace& trace);

}  // namespace swarm::harness
