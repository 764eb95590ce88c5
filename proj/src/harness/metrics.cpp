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

#include "swarm/harness/metrics.hpp"

#include <cmath>
#include <limits>
#include <set>

#include "swarm/sim/world.hpp"

namespace swarm::harness {

double mean_distance_to_centroid(std::span<const sim::Point> positions) {
  if (positions.empty()) return 0.0;
  const double n = static_cast<double>(positions.size());
  double cx = 0.0;
  double cy = 0.0;
  for (const auto& p : positions) {
    cx += p.x;
    cy += p.y;
  }
  cx /= n;
  cy /= n;
  double sum = 0.0;
  for (const auto& p : positions) sum += std::hypot(p.x - cx, p.y - cy);
  return sum / n;
}

MetricsReport compute_metrics(const sim::Trace& trace) {
  MetricsReport report;
  const auto& header = trace.header;
  const std::size_t n = header.robots.size();
  if (n == 0) return report;

  sim::WorldState world;
  world.walls = header.walls;
  for (const auto& r : header.robots) world.robots.push_back({r.id, {}, r.platform, r.radius});

  std::optional<std::int64_t> last_window;
  for (std::size_t start = 0; start + n <= trace.rows.size(); start += n) {
    const auto tick_rows = std::span(trace.rows).subspan(start, n);
    const double t = tick_rows.front().time;
    report.time.push_back(t);

    std::vector<sim::Point> positions;
    for (std::size_t i = 0; i < n; ++i) {
      world.robots[i].pose = tick_rows[i].pose;
      positions.push_back({tick_rows[i].pose.x, tick_rows[i].pose.y});
    }
    report.mean_distance_to_centroid.push_back(mean_distance_to_centroid(positions));

    double min_pair = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double d = std::hypot(positions[i].x - positions[j].x,
                                    positions[i].y - positions[j].y);
        min_pair = std::min(min_pair, d);
        if (d < world.robots[i].radius + world.robots[j].radius) ++report.collision_count;
      }
    }
    report.min_pairwise_distance.push_back(min_pair);

    std::vector<double> clear;
    for (std::size_t i = 0; i < n; ++i) clear.push_back(sim::obstacle_clearance(world, i));
    report.clearance.push_back(std::move(clear));

    std::set<int> held;
    bool all_hold = true;
    for (const auto& row : tick_rows) {
      if (row.opinion) {
        held.insert(*row.opinion);
      } else {
        all_hold = false;
      }
    }
    if (all_hold) {
      if (!report.consensus_time && held.size() == 1) report.consensus_time = t;
      const std::int64_t window =
          header.vote_window ? static_cast<std::int64_t>(std::floor(t / *header.vote_window)) : 0;
      if (!last_window || window != *last_window) {
        OpinionHistogram h{window, t, {}};
        for (const auto& row : tick_rows) ++h.counts[*row.opinion];
        report.opinion_histograms.push_back(std::move(h));
        last_window = window;
      }
    }
  }
  return report;
}

}  // namespace swarm::harness
