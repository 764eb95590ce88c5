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

#include "swarm/core/scan.hpp"

#include <algorithm>
#include <cmath>

namespace swarm::core {

std::optional<ObstacleReading> nearest_obstacle(const ScanSnapshot& scan) {
  std::optional<ObstacleReading> best;
  for (std::size_t i = 0; i < scan.ranges.size(); ++i) {
    const double r = scan.ranges[i];
    if (!scan.is_valid(r)) continue;
    if (!best || r < best->distance) {
      best = ObstacleReading{r, scan.bearing(i)};
    }
  }
  return best;
}

Vector2 potential_field(const ScanSnapshot& scan, double effect_range,
                        Polarity polarity) {
  const double span = effect_range - scan.range_min;
  Vector2 sum;
  for (std::size_t i = 0; i < scan.ranges.size(); ++i) {
    const double r = scan.ranges[i];
    if (!scan.is_valid(r) || r > effect_range) continue;
    // A degenerate window (effect_range at the sensor floor) gives full weight.
    const double w = span > 0.0 ? std::clamp((effect_range - r) / span, 0.0, 1.0)
                                : 1.0;
    const double theta = scan.bearing(i);
    sum += Vector2{w * std::cos(theta), w * std::sin(theta)};
  }
  return polarity == Polarity::kAttractive ? sum : -sum;
}

DriveCommand vector_to_drive(const Vector2& force, const DriveLimits& limits) {
  if (force.is_zero()) return {};
  const double phi = std::atan2(force.y, force.x);
  const double angular =
      std::clamp(limits.turn_gain * phi, -limits.max_angular, limits.max_angular);
  const double linear = limits.max_linear * std::max(0.0, std::cos(phi)) *
                        std::min(1.0, force.norm());
  return DriveCommand::clamped(linear, angular, limits);
}

}  // namespace swarm::core
