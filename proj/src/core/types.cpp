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

#include "swarm/core/types.hpp"

#include <algorithm>
#include <stdexcept>

namespace swarm::core {

double normalize_angle(double angle) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  double a = std::fmod(angle, kTwoPi);
  if (a > std::numbers::pi) {
    a -= kTwoPi;
  } else if (a <= -std::numbers::pi) {
    a += kTwoPi;
  }
  return a;
}

DriveCommand DriveCommand::clamped(double linear, double angular,
                                   const DriveLimits& limits) {
  return {std::clamp(linear, -limits.max_linear, limits.max_linear),
          std::clamp(angular, -limits.max_angular, limits.max_angular)};
}

bool DriveCommand::within(const DriveLimits& limits) const {
  return std::abs(linear) <= limits.max_linear &&
         std::abs(angular) <= limits.max_angular;
}

ScanSnapshot ScanSnapshot::empty(std::size_t beams, double range_min,
                                 double range_max, double stamp) {
  ScanSnapshot scan;
  scan.ranges.assign(beams, kNoReturn);
  scan.angle_min = 0.0;
  scan.angle_increment = 2.0 * std::numbers::pi / static_cast<double>(beams);
  scan.range_min = range_min;
  scan.range_max = range_max;
  scan.stamp = stamp;
  return scan;
}

std::size_t ScanSnapshot::beam_at(double angle) const {
  const double offset = normalize_angle(angle - angle_min);
  double idx = std::round(offset / angle_increment);
  if (idx < 0) idx += static_cast<double>(ranges.size());
  return static_cast<std::size_t>(idx) % ranges.size();
}

void ScanSnapshot::validate() const {
  if (ranges.empty()) {
    throw std::invalid_argument("scan has no beams");
  }
  if (!(angle_increment > 0.0)) {
    throw std::invalid_argument("scan angle_increment must be positive");
  }
  const double sweep = static_cast<double>(ranges.size()) * angle_increment;
  if (std::abs(sweep - 2.0 * std::numbers::pi) > angle_increment) {
    throw std::invalid_argument("scan does not cover a full revolution");
  }
  if (!(range_min > 0.0 && range_min < range_max)) {
    throw std::invalid_argument("scan range window must satisfy 0 < min < max");
  }
}

}  // namespace swarm::core
