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

#include "swarm/protection/protection.hpp"

#include <stdexcept>

namespace swarm::protection {

core::DriveCommand avoidance_command(const core::ScanSnapshot& scan, double threshold,
                                     const core::DriveLimits& limits) {
  return core::vector_to_drive(
      core::potential_field(scan, threshold, core::Polarity::kRepulsive), limits);
}

ProtectionLayer::ProtectionLayer(ProtectionConfig cfg, double sensor_range_min)
    : cfg_(cfg) {
  if (cfg_.threshold < sensor_range_min) {
    throw std::invalid_argument("protection threshold below the sensor's minimum range");
  }
  if (cfg_.staleness_limit < 0.0) {
    throw std::invalid_argument("staleness limit must be non-negative");
  }
}

void ProtectionLayer::on_pattern_command(const core::DriveCommand& cmd, double stamp) {
  last_cmd_ = cmd;
  last_cmd_stamp_ = stamp;
}

Arbitration ProtectionLayer::arbitrate(const core::ScanSnapshot& scan, double now) const {
  if (auto nearest = core::nearest_obstacle(scan); nearest && nearest->distance < cfg_.threshold) {
    return {avoidance_command(scan, cfg_.threshold, cfg_.limits), true};
  }
  if (last_cmd_ && now - last_cmd_stamp_ <= cfg_.staleness_limit) {
    return {*last_cmd_, false};
  }
  return {core::DriveCommand{}, false};
}

}  // namespace swarm::protection
