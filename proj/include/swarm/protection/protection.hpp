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

#include <optional>

#include "swarm/core/scan.hpp"

namespace swarm::protection {

struct ProtectionConfig {
  double threshold = 0.5;        // m; obstacles closer than this trigger avoidance
  double staleness_limit = 0.5;  // s; older pattern commands are ignored
  core::DriveLimits limits;      // envelope of the avoidance command
};

struct Arbitration {
  core::DriveCommand command;
  bool suppressed = false;  // true when avoidance replaced the pattern
};

/// Repulsive-field avoidance with the threshold as effect range.
core::DriveCommand avoidance_command(const core::ScanSnapshot& scan, double threshold,
                                     const core::DriveLimits& limits);

/// Suppression arbiter between a movement pattern and the motors.
///
/// Evaluated once per scan. Not internally synchronized: the scheduler writes
/// the pattern slot and arbitrates within the same tick.
class ProtectionLayer {
 public:
  /// Throws std::invalid_argument if the threshold sits below the sensor floor.
  ProtectionLayer(ProtectionConfig cfg, double sensor_range_min);

  void on_pattern_command(const core::DriveCommand& cmd, double stamp);

  Arbitration arbitrate(const core::ScanSnapshot& scan, double now) const;

  const ProtectionConfig& config() const { return cfg_; }
  const std::optional<core::DriveCommand>& last_pattern_command() const { return last_cmd_; }

 private:
  ProtectionConfig cfg_;
  std::optional<core::DriveCommand> last_cmd_;
  double last_cmd_stamp_ = 0.0;
};

}  // namespace swarm::protection
