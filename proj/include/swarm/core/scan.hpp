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

#include "swarm/core/types.hpp"

namespace swarm::core {

struct ObstacleReading {
  double distance = 0.0;  // m
  double bearing = 0.0;   // rad, robot frame
  bool operator==(const ObstacleReading&) const = default;
};

/// Smallest valid reading and its bearing; ties go to the lowest beam index.
std::optional<ObstacleReading> nearest_obstacle(const ScanSnapshot& scan);

enum class Polarity { kAttractive, kRepulsive };

/// Linear-falloff potential field over the scan.
///
/// A beam contributes iff its reading r is valid and r <= effect_range. Its
/// weight is (effect_range - r) / (effect_range - range_min), clamped to
/// [0, 1], along the beam direction. The repulsive field is the exact
/// negation of the attractive one.
Vector2 potential_field(const ScanSnapshot& scan, double effect_range,
                        Polarity polarity);

/// Heading-proportional steering toward `force`.
///
/// angular = clamp(turn_gain * phi) with phi the force bearing; linear is
/// gated by cos(phi) (no reversing) and scaled by min(1, |force|).
DriveCommand vector_to_drive(const Vector2& force, const DriveLimits& limits);

}  // namespace swarm::core
