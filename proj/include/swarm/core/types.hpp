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

#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <vector>

namespace swarm::core {

/// Wraps an angle into (-pi, pi].
double normalize_angle(double angle);

/// Force in the robot frame (x forward, y left). Dimensionless.
struct Vector2 {
  double x = 0.0;
  double y = 0.0;

  Vector2 operator+(const Vector2& o) const { return {x + o.x, y + o.y}; }
  Vector2 operator-(const Vector2& o) const { return {x - o.x, y - o.y}; }
  Vector2 operator-() const { return {-x, -y}; }
  Vector2 operator*(double s) const { return {x * s, y * s}; }
  Vector2& operator+=(const Vector2& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  double norm() const { return std::hypot(x, y); }
  bool is_zero() const { return x == 0.0 && y == 0.0; }
  bool operator==(const Vector2&) const = default;
};

/// World-frame pose. `theta` is kept normalized to (-pi, pi].
struct Pose2D {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;

  bool operator==(const Pose2D&) const = default;
};

/// Speed envelope and steering gain used when turning a force into a command.
struct DriveLimits {
  double max_linear = 0.0;   // m/s
  double max_angular = 0.0;  // rad/s
  double turn_gain = 1.0;    // rad/s per rad of heading error
};

/// Actuator output: forward speed along robot x and yaw rate around z.
struct DriveCommand {
  double linear = 0.0;   // m/s
  double angular = 0.0;  // rad/s

  /// Builds a command with both components clamped to `limits`.
  static DriveCommand clamped(double linear, double angular,
                              const DriveLimits& limits);

  bool within(const DriveLimits& limits) const;
  bool operator==(const DriveCommand&) const = default;
};

/// One planar 360 degree range sweep.
///
/// Readings outside [range_min, range_max] mean "no detection". The simulator
/// writes +inf for no return and 0 for returns below the sensor floor.
struct ScanSnapshot {
  std::vector<double> ranges;
  double angle_min = 0.0;
  double angle_increment = 0.0;
  double range_min = 0.0;
  double range_max = 0.0;
  double stamp = 0.0;

  static constexpr double kNoReturn = std::numeric_limits<double>::infinity();

  /// A full sweep of `beams` beams, every beam invalid, beam 0 at bearing 0.
  static ScanSnapshot empty(std::size_t beams, double range_min,
                            double range_max, double stamp = 0.0);

  bool is_valid(double range) const {
    return range >= range_min && range <= range_max;
  }
  double bearing(std::size_t beam) const {
    return angle_min + static_cast<double>(beam) * angle_increment;
  }
  /// Index of the beam whose bearing is closest to `angle`.
  std::size_t beam_at(double angle) const;

  /// Throws std::invalid_argument if the sweep is malformed.
  void validate() const;
};

}  // namespace swarm::core
