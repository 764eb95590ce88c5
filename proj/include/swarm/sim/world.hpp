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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "swarm/bus/bus.hpp"
#include "swarm/core/types.hpp"

namespace swarm::sim {

struct Point {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Point&) const = default;
};

struct Segment {
  Point a;
  Point b;
  bool operator==(const Segment&) const = default;
};

struct LidarSpec {
  std::size_t beam_count = 360;
  double range_min = 0.12;
  double range_max = 3.5;
};

/// Physical description of a robot model.
struct PlatformSpec {
  std::string name;
  LidarSpec lidar;
  double radius = 0.15;               // m, circular footprint
  double max_linear = 0.26;           // m/s
  double max_angular = 1.82;          // rad/s
  double protection_threshold = 0.5;  // m

  /// Throws std::invalid_argument on non-positive values or a threshold
  /// below the LiDAR floor.
  void validate() const;
};

struct RobotBody {
  bus::RobotId id = 0;
  core::Pose2D pose;
  std::string platform;
  double radius = 0.15;
};

/// Simulator-owned ground truth. Patterns never see it.
struct WorldState {
  std::vector<RobotBody> robots;
  std::vector<Segment> walls;
  double clock = 0.0;
  std::int64_t tick = 0;
  std::uint64_t rng_seed = 0;
};

/// Four walls of a width x height rectangle centered on the origin.
std::vector<Segment> rectangular_arena(double width, double height);

double distance_to_segment(const Point& p, const Segment& s);

/// Smallest center-to-wall distance minus the robot radius. Negative means
/// the body penetrates a wall.
double wall_clearance(const RobotBody& robot, std::span<const Segment> walls);

/// Distance from the robot center to the nearest obstacle surface (walls and
/// other robot bodies). This is what an ideal LiDAR would read.
double obstacle_clearance(const WorldState& world, std::size_t robot_index);

}  // namespace swarm::sim
