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

#include <span>
#include <vector>

#include "swarm/core/types.hpp"
#include "swarm/sim/world.hpp"

namespace swarm::sim {

/// Distance along a unit ray to the first wall or foreign robot body, or +inf.
/// `self` is excluded. A ray starting inside a body reads 0.
double cast_ray(const WorldState& world, std::size_t self, const Point& origin,
                const Point& dir);

/// Reference scan for one robot. Beam 0 points along the robot heading and
/// bearings grow counter-clockwise. Returns beyond range_max read +inf,
/// returns below range_min read 0.
core::ScanSnapshot raycast_scan(const WorldState& world, std::size_t robot_index,
                                const LidarSpec& lidar, double stamp);

/// Serial scans for every robot; `lidars[i]` belongs to robot i.
std::vector<core::ScanSnapshot> raycast_all_serial(const WorldState& world,
                                                   std::span<const LidarSpec> lidars,
                                                   double stamp);

/// Same result as raycast_all_serial, bit for bit, with the (robot, beam)
/// loop spread over OpenMP threads when available.
std::vector<core::ScanSnapshot> raycast_all_parallel(const WorldState& world,
                                                     std::span<const LidarSpec> lidars,
                                                     double stamp);

}  // namespace swarm::sim
