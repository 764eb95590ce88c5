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

#include "swarm/sim/world.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace swarm::sim {

void PlatformSpec::validate() const {
  if (lidar.beam_count == 0 || !(lidar.range_min > 0.0) ||
      !(lidar.range_max > lidar.range_min)) {
    throw std::invalid_argument("platform '" + name + "' has an invalid LiDAR window");
  }
  if (!(radius > 0.0) || !(max_linear > 0.0) || !(max_angular > 0.0)) {
    throw std::invalid_argument("platform '" + name + "' needs positive body and speed limits");
  }
  if (protection_threshold < lidar.range_min) {
    throw std::invalid_argument("platform '" + name +
                                "' protection threshold is below the LiDAR floor");
  }
}

std::vector<Segment> rectangular_arena(double width, double height) {
  const double hx = width / 2.0;
  const double hy = height / 2.0;
  return {{{-hx, -hy}, {hx, -hy}},
          {{hx, -hy}, {hx, hy}},
          {{hx, hy}, {-hx, hy}},
          {{-hx, hy}, {-hx, -hy}}};
}

double distance_to_segment(const Point& p, const Segment& s) {
  const double ex = s.b.x - s.a.x;
  const double ey = s.b.y - s.a.y;
  const double len2 = ex * ex + ey * ey;
  double t = 0.0;
  if (len2 > 0.0) {
    t = std::clamp(((p.x - s.a.x) * ex + (p.y - s.a.y) * ey) / len2, 0.0, 1.0);
  }
  return std::hypot(p.x - (s.a.x + t * ex), p.y - (s.a.y + t * ey));
}

double wall_clearance(const RobotBody& robot, std::span<const Segment> walls) {
  double best = std::numeric_limits<double>::infinity();
  const Point c{robot.pose.x, robot.pose.y};
  for (const auto& w : walls) best = std::min(best, distance_to_segment(c, w));
  return best - robot.radius;
}

double obstacle_clearance(const WorldState& world, std::size_t robot_index) {
  const RobotBody& self = world.robots.at(robot_index);
  const Point c{self.pose.x, self.pose.y};
  double best = std::numeric_limits<double>::infinity();
  for (const auto& w : world.walls) best = std::min(best, distance_to_segment(c, w));
  for (std::size_t j = 0; j < world.robots.size(); ++j) {
    if (j == robot_index) continue;
    const auto& o = world.robots[j];
    best = std::min(best, std::hypot(o.pose.x - c.x, o.pose.y - c.y) - o.radius);
  }
  return best;
}

}  // namespace swarm::sim
