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

#include "swarm/sim/raycast.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace swarm::sim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kParallelEps = 1e-15;

double cross(double ax, double ay, double bx, double by) { return ax * by - ay * bx; }

double ray_segment(const Point& o, const Point& d, const Segment& s) {
  const double ex = s.b.x - s.a.x;
  const double ey = s.b.y - s.a.y;
  const double denom = cross(d.x, d.y, ex, ey);
  if (std::abs(denom) < kParallelEps) return kInf;  // grazing along the wall
  const double ax = s.a.x - o.x;
  const double ay = s.a.y - o.y;
  const double t = cross(ax, ay, ex, ey) / denom;
  const double u = cross(ax, ay, d.x, d.y) / denom;
  if (t < 0.0 || u < 0.0 || u > 1.0) return kInf;
  return t;
}

double ray_circle(const Point& o, const Point& d, const Point& c, double r) {
  const double fx = o.x - c.x;
  const double fy = o.y - c.y;
  const double c2 = fx * fx + fy * fy - r * r;
  if (c2 <= 0.0) return 0.0;
  const double b = fx * d.x + fy * d.y;
  if (b > 0.0) return kInf;  // circle behind the origin
  const double disc = b * b - c2;
  if (disc < 0.0) return kInf;
  return -b - std::sqrt(disc);
}

double encode(double raw, const LidarSpec& lidar) {
  if (raw > lidar.range_max) return core::ScanSnapshot::kNoReturn;
  if (raw < lidar.range_min) return 0.0;
  return raw;
}

core::ScanSnapshot blank_scan(const LidarSpec& lidar, double stamp) {
  return core::ScanSnapshot::empty(lidar.beam_count, lidar.range_min, lidar.range_max,
                                   stamp);
}

// One beam of one robot; shared by every kernel so results match exactly.
double beam_reading(const WorldState& world, std::size_t robot, const LidarSpec& lidar,
                    double increment, std::size_t beam) {
  const auto& pose = world.robots[robot].pose;
  const double angle = pose.theta + static_cast<double>(beam) * increment;
  const Point dir{std::cos(angle), std::sin(angle)};
  return encode(cast_ray(world, robot, {pose.x, pose.y}, dir), lidar);
}

}  // namespace

double cast_ray(const WorldState& world, std::size_t self, const Point& origin,
                const Point& dir) {
  double best = kInf;
  for (const auto& w : world.walls) best = std::min(best, ray_segment(origin, dir, w));
  for (std::size_t j = 0; j < world.robots.size(); ++j) {
    if (j == self) continue;
    const auto& other = world.robots[j];
    best = std::min(best,
                    ray_circle(origin, dir, {other.pose.x, other.pose.y}, other.radius));
  }
  return best;
}

core::ScanSnapshot raycast_scan(const WorldState& world, std::size_t robot_index,
                                const LidarSpec& lidar, double stamp) {
  core::ScanSnapshot scan = blank_scan(lidar, stamp);
  for (std::size_t b = 0; b < lidar.beam_count; ++b) {
    scan.ranges[b] = beam_reading(world, robot_index, lidar, scan.angle_increment, b);
  }
  return scan;
}

std::vector<core::ScanSnapshot> raycast_all_serial(const WorldState& world,
                                                   std::span<const LidarSpec> lidars,
                                                   double stamp) {
  std::vector<core::ScanSnapshot> scans;
  scans.reserve(world.robots.size());
  for (std::size_t i = 0; i < world.robots.size(); ++i) {
    scans.push_back(raycast_scan(world, i, lidars[i], stamp));
  }
  return scans;
}

std::vector<core::ScanSnapshot> raycast_all_parallel(const WorldState& world,
                                                     std::span<const LidarSpec> lidars,
                                                     double stamp) {
  std::vector<core::ScanSnapshot> scans;
  scans.reserve(world.robots.size());
  std::vector<std::size_t> offsets;
  std::size_t total = 0;
  for (std::size_t i = 0; i < world.robots.size(); ++i) {
    scans.push_back(blank_scan(lidars[i], stamp));
    offsets.push_back(total);
    total += lidars[i].beam_count;
  }
  const auto n = static_cast<std::ptrdiff_t>(total);

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    const auto owner = std::upper_bound(offsets.begin(), offsets.end(),
                                        static_cast<std::size_t>(k));
    const auto robot = static_cast<std::size_t>(owner - offsets.begin()) - 1;
    const std::size_t beam = static_cast<std::size_t>(k) - offsets[robot];
    auto& scan = scans[robot];
    scan.ranges[beam] = beam_reading(world, robot, lidars[robot], scan.angle_increment, beam);
  }
  return scans;
}

}  // namespace swarm::sim
