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

#include "swarm/sim/kinematics.hpp"

#include <cmath>

namespace swarm::sim {

namespace {
constexpr double kStraightYawRate = 1e-9;
}  // namespace

core::Pose2D integrate_pose(const core::Pose2D& pose, const core::DriveCommand& cmd,
                            double dt) {
  const double v = cmd.linear;
  const double w = cmd.angular;
  core::Pose2D out = pose;
  if (std::abs(w) < kStraightYawRate) {
    out.x += v * std::cos(pose.theta) * dt;
    out.y += v * std::sin(pose.theta) * dt;
    out.theta = core::normalize_angle(pose.theta + w * dt);
    return out;
  }
  const double theta_end = pose.theta + w * dt;
  out.x += (v / w) * (std::sin(theta_end) - std::sin(pose.theta));
  out.y += (v / w) * (std::cos(pose.theta) - std::cos(theta_end));
  out.theta = core::normalize_angle(theta_end);
  return out;
}

}  // namespace swarm::sim
