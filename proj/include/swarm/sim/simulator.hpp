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

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "swarm/bus/bus.hpp"
#include "swarm/patterns/pattern.hpp"
#include "swarm/protection/protection.hpp"
#include "swarm/sim/trace.hpp"
#include "swarm/sim/world.hpp"

namespace swarm::sim {

struct RobotSetup {
  core::Pose2D pose;
  PlatformSpec platform;
  std::unique_ptr<patterns::Pattern> pattern;
  protection::ProtectionConfig protection;
};

struct SimulatorOptions {
  double dt = 0.1;
  std::uint64_t seed = 0;
  std::string vote_topic = "vote";
  bool parallel_raycast = true;
};

/// Fixed-timestep scheduler for a swarm.
///
/// Every tick, robots are visited in id order and the phases run in sequence:
/// scan, pattern, protection, motion, then one trace row per robot. The bus is
/// flushed once, at the end of the tick, so each hop along
/// scan -> pattern -> protection -> motors takes one tick.
class Simulator {
 public:
  Simulator(std::vector<Segment> walls, SimulatorOptions options);
  ~Simulator();
  Simulator(Simulator&&) noexcept;
  Simulator& operator=(Simulator&&) noexcept;

  /// Robots get ids 0, 1, 2, ... in insertion order. Throws
  /// std::invalid_argument if the body touches a wall.
  bus::RobotId add_robot(RobotSetup setup);

  /// Runs one tick and returns its trace rows.
  std::vector<TraceRow> step();

  const WorldState& world() const { return world_; }
  const bus::Bus& bus() const { return bus_; }
  double dt() const { return options_.dt; }

 private:
  struct Node;

  void move_robot(std::size_t i, const core::DriveCommand& cmd);

  SimulatorOptions options_;
  WorldState world_;
  bus::Bus bus_;
  std::vector<Node> nodes_;
  std::vector<LidarSpec> lidars_;
};

}  // namespace swarm::sim
