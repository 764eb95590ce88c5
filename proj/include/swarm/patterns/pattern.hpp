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
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "swarm/bus/bus.hpp"
#include "swarm/core/types.hpp"

namespace swarm::patterns {

using Rng = std::mt19937_64;

/// Seeds a per-robot stream from the scenario seed.
Rng make_rng(std::uint64_t seed, bus::RobotId robot);

struct StampedOpinion {
  bus::OpinionMessage message;
  double stamp = 0.0;
};

/// Everything a pattern sees on one control tick.
struct TickInput {
  double now = 0.0;
  double dt = 0.0;
  const core::ScanSnapshot* scan = nullptr;   // latest scan, never null in the simulator
  std::span<const StampedOpinion> opinions;   // drained from the vote topic
};

struct TickOutput {
  std::optional<core::DriveCommand> command;  // movement patterns always set this
  std::vector<bus::OpinionMessage> opinions;  // to publish on the vote topic
};

/// Base of every behavior. One instance per robot; not shared between threads.
class Pattern {
 public:
  virtual ~Pattern() = default;

  virtual TickOutput tick(const TickInput& in) = 0;

  /// True if the pattern emits drive commands.
  virtual bool drives() const = 0;

  /// Current opinion for patterns that take part in voting.
  virtual std::optional<int> opinion() const { return std::nullopt; }

  virtual std::string_view name() const = 0;
};

}  // namespace swarm::patterns
