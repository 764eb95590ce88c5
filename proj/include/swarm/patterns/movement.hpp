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

#include <numbers>
#include <utility>

#include "swarm/core/scan.hpp"
#include "swarm/patterns/pattern.hpp"

namespace swarm::patterns {

struct AttractionConfig {
  double attraction_range = 2.0;
  core::DriveLimits limits;
};

struct DispersionConfig {
  double dispersion_range = 1.0;
  core::DriveLimits limits;
};

struct DriveConfig {
  double linear = 0.0;
  core::DriveLimits limits;
};

struct WalkConfig {
  double drive_min = 2.0;   // s
  double drive_max = 6.0;   // s
  double turn_min = 0.5;    // rad
  double turn_max = std::numbers::pi;
  double linear = 0.15;     // m/s while driving
  double angular = 1.0;     // rad/s while turning
  bool curved_turn = false; // keep driving forward while turning
  core::DriveLimits limits;
};

/// Sector layout and thresholds for the minimalist flocking rules.
///
/// Sectors are centered on 0, +pi/2, pi and -pi/2. Adjacent half-widths must
/// sum to pi/2 so the four sectors tile the circle.
struct FlockingConfig {
  double front_half_width = std::numbers::pi / 4;
  double back_half_width = std::numbers::pi / 4;
  double left_half_width = std::numbers::pi / 4;
  double right_half_width = std::numbers::pi / 4;
  double near = 0.5;  // m, repulsion zone edge
  double far = 1.2;   // m, cohesion zone edge
  double linear = 0.15;
  double linear_turning = 0.05;
  double angular = 1.0;
  core::DriveLimits limits;

  /// Throws std::invalid_argument on a bad sector layout or threshold order.
  void validate(double range_min, double range_max) const;
};

core::DriveCommand attraction_step(const core::ScanSnapshot& scan,
                                   const AttractionConfig& cfg);

/// Zero command once nothing is inside the dispersion range.
core::DriveCommand dispersion_step(const core::ScanSnapshot& scan,
                                   const DispersionConfig& cfg);

core::DriveCommand drive_step(const DriveConfig& cfg);

struct WalkState {
  enum class Mode { kDrive, kTurn };
  enum class Turn { kLeft, kRight };

  Mode mode = Mode::kDrive;
  double remaining = 0.0;  // s left in the current mode
  Turn direction = Turn::kLeft;

  bool operator==(const WalkState&) const = default;
};

/// Fresh DRIVE state with a sampled duration.
WalkState initial_walk_state(Rng& rng, const WalkConfig& cfg);

/// Counts `remaining` down by dt, toggling mode (and resampling) on expiry.
/// The returned command belongs to the resulting mode.
std::pair<WalkState, core::DriveCommand> random_walk_step(WalkState state, double dt,
                                                          Rng& rng,
                                                          const WalkConfig& cfg);

enum class FlockingRule { kRepel, kCohere, kStraight };

struct FlockingDecision {
  FlockingRule rule = FlockingRule::kStraight;
  int turn = 0;  // +1 left, -1 right, 0 straight
};

/// Exactly one rule fires per scan, in priority order repel > cohere > straight.
FlockingDecision classify_flocking(const core::ScanSnapshot& scan,
                                   const FlockingConfig& cfg);

core::DriveCommand flocking_step(const core::ScanSnapshot& scan,
                                 const FlockingConfig& cfg);

class AttractionPattern final : public Pattern {
 public:
  explicit AttractionPattern(AttractionConfig cfg) : cfg_(cfg) {}
  TickOutput tick(const TickInput& in) override;
  bool drives() const override { return true; }
  std::string_view name() const override { return "attraction"; }

 private:
  AttractionConfig cfg_;
};

class DispersionPattern final : public Pattern {
 public:
  explicit DispersionPattern(DispersionConfig cfg) : cfg_(cfg) {}
  TickOutput tick(const TickInput& in) override;
  bool drives() const override { return true; }
  std::string_view name() const override { return "dispersion"; }

  void set_range(double range) { cfg_.dispersion_range = range; }
  const DispersionConfig& config() const { return cfg_; }

 private:
  DispersionConfig cfg_;
};

class DrivePattern final : public Pattern {
 public:
  explicit DrivePattern(DriveConfig cfg) : cfg_(cfg) {}
  TickOutput tick(const TickInput& in) override;
  bool drives() const override { return true; }
  std::string_view name() const override { return "drive"; }

 private:
  DriveConfig cfg_;
};

class RandomWalkPattern final : public Pattern {
 public:
  RandomWalkPattern(WalkConfig cfg, Rng rng);
  TickOutput tick(const TickInput& in) override;
  bool drives() const override { return true; }
  std::string_view name() const override { return "random_walk"; }

  const WalkState& state() const { return state_; }

 private:
  WalkConfig cfg_;
  Rng rng_;
  WalkState state_;
};

class FlockingPattern final : public Pattern {
 public:
  explicit FlockingPattern(FlockingConfig cfg) : cfg_(cfg) {}
  TickOutput tick(const TickInput& in) override;
  bool drives() const override { return true; }
  std::string_view name() const override { return "flocking"; }

 private:
  FlockingConfig cfg_;
};

}  // namespace swarm::patterns
