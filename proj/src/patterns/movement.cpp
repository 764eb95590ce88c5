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

#include "swarm/patterns/movement.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace swarm::patterns {

Rng make_rng(std::uint64_t seed, bus::RobotId robot) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(robot), 0x5eedu};
  return Rng(seq);
}

core::DriveCommand attraction_step(const core::ScanSnapshot& scan,
                                   const AttractionConfig& cfg) {
  return core::vector_to_drive(
      core::potential_field(scan, cfg.attraction_range, core::Polarity::kAttractive),
      cfg.limits);
}

core::DriveCommand dispersion_step(const core::ScanSnapshot& scan,
                                   const DispersionConfig& cfg) {
  return core::vector_to_drive(
      core::potential_field(scan, cfg.dispersion_range, core::Polarity::kRepulsive),
      cfg.limits);
}

core::DriveCommand drive_step(const DriveConfig& cfg) {
  return core::DriveCommand::clamped(cfg.linear, 0.0, cfg.limits);
}

namespace {

double uniform(Rng& rng, double lo, double hi) {
  if (hi <= lo) return lo;
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

WalkState enter_drive(Rng& rng, const WalkConfig& cfg) {
  WalkState s;
  s.mode = WalkState::Mode::kDrive;
  s.remaining = uniform(rng, cfg.drive_min, cfg.drive_max);
  return s;
}

WalkState enter_turn(Rng& rng, const WalkConfig& cfg) {
  WalkState s;
  s.mode = WalkState::Mode::kTurn;
  const double angle = uniform(rng, cfg.turn_min, cfg.turn_max);
  s.direction = std::bernoulli_distribution(0.5)(rng) ? WalkState::Turn::kLeft
                                                      : WalkState::Turn::kRight;
  s.remaining = angle / cfg.angular;
  return s;
}

core::DriveCommand walk_command(const WalkState& s, const WalkConfig& cfg) {
  if (s.mode == WalkState::Mode::kDrive) {
    return core::DriveCommand::clamped(cfg.linear, 0.0, cfg.limits);
  }
  const double sign = s.direction == WalkState::Turn::kLeft ? 1.0 : -1.0;
  return core::DriveCommand::clamped(cfg.curved_turn ? cfg.linear : 0.0,
                                     sign * cfg.angular, cfg.limits);
}

}  // namespace

WalkState initial_walk_state(Rng& rng, const WalkConfig& cfg) {
  return enter_drive(rng, cfg);
}

std::pair<WalkState, core::DriveCommand> random_walk_step(WalkState state, double dt,
                                                          Rng& rng,
                                                          const WalkConfig& cfg) {
  state.remaining -= dt;
  if (state.remaining <= 0.0) {
    state = state.mode == WalkState::Mode::kDrive ? enter_turn(rng, cfg)
                                                  : enter_drive(rng, cfg);
  }
  return {state, walk_command(state, cfg)};
}

void FlockingConfig::validate(double range_min, double range_max) const {
  constexpr double kQuarter = std::numbers::pi / 2;
  constexpr double kTol = 1e-9;
  const bool tiles = std::abs(front_half_width + left_half_width - kQuarter) < kTol &&
                     std::abs(left_half_width + back_half_width - kQuarter) < kTol &&
                     std::abs(back_half_width + right_half_width - kQuarter) < kTol &&
                     std::abs(right_half_width + front_half_width - kQuarter) < kTol;
  if (!tiles) {
    throw std::invalid_argument("flocking sectors do not partition the circle");
  }
  if (!(range_min < near && near < far && far <= range_max)) {
    throw std::invalid_argument("flocking thresholds must satisfy range_min < near < far <= range_max");
  }
}

FlockingDecision classify_flocking(const core::ScanSnapshot& scan,
                                   const FlockingConfig& cfg) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  double nearest = kInf;
  double nearest_bearing = 0.0;
  double nearest_left = kInf;
  double nearest_right = kInf;
  const double left_lo = cfg.front_half_width;
  const double left_hi = std::numbers::pi - cfg.back_half_width;
  const double right_lo = -(std::numbers::pi - cfg.back_half_width);
  const double right_hi = -cfg.front_half_width;

  for (std::size_t i = 0; i < scan.ranges.size(); ++i) {
    const double r = scan.ranges[i];
    if (!scan.is_valid(r)) continue;
    const double b = core::normalize_angle(scan.bearing(i));
    if (r < nearest) {
      nearest = r;
      nearest_bearing = b;
    }
    if (b >= left_lo && b <= left_hi) nearest_left = std::min(nearest_left, r);
    if (b >= right_lo && b <= right_hi) nearest_right = std::min(nearest_right, r);
  }

  if (nearest < cfg.near) {
    // Away from the obstacle; dead ahead or dead behind turns right.
    return {FlockingRule::kRepel, nearest_bearing < 0.0 && nearest_bearing > -std::numbers::pi ? 1 : -1};
  }
  const bool left = nearest_left <= cfg.far;
  const bool right = nearest_right <= cfg.far;
  if (left != right) {
    return {FlockingRule::kCohere, left ? 1 : -1};
  }
  return {FlockingRule::kStraight, 0};
}

core::DriveCommand flocking_step(const core::ScanSnapshot& scan,
                                 const FlockingConfig& cfg) {
  const FlockingDecision d = classify_flocking(scan, cfg);
  if (d.turn == 0) return core::DriveCommand::clamped(cfg.linear, 0.0, cfg.limits);
  return core::DriveCommand::clamped(cfg.linear_turning, d.turn * cfg.angular, cfg.limits);
}

TickOutput AttractionPattern::tick(const TickInput& in) {
  return {attraction_step(*in.scan, cfg_), {}};
}

TickOutput DispersionPattern::tick(const TickInput& in) {
  return {dispersion_step(*in.scan, cfg_), {}};
}

TickOutput DrivePattern::tick(const TickInput&) { return {drive_step(cfg_), {}}; }

RandomWalkPattern::RandomWalkPattern(WalkConfig cfg, Rng rng)
    : cfg_(cfg), rng_(std::move(rng)), state_(initial_walk_state(rng_, cfg_)) {}

TickOutput RandomWalkPattern::tick(const TickInput& in) {
  auto [next, cmd] = random_walk_step(state_, in.dt, rng_, cfg_);
  state_ = next;
  return {cmd, {}};
}

TickOutput FlockingPattern::tick(const TickInput& in) {
  return {flocking_step(*in.scan, cfg_), {}};
}

}  // namespace swarm::patterns
