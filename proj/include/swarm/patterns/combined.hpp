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

#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "swarm/patterns/movement.hpp"
#include "swarm/patterns/voting.hpp"

namespace swarm::patterns {

/// Picks the forwarded command from the members' commands (one slot per
/// member, empty for members that did not drive this tick).
using Arbiter = std::function<std::optional<core::DriveCommand>(
    double now, std::span<const std::optional<core::DriveCommand>> commands)>;

/// Stops until `switch_time`, then forwards member `member`.
Arbiter phase_arbiter(double switch_time, std::size_t member);

/// Runs all members every tick, forwards one command and merges the opinions
/// they publish.
class CombinedPattern final : public Pattern {
 public:
  /// Throws std::invalid_argument when several members drive and no arbiter
  /// is given.
  CombinedPattern(std::vector<std::unique_ptr<Pattern>> members, Arbiter arbiter = {});

  TickOutput tick(const TickInput& in) override;
  bool drives() const override { return driving_members_ > 0 || static_cast<bool>(arbiter_); }
  std::optional<int> opinion() const override;
  std::string_view name() const override { return "combined"; }

  const Pattern& member(std::size_t i) const { return *members_.at(i); }

 private:
  std::vector<std::unique_ptr<Pattern>> members_;
  Arbiter arbiter_;
  std::size_t driving_members_ = 0;
};

std::unique_ptr<Pattern> compose_parallel(std::vector<std::unique_ptr<Pattern>> members,
                                          Arbiter arbiter = {});

/// Forces a stop once `timeout` seconds have passed since the first tick.
class TimeoutPattern final : public Pattern {
 public:
  TimeoutPattern(std::unique_ptr<Pattern> inner, double timeout);

  TickOutput tick(const TickInput& in) override;
  bool drives() const override { return true; }
  std::optional<int> opinion() const override { return inner_->opinion(); }
  std::string_view name() const override { return inner_->name(); }
  bool expired() const { return expired_; }

 private:
  std::unique_ptr<Pattern> inner_;
  double timeout_;
  std::optional<double> started_;
  bool expired_ = false;
};

/// Movement half of discussed dispersion: hold still while the swarm
/// discusses, then disperse at the distance mapped from the current opinion.
struct DiscussedDispersionState {
  enum class Phase { kDiscussOnly, kDisperseAndDiscuss };

  Phase phase = Phase::kDiscussOnly;
  double phase_start = 0.0;
  double decision_duration = 20.0;
  DispersionConfig dispersion;
  std::map<int, double> mapping;  // opinion -> dispersion range in meters
};

/// Advances the phase if due and returns this tick's command. The dispersion
/// range is refreshed from `opinion` before the command is computed. Throws
/// std::out_of_range for an unmapped opinion.
core::DriveCommand discussed_dispersion_step(DiscussedDispersionState& state,
                                             int opinion, const core::ScanSnapshot& scan,
                                             double now);

struct DiscussedDispersionConfig {
  double decision_duration = 20.0;
  std::map<int, double> mapping{{0, 0.6}, {1, 1.0}, {2, 1.4}};
  DispersionConfig dispersion;
  VotingConfig voting;
};

/// Majority rule and dispersion in parallel.
class DiscussedDispersionPattern final : public Pattern {
 public:
  DiscussedDispersionPattern(bus::RobotId self, int initial_opinion,
                             DiscussedDispersionConfig cfg, Rng rng, double start_time = 0.0);

  TickOutput tick(const TickInput& in) override;
  bool drives() const override { return true; }
  std::optional<int> opinion() const override { return voting_.opinion(); }
  std::string_view name() const override { return "discussed_dispersion"; }

  const DiscussedDispersionState& state() const { return state_; }

 private:
  VotingPattern voting_;
  DiscussedDispersionState state_;
};

}  // namespace swarm::patterns
