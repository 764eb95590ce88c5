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
#include <deque>
#include <functional>
#include <span>
#include <vector>

#include "swarm/patterns/pattern.hpp"

namespace swarm::patterns {

enum class DecisionRule { kMajority, kVoter };

/// Plurality over the latest opinion of each distinct sender, with the
/// robot's own entry replaced by `own_opinion`. Ties keep `own_opinion` when
/// it is among the maxima, otherwise the smallest tied opinion wins.
int majority_opinion(std::span<const StampedOpinion> buffer, bus::RobotId self,
                     int own_opinion);

/// Opinion of one uniformly drawn distinct sender other than `self`;
/// `own_opinion` when there is none.
int voter_opinion(std::span<const StampedOpinion> buffer, bus::RobotId self,
                  int own_opinion, Rng& rng);

/// Tumbling-window opinion state for one robot.
///
/// Window k covers [start + k*length, start + (k+1)*length). A stamp's window
/// is floor((stamp - start) / length); the same function decides whether a
/// window is due, so the partition stays exact under floating-point clocks.
class VotingState {
 public:
  VotingState(bus::RobotId self, int opinion, double window_start, double window_length,
              DecisionRule rule, Rng rng = Rng{});

  /// Appends to the buffer. Throws std::invalid_argument when `stamp` is not
  /// in the current window.
  void ingest(const bus::OpinionMessage& msg, double stamp);

  /// Applies the decision rule, clears the buffer and advances one window.
  /// Returns the message announcing the updated opinion.
  bus::OpinionMessage close_window();

  std::int64_t window_of(double stamp) const;
  bool window_due(double now) const { return window_of(now) > window_index_; }

  bus::RobotId self() const { return self_; }
  int opinion() const { return opinion_; }
  DecisionRule rule() const { return rule_; }
  std::int64_t window_index() const { return window_index_; }
  double window_start() const;
  double window_end() const;
  double window_length() const { return length_; }
  const std::vector<StampedOpinion>& buffer() const { return buffer_; }

 private:
  bus::RobotId self_;
  int opinion_;
  double origin_;
  double length_;
  DecisionRule rule_;
  Rng rng_;
  std::int64_t window_index_ = 0;
  std::vector<StampedOpinion> buffer_;
};

/// Decides which received opinions count as coming from a neighbor.
using NeighborFilter = std::function<bool(const bus::OpinionMessage&)>;

/// Every swarm member is a neighbor.
NeighborFilter all_neighbors();

struct VotingConfig {
  DecisionRule rule = DecisionRule::kMajority;
  double window_length = 1.0;
  double window_start = 0.0;
};

/// Voting behavior: announces its opinion on the first tick and after every
/// window close, and never drives.
class VotingPattern final : public Pattern {
 public:
  VotingPattern(bus::RobotId self, int initial_opinion, VotingConfig cfg, Rng rng,
                NeighborFilter filter = all_neighbors());

  TickOutput tick(const TickInput& in) override;
  bool drives() const override { return false; }
  std::optional<int> opinion() const override { return state_.opinion(); }
  std::string_view name() const override {
    return state_.rule() == DecisionRule::kMajority ? "majority_rule" : "voter_model";
  }

  const VotingState& state() const { return state_; }

 private:
  VotingState state_;
  NeighborFilter filter_;
  std::deque<StampedOpinion> pending_;
  bool announced_ = false;
};

}  // namespace swarm::patterns
