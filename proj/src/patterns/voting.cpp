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

#include "swarm/patterns/voting.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace swarm::patterns {

namespace {

std::map<bus::RobotId, int> latest_by_sender(std::span<const StampedOpinion> buffer) {
  std::map<bus::RobotId, int> latest;
  for (const auto& m : buffer) latest[m.message.robot_id] = m.message.opinion;
  return latest;
}

}  // namespace

int majority_opinion(std::span<const StampedOpinion> buffer, bus::RobotId self,
                     int own_opinion) {
  auto latest = latest_by_sender(buffer);
  latest[self] = own_opinion;

  std::map<int, int> counts;
  for (const auto& [id, opinion] : latest) ++counts[opinion];

  int best_count = 0;
  for (const auto& [opinion, count] : counts) best_count = std::max(best_count, count);
  if (counts[own_opinion] == best_count) return own_opinion;
  for (const auto& [opinion, count] : counts) {
    if (count == best_count) return opinion;  // map order: smallest first
  }
  return own_opinion;
}

int voter_opinion(std::span<const StampedOpinion> buffer, bus::RobotId self,
                  int own_opinion, Rng& rng) {
  auto latest = latest_by_sender(buffer);
  latest.erase(self);
  if (latest.empty()) return own_opinion;
  std::uniform_int_distribution<std::size_t> pick(0, latest.size() - 1);
  return std::next(latest.begin(), static_cast<std::ptrdiff_t>(pick(rng)))->second;
}

VotingState::VotingState(bus::RobotId self, int opinion, double window_start,
                         double window_length, DecisionRule rule, Rng rng)
    : self_(self),
      opinion_(opinion),
      origin_(window_start),
      length_(window_length),
      rule_(rule),
      rng_(std::move(rng)) {
  if (!(window_length > 0.0)) {
    throw std::invalid_argument("voting window length must be positive");
  }
}

std::int64_t VotingState::window_of(double stamp) const {
  return static_cast<std::int64_t>(std::floor((stamp - origin_) / length_));
}

double VotingState::window_start() const {
  return origin_ + static_cast<double>(window_index_) * length_;
}

double VotingState::window_end() const {
  return origin_ + static_cast<double>(window_index_ + 1) * length_;
}

void VotingState::ingest(const bus::OpinionMessage& msg, double stamp) {
  if (window_of(stamp) != window_index_) {
    throw std::invalid_argument("opinion stamp outside the current window");
  }
  buffer_.push_back({msg, stamp});
}

bus::OpinionMessage VotingState::close_window() {
  opinion_ = rule_ == DecisionRule::kMajority
                 ? majority_opinion(buffer_, self_, opinion_)
                 : voter_opinion(buffer_, self_, opinion_, rng_);
  buffer_.clear();
  ++window_index_;
  return {self_, opinion_};
}

NeighborFilter all_neighbors() {
  return [](const bus::OpinionMessage&) { return true; };
}

VotingPattern::VotingPattern(bus::RobotId self, int initial_opinion, VotingConfig cfg,
                             Rng rng, NeighborFilter filter)
    : state_(self, initial_opinion, cfg.window_start, cfg.window_length, cfg.rule,
             std::move(rng)),
      filter_(std::move(filter)) {}

TickOutput VotingPattern::tick(const TickInput& in) {
  TickOutput out;
  if (!announced_) {
    out.opinions.push_back({state_.self(), state_.opinion()});
    announced_ = true;
  }
  for (const auto& m : in.opinions) {
    if (filter_(m.message)) pending_.push_back(m);
  }
  std::stable_sort(pending_.begin(), pending_.end(),
                   [](const auto& a, const auto& b) { return a.stamp < b.stamp; });

  auto ingest_current = [this] {
    while (!pending_.empty() &&
           state_.window_of(pending_.front().stamp) <= state_.window_index()) {
      const auto& m = pending_.front();
      // Anything older than the open window missed its close; drop it.
      if (state_.window_of(m.stamp) == state_.window_index()) {
        state_.ingest(m.message, m.stamp);
      }
      pending_.pop_front();
    }
  };

  while (state_.window_due(in.now)) {
    ingest_current();
    out.opinions.push_back(state_.close_window());
  }
  ingest_current();
  return out;
}

}  // namespace swarm::patterns
