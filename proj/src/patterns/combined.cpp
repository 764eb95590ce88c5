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

#include "swarm/patterns/combined.hpp"

#include <stdexcept>

namespace swarm::patterns {

namespace {
constexpr double kTimeEpsilon = 1e-9;
}  // namespace

Arbiter phase_arbiter(double switch_time, std::size_t member) {
  return [switch_time, member](double now,
                               std::span<const std::optional<core::DriveCommand>> commands)
             -> std::optional<core::DriveCommand> {
    if (now + kTimeEpsilon < switch_time) return core::DriveCommand{};
    return commands[member];
  };
}

CombinedPattern::CombinedPattern(std::vector<std::unique_ptr<Pattern>> members,
                                 Arbiter arbiter)
    : members_(std::move(members)), arbiter_(std::move(arbiter)) {
  for (const auto& m : members_) {
    if (!m) throw std::invalid_argument("combined pattern member is null");
    if (m->drives()) ++driving_members_;
  }
  if (driving_members_ > 1 && !arbiter_) {
    throw std::invalid_argument(
        "combined pattern has several driving members but no selection rule");
  }
}

TickOutput CombinedPattern::tick(const TickInput& in) {
  TickOutput out;
  std::vector<std::optional<core::DriveCommand>> commands;
  commands.reserve(members_.size());
  for (auto& m : members_) {
    TickOutput o = m->tick(in);
    commands.push_back(o.command);
    out.opinions.insert(out.opinions.end(), o.opinions.begin(), o.opinions.end());
  }
  if (arbiter_) {
    out.command = arbiter_(in.now, commands);
  } else {
    for (const auto& c : commands) {
      if (c) out.command = c;
    }
  }
  return out;
}

std::optional<int> CombinedPattern::opinion() const {
  for (const auto& m : members_) {
    if (auto o = m->opinion()) return o;
  }
  return std::nullopt;
}

std::unique_ptr<Pattern> compose_parallel(std::vector<std::unique_ptr<Pattern>> members,
                                          Arbiter arbiter) {
  return std::make_unique<CombinedPattern>(std::move(members), std::move(arbiter));
}

TimeoutPattern::TimeoutPattern(std::unique_ptr<Pattern> inner, double timeout)
    : inner_(std::move(inner)), timeout_(timeout) {
  if (!inner_) throw std::invalid_argument("timeout wrapper needs a pattern");
}

TickOutput TimeoutPattern::tick(const TickInput& in) {
  if (!started_) started_ = in.now;
  if (!expired_ && in.now + kTimeEpsilon >= *started_ + timeout_) expired_ = true;
  if (expired_) return {core::DriveCommand{}, {}};
  return inner_->tick(in);
}

core::DriveCommand discussed_dispersion_step(DiscussedDispersionState& state,
                                             int opinion, const core::ScanSnapshot& scan,
                                             double now) {
  using Phase = DiscussedDispersionState::Phase;
  if (state.phase == Phase::kDiscussOnly &&
      now + kTimeEpsilon >= state.phase_start + state.decision_duration) {
    state.phase = Phase::kDisperseAndDiscuss;
  }
  state.dispersion.dispersion_range = state.mapping.at(opinion);
  if (state.phase == Phase::kDiscussOnly) return {};
  return dispersion_step(scan, state.dispersion);
}

DiscussedDispersionPattern::DiscussedDispersionPattern(bus::RobotId self,
                                                       int initial_opinion,
                                                       DiscussedDispersionConfig cfg,
                                                       Rng rng, double start_time)
    : voting_(self, initial_opinion,
              VotingConfig{DecisionRule::kMajority, cfg.voting.window_length,
                           cfg.voting.window_start},
              std::move(rng)) {
  state_.phase_start = start_time;
  state_.decision_duration = cfg.decision_duration;
  state_.dispersion = cfg.dispersion;
  state_.mapping = std::move(cfg.mapping);
  if (!state_.mapping.contains(initial_opinion)) {
    throw std::invalid_argument("initial opinion has no mapped distance");
  }
}

TickOutput DiscussedDispersionPattern::tick(const TickInput& in) {
  TickOutput out = voting_.tick(in);
  out.command = discussed_dispersion_step(state_, voting_.opinion().value(), *in.scan, in.now);
  return out;
}

}  // namespace swarm::patterns
