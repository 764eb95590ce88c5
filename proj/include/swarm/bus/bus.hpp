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

#include <compare>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "swarm/core/types.hpp"

namespace swarm::bus {

using RobotId = int;

/// Opinion exchanged by voting patterns on a global topic.
struct OpinionMessage {
  RobotId robot_id = 0;
  int opinion = 0;
  bool operator==(const OpinionMessage&) const = default;
};

/// A topic is either global (no namespace) or owned by exactly one robot.
struct TopicName {
  std::optional<RobotId> ns;
  std::string name;

  static TopicName global(std::string name) { return {std::nullopt, std::move(name)}; }
  static TopicName robot(RobotId id, std::string name) { return {id, std::move(name)}; }

  bool is_global() const { return !ns.has_value(); }
  std::string str() const;

  auto operator<=>(const TopicName&) const = default;
  bool operator==(const TopicName&) const = default;
};

using Payload = std::variant<core::ScanSnapshot, core::DriveCommand, OpinionMessage>;

struct Envelope {
  TopicName topic;
  Payload payload;
  RobotId sender = 0;
  double stamp = 0.0;
};

struct SubscriptionHandle {
  std::size_t index = 0;
  bool operator==(const SubscriptionHandle&) const = default;
};

/// Reliable in-process publish/subscribe bus with staged delivery.
///
/// publish() fans an envelope out to the subscribers present at that moment;
/// the copies become visible to drain() after the next flush(). Late
/// subscribers never see earlier traffic. Per (sender, topic) order is FIFO.
/// Not thread-safe: the scheduler serializes all calls.
class Bus {
 public:
  /// Idempotent per (topic, subscriber, node). `node` tells apart several
  /// consumers on one robot, e.g. a pattern and the protection layer.
  SubscriptionHandle subscribe(const TopicName& topic, RobotId subscriber,
                               std::string_view node = {});

  /// Returns the number of subscribers the envelope was fanned out to.
  std::size_t publish(Envelope envelope);

  /// Makes everything published so far drainable.
  void flush();

  /// Removes and returns delivered envelopes in delivery order.
  std::vector<Envelope> drain(SubscriptionHandle handle);

  std::size_t subscriber_count(const TopicName& topic) const;
  std::size_t pending_count() const { return staged_; }

 private:
  struct Queued {
    Envelope envelope;
    std::size_t epoch;
  };
  struct Subscription {
    TopicName topic;
    RobotId subscriber;
    std::string node;
    std::deque<Queued> queue;
  };

  std::vector<Subscription> subscriptions_;
  std::map<TopicName, std::vector<std::size_t>> by_topic_;
  std::size_t epoch_ = 0;
  std::size_t staged_ = 0;
};

}  // namespace swarm::bus
