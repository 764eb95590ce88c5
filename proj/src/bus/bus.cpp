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

#include "swarm/bus/bus.hpp"

#include <stdexcept>

namespace swarm::bus {

std::string TopicName::str() const {
  if (!ns) return "/" + name;
  return "/robot_" + std::to_string(*ns) + "/" + name;
}

SubscriptionHandle Bus::subscribe(const TopicName& topic, RobotId subscriber,
                                  std::string_view node) {
  auto& subs = by_topic_[topic];
  for (std::size_t idx : subs) {
    const auto& s = subscriptions_[idx];
    if (s.subscriber == subscriber && s.node == node) return {idx};
  }
  subscriptions_.push_back({topic, subscriber, std::string(node), {}});
  subs.push_back(subscriptions_.size() - 1);
  return {subscriptions_.size() - 1};
}

std::size_t Bus::publish(Envelope envelope) {
  auto it = by_topic_.find(envelope.topic);
  if (it == by_topic_.end()) return 0;
  for (std::size_t idx : it->second) {
    subscriptions_[idx].queue.push_back({envelope, epoch_});
    ++staged_;
  }
  return it->second.size();
}

void Bus::flush() {
  ++epoch_;
  staged_ = 0;
}

std::vector<Envelope> Bus::drain(SubscriptionHandle handle) {
  if (handle.index >= subscriptions_.size()) {
    throw std::out_of_range("unknown subscription handle");
  }
  auto& queue = subscriptions_[handle.index].queue;
  std::vector<Envelope> out;
  while (!queue.empty() && queue.front().epoch < epoch_) {
    out.push_back(std::move(queue.front().envelope));
    queue.pop_front();
  }
  return out;
}

std::size_t Bus::subscriber_count(const TopicName& topic) const {
  auto it = by_topic_.find(topic);
  return it == by_topic_.end() ? 0 : it->second.size();
}

}  // namespace swarm::bus
