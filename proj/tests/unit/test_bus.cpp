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


#include <doctest.h>

#include <random>
#include <stdexcept>

#include "swarm/bus/bus.hpp"

using namespace swarm;
using bus::Bus;
using bus::Envelope;
using bus::OpinionMessage;
using bus::TopicName;

namespace {

Envelope vote(int sender, int opinion, double stamp = 0.0) {
  return {TopicName::global("vote"), OpinionMessage{sender, opinion}, sender, stamp};
}

int opinion_of(const Envelope& e) { return std::get<OpinionMessage>(e.payload).opinion; }

}  // namespace

TEST_CASE("topic names") {
  CHECK(TopicName::global("vote").str() == "/vote");
  CHECK(TopicName::robot(4, "scan").str() == "/robot_4/scan");
  CHECK(TopicName::global("vote").is_global());
  CHECK_FALSE(TopicName::robot(0, "vote").is_global());
  CHECK(TopicName::robot(0, "vote") != TopicName::global("vote"));
}

TEST_CASE("publishing without subscribers reaches nobody") {
  Bus b;
  CHECK(b.publish(vote(1, 0)) == 0);
  CHECK(b.pending_count() == 0);
}

TEST_CASE("global vote reaches every subscriber including the sender") {
  Bus b;
  std::vector<bus::SubscriptionHandle> handles;
  for (int r = 1; r <= 7; ++r) handles.push_back(b.subscribe(TopicName::global("vote"), r));
  CHECK(b.publish(vote(3, 2)) == 7);
  b.flush();
  for (auto h : handles) {
    const auto got = b.drain(h);
    REQUIRE(got.size() == 1);
    CHECK(got[0].sender == 3);
    CHECK(opinion_of(got[0]) == 2);
  }
}

TEST_CASE("delivery is staged until flush") {
  Bus b;
  const auto h = b.subscribe(TopicName::global("vote"), 0);
  b.publish(vote(1, 1));
  CHECK(b.pending_count() == 1);
  CHECK(b.drain(h).empty());
  b.flush();
  CHECK(b.drain(h).size() == 1);
  CHECK(b.drain(h).empty());
}

TEST_CASE("per-sender order is preserved") {
  Bus b;
  const auto h = b.subscribe(TopicName::global("vote"), 0);
  for (int k = 0; k < 5; ++k) b.publish(vote(2, k));
  b.flush();
  const auto got = b.drain(h);
  REQUIRE(got.size() == 5);
  for (int k = 0; k < 5; ++k) CHECK(opinion_of(got[static_cast<std::size_t>(k)]) == k);
}

TEST_CASE("late subscribers get no history") {
  Bus b;
  b.publish(vote(1, 1));
  const auto h = b.subscribe(TopicName::global("vote"), 0);
  b.flush();
  CHECK(b.drain(h).empty());
}

TEST_CASE("subscribe is idempotent per robot and node") {
  Bus b;
  const auto a = b.subscribe(TopicName::robot(1, "scan"), 1, "pattern");
  const auto again = b.subscribe(TopicName::robot(1, "scan"), 1, "pattern");
  const auto other = b.subscribe(TopicName::robot(1, "scan"), 1, "protection");
  CHECK(a == again);
  CHECK_FALSE(a == other);
  CHECK(b.subscriber_count(TopicName::robot(1, "scan")) == 2);
}

TEST_CASE("each subscriber drains its own copy") {
  Bus b;
  const auto x = b.subscribe(TopicName::global("vote"), 0);
  const auto y = b.subscribe(TopicName::global("vote"), 1);
  b.publish(vote(5, 1));
  b.flush();
  CHECK(b.drain(x).size() == 1);
  CHECK(b.drain(y).size() == 1);
}

TEST_CASE("namespaced topics are isolated") {
  Bus b;
  const auto mine = b.subscribe(TopicName::robot(1, "cmd_vel"), 1);
  const auto theirs = b.subscribe(TopicName::robot(2, "cmd_vel"), 2);
  b.publish({TopicName::robot(2, "cmd_vel"), core::DriveCommand{0.1, 0.0}, 2, 0.0});
  b.flush();
  CHECK(b.drain(mine).empty());
  CHECK(b.drain(theirs).size() == 1);
}

TEST_CASE("draining an unknown handle throws") {
  Bus b;
  CHECK_THROWS_AS(b.drain({42}), std::out_of_range);
}

TEST_CASE("random traffic is neither lost nor duplicated") {
  Bus b;
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> robot(0, 4);
  std::vector<bus::SubscriptionHandle> subs;
  for (int r = 0; r < 5; ++r) subs.push_back(b.subscribe(TopicName::global("vote"), r));
  std::vector<std::size_t> received(5, 0);
  std::size_t sent = 0;
  for (int tick = 0; tick < 200; ++tick) {
    const int burst = robot(rng);
    for (int k = 0; k < burst; ++k) {
      CHECK(b.publish(vote(robot(rng), k, tick)) == subs.size());
      ++sent;
    }
    b.flush();
    for (std::size_t i = 0; i < subs.size(); ++i) received[i] += b.drain(subs[i]).size();
  }
  for (auto n : received) CHECK(n == sent);
}
