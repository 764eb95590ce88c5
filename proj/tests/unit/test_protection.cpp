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

#include "swarm/protection/protection.hpp"

using namespace swarm;
using core::DriveCommand;
using core::ScanSnapshot;
using protection::ProtectionConfig;
using protection::ProtectionLayer;

namespace {

constexpr core::DriveLimits kTb3{0.2, 1.8, 1.0};
constexpr core::DriveLimits kJackal{0.5, 1.5, 1.0};

ScanSnapshot single(std::size_t beam, double range, double floor = 0.12, double ceil = 3.5) {
  auto s = ScanSnapshot::empty(360, floor, ceil);
  s.ranges[beam] = range;
  return s;
}

}  // namespace

TEST_CASE("TurtleBot3 obstacle inside the threshold suppresses the pattern") {
  ProtectionLayer layer({0.5, 0.5, kTb3}, 0.12);
  layer.on_pattern_command({0.2, 0.0}, 0.0);
  const auto scan = single(0, 0.4);
  const auto a = layer.arbitrate(scan, 0.05);
  CHECK(a.suppressed);
  CHECK(a.command == protection::avoidance_command(scan, 0.5, kTb3));
  CHECK(a.command.linear == 0.0);
  CHECK(std::fabs(a.command.angular) == doctest::Approx(1.8));
}

TEST_CASE("Jackal clear scan forwards the fresh pattern command") {
  ProtectionLayer layer({1.2, 0.5, kJackal}, 0.8);
  layer.on_pattern_command({0.5, 0.1}, 3.0);
  const auto a = layer.arbitrate(single(10, 2.0, 0.8, 5.0), 3.1);
  CHECK_FALSE(a.suppressed);
  CHECK(a.command == DriveCommand{0.5, 0.1});
}

TEST_CASE("stale or missing pattern commands stop the robot") {
  ProtectionLayer layer({0.5, 0.5, kTb3}, 0.12);
  const auto clear = ScanSnapshot::empty(360, 0.12, 3.5);
  CHECK(layer.arbitrate(clear, 0.0).command == DriveCommand{});
  layer.on_pattern_command({0.1, 0.2}, 1.0);
  CHECK(layer.arbitrate(clear, 1.5).command == DriveCommand{0.1, 0.2});
  CHECK(layer.arbitrate(clear, 1.6).command == DriveCommand{});
}

TEST_CASE("exactly at the threshold does not trigger") {
  ProtectionLayer layer({0.5, 0.5, kTb3}, 0.12);
  layer.on_pattern_command({0.1, 0.0}, 0.0);
  CHECK_FALSE(layer.arbitrate(single(90, 0.5), 0.0).suppressed);
}

TEST_CASE("readings below the sensor floor are invisible") {
  ProtectionLayer layer({0.5, 0.5, kTb3}, 0.12);
  layer.on_pattern_command({0.1, 0.0}, 0.0);
  CHECK_FALSE(layer.arbitrate(single(90, 0.05), 0.0).suppressed);
}

TEST_CASE("threshold below the floor is rejected") {
  CHECK_THROWS_AS(ProtectionLayer({0.5, 0.5, kTb3}, 0.8), std::invalid_argument);
  CHECK_THROWS_AS(ProtectionLayer({0.5, -1.0, kTb3}, 0.12), std::invalid_argument);
}

TEST_CASE("suppression soundness on random inputs") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> range(0.0, 4.0);
  std::uniform_real_distribution<double> lin(0.0, 0.2);
  std::uniform_real_distribution<double> ang(-1.8, 1.8);
  std::bernoulli_distribution sparse(0.9);
  for (int t = 0; t < 1000; ++t) {
    ProtectionLayer layer({0.5, 0.5, kTb3}, 0.12);
    auto scan = ScanSnapshot::empty(360, 0.12, 3.5);
    for (auto& v : scan.ranges) v = sparse(rng) ? ScanSnapshot::kNoReturn : range(rng);
    const DriveCommand pattern{lin(rng), ang(rng)};
    layer.on_pattern_command(pattern, 1.0);
    const auto a = layer.arbitrate(scan, 1.0);
    const auto n = core::nearest_obstacle(scan);
    if (n && n->distance < 0.5) {
      CHECK(a.suppressed);
      CHECK(a.command == protection::avoidance_command(scan, 0.5, kTb3));
    } else {
      CHECK_FALSE(a.suppressed);
      CHECK(a.command == pattern);
    }
  }
}
