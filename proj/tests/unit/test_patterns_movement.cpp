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

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "swarm/patterns/movement.hpp"

using namespace swarm;
using namespace swarm::patterns;
using core::DriveCommand;
using core::ScanSnapshot;
using std::numbers::pi;

namespace {

constexpr core::DriveLimits kLimits{0.2, 1.8, 1.0};

ScanSnapshot scan_with(std::initializer_list<std::pair<double, double>> hits) {
  auto s = ScanSnapshot::empty(360, 0.12, 3.5);
  for (auto [bearing, range] : hits) s.ranges[s.beam_at(bearing)] = range;
  return s;
}

TickInput input_for(const ScanSnapshot& s, double now = 0.0, double dt = 0.1) {
  return {now, dt, &s, {}};
}

}  // namespace

TEST_CASE("attraction") {
  const AttractionConfig cfg{2.0, kLimits};
  CHECK(attraction_step(ScanSnapshot::empty(360, 0.12, 3.5), cfg) == DriveCommand{});

  const auto ahead = attraction_step(scan_with({{0.0, 1.0}}), cfg);
  CHECK(ahead.linear > 0.0);
  CHECK(ahead.angular == doctest::Approx(0.0).scale(1.0));

  const auto left = attraction_step(scan_with({{pi / 2, 1.0}}), cfg);
  CHECK(left.angular > 0.0);

  const auto behind = attraction_step(scan_with({{pi, 1.0}}), cfg);
  CHECK(behind.linear == 0.0);
  CHECK(std::fabs(behind.angular) == doctest::Approx(1.8));
}

TEST_CASE("dispersion") {
  const DispersionConfig cfg{1.0, kLimits};
  SUBCASE("obstacle ahead turns the robot around in place") {
    const auto c = dispersion_step(scan_with({{0.0, 0.5}}), cfg);
    CHECK(c.linear == 0.0);
    CHECK(std::fabs(c.angular) == doctest::Approx(1.8));
  }
  SUBCASE("symmetric sides give no turn") {
    const auto c = dispersion_step(scan_with({{pi / 2, 0.6}, {-pi / 2, 0.6}}), cfg);
    CHECK(c.angular == doctest::Approx(0.0).scale(1.0));
  }
  SUBCASE("equilibrium stops") {
    CHECK(dispersion_step(scan_with({{0.3, 1.2}}), cfg) == DriveCommand{});
    CHECK(dispersion_step(ScanSnapshot::empty(360, 0.12, 3.5), cfg) == DriveCommand{});
  }
  SUBCASE("obstacle behind drives forward") {
    const auto c = dispersion_step(scan_with({{pi, 0.4}}), cfg);
    CHECK(c.linear > 0.0);
  }
}

// Negating the field moves its bearing by pi rather than flipping its sign, so
// the two steering outputs are mirror images only for purely lateral fields.
// In general they turn in opposite directions.
TEST_CASE("attraction and dispersion steer opposite ways on the same scan") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> bearing(-pi, pi);
  std::uniform_real_distribution<double> range(0.2, 0.95);
  const core::DriveLimits wide{0.2, 10.0, 1.0};
  for (int t = 0; t < 500; ++t) {
    auto s = ScanSnapshot::empty(360, 0.12, 3.5);
    for (int k = 0; k < 3; ++k) s.ranges[s.beam_at(bearing(rng))] = range(rng);
    const auto field = core::potential_field(s, 1.0, core::Polarity::kAttractive);
    if (field.is_zero() || field.y == 0.0) continue;
    const auto a = attraction_step(s, {1.0, wide});
    const auto d = dispersion_step(s, {1.0, wide});
    CHECK(a.angular * d.angular < 0.0);
  }
  const auto side = scan_with({{pi / 2, 0.5}});
  CHECK(attraction_step(side, {1.0, kLimits}).angular ==
        doctest::Approx(-dispersion_step(side, {1.0, kLimits}).angular));
}

TEST_CASE("drive") {
  CHECK(drive_step({0.15, kLimits}) == DriveCommand{0.15, 0.0});
  CHECK(drive_step({0.0, kLimits}) == DriveCommand{});
  DrivePattern p({0.15, kLimits});
  const auto a = p.tick(input_for(ScanSnapshot::empty(360, 0.12, 3.5)));
  const auto b = p.tick(input_for(scan_with({{0.0, 0.3}})));
  CHECK(a.command == b.command);
}

TEST_CASE("random walk state machine") {
  WalkConfig cfg;
  cfg.limits = kLimits;
  Rng rng = make_rng(1, 0);

  SUBCASE("drive counts down") {
    auto [next, cmd] = random_walk_step({WalkState::Mode::kDrive, 1.0}, 0.1, rng, cfg);
    CHECK(next.mode == WalkState::Mode::kDrive);
    CHECK(next.remaining == doctest::Approx(0.9));
    CHECK(cmd == DriveCommand{0.15, 0.0});
  }
  SUBCASE("expiry switches to a freshly sampled turn") {
    auto [next, cmd] = random_walk_step({WalkState::Mode::kDrive, 0.05}, 0.1, rng, cfg);
    CHECK(next.mode == WalkState::Mode::kTurn);
    CHECK(next.remaining >= cfg.turn_min / cfg.angular);
    CHECK(next.remaining <= cfg.turn_max / cfg.angular);
    CHECK(cmd.linear == 0.0);
    CHECK(std::fabs(cmd.angular) == cfg.angular);
  }
  SUBCASE("turn expiry samples a drive duration") {
    auto [next, cmd] = random_walk_step({WalkState::Mode::kTurn, 0.01}, 0.1, rng, cfg);
    CHECK(next.mode == WalkState::Mode::kDrive);
    CHECK(next.remaining >= cfg.drive_min);
    CHECK(next.remaining <= cfg.drive_max);
    CHECK(cmd.angular == 0.0);
  }
  SUBCASE("a fixed seed replays the same trajectory") {
    Rng r1 = make_rng(42, 3);
    Rng r2 = make_rng(42, 3);
    WalkState s1 = initial_walk_state(r1, cfg);
    WalkState s2 = initial_walk_state(r2, cfg);
    for (int k = 0; k < 2000; ++k) {
      auto [n1, c1] = random_walk_step(s1, 0.1, r1, cfg);
      auto [n2, c2] = random_walk_step(s2, 0.1, r2, cfg);
      REQUIRE(n1 == n2);
      REQUIRE(c1 == c2);
      CHECK(n1.remaining >= 0.0);
      s1 = n1;
      s2 = n2;
    }
  }
  SUBCASE("both modes and both directions occur") {
    WalkState s = initial_walk_state(rng, cfg);
    bool left = false;
    bool right = false;
    for (int k = 0; k < 5000; ++k) {
      auto [n, c] = random_walk_step(s, 0.1, rng, cfg);
      if (c.angular > 0) left = true;
      if (c.angular < 0) right = true;
      s = n;
    }
    CHECK(left);
    CHECK(right);
  }
  SUBCASE("curved turns keep moving") {
    cfg.curved_turn = true;
    auto [next, cmd] = random_walk_step({WalkState::Mode::kDrive, 0.05}, 0.1, rng, cfg);
    CHECK(cmd.linear == doctest::Approx(cfg.linear));
  }
}

TEST_CASE("distinct robots get distinct random streams") {
  Rng a = make_rng(7, 0);
  Rng b = make_rng(7, 1);
  Rng c = make_rng(8, 0);
  const auto x = a();
  CHECK(x != b());
  CHECK(x != c());
}

TEST_CASE("flocking rules") {
  FlockingConfig cfg;
  cfg.limits = kLimits;
  SUBCASE("isolated robot drives straight") {
    CHECK(flocking_step(ScanSnapshot::empty(360, 0.12, 3.5), cfg) == DriveCommand{0.15, 0.0});
  }
  SUBCASE("close neighbor on the left: turn right") {
    const auto d = classify_flocking(scan_with({{pi / 2, 0.3}}), cfg);
    CHECK(d.rule == FlockingRule::kRepel);
    CHECK(d.turn == -1);
    CHECK(flocking_step(scan_with({{pi / 2, 0.3}}), cfg) == DriveCommand{0.05, -1.0});
  }
  SUBCASE("close neighbor on the right: turn left") {
    CHECK(classify_flocking(scan_with({{-pi / 2, 0.3}}), cfg).turn == 1);
  }
  SUBCASE("mid-range neighbor on the left: turn toward it") {
    const auto d = classify_flocking(scan_with({{pi / 2, 0.9}}), cfg);
    CHECK(d.rule == FlockingRule::kCohere);
    CHECK(d.turn == 1);
  }
  SUBCASE("mid-range neighbors on both sides: straight") {
    const auto d = classify_flocking(scan_with({{pi / 2, 0.9}, {-pi / 2, 1.0}}), cfg);
    CHECK(d.rule == FlockingRule::kStraight);
  }
  SUBCASE("repulsion outranks cohesion") {
    const auto d = classify_flocking(scan_with({{pi / 2, 0.9}, {0.1, 0.2}}), cfg);
    CHECK(d.rule == FlockingRule::kRepel);
  }
  SUBCASE("exactly one rule fires on random scans") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> r(0.0, 4.0);
    for (int t = 0; t < 300; ++t) {
      auto s = ScanSnapshot::empty(72, 0.12, 3.5);
      for (auto& v : s.ranges) v = r(rng);
      const auto d = classify_flocking(s, cfg);
      const auto n = core::nearest_obstacle(s);
      if (n && n->distance < cfg.near) {
        CHECK(d.rule == FlockingRule::kRepel);
      } else {
        CHECK(d.rule != FlockingRule::kRepel);
      }
      CHECK((d.rule == FlockingRule::kStraight) == (d.turn == 0));
    }
  }
  SUBCASE("config validation") {
    CHECK_NOTHROW(cfg.validate(0.12, 3.5));
    FlockingConfig bad = cfg;
    bad.front_half_width = 1.0;
    CHECK_THROWS_AS(bad.validate(0.12, 3.5), std::invalid_argument);
    bad = cfg;
    bad.far = 0.4;
    CHECK_THROWS_AS(bad.validate(0.12, 3.5), std::invalid_argument);
  }
}

TEST_CASE("pattern objects") {
  const auto s = scan_with({{0.0, 1.0}});
  AttractionPattern a({2.0, kLimits});
  CHECK(a.drives());
  CHECK(a.name() == "attraction");
  CHECK(a.tick(input_for(s)).command == attraction_step(s, {2.0, kLimits}));
  CHECK_FALSE(a.opinion().has_value());

  DispersionPattern d({1.0, kLimits});
  d.set_range(1.4);
  CHECK(d.config().dispersion_range == 1.4);

  RandomWalkPattern w(WalkConfig{}, make_rng(1, 1));
  for (int k = 0; k < 100; ++k) CHECK(w.tick(input_for(s)).command.has_value());
}
