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

#include "swarm/patterns/combined.hpp"

using namespace swarm;
using namespace swarm::patterns;
using core::DriveCommand;
using core::ScanSnapshot;

namespace {

constexpr core::DriveLimits kLimits{0.2, 1.8, 1.0};

ScanSnapshot one_hit(double bearing, double range) {
  auto s = ScanSnapshot::empty(360, 0.12, 3.5);
  s.ranges[s.beam_at(bearing)] = range;
  return s;
}

DiscussedDispersionState fresh_state() {
  DiscussedDispersionState st;
  st.dispersion = {1.0, kLimits};
  st.mapping = {{0, 0.6}, {1, 1.0}, {2, 1.4}};
  return st;
}

std::unique_ptr<Pattern> voter(bus::RobotId id, int opinion) {
  return std::make_unique<VotingPattern>(id, opinion, VotingConfig{}, make_rng(1, id));
}

}  // namespace

TEST_CASE("discuss phase holds still whatever the scan") {
  auto st = fresh_state();
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> r(0.0, 4.0);
  for (int t = 0; t < 200; ++t) {
    auto s = ScanSnapshot::empty(360, 0.12, 3.5);
    for (auto& v : s.ranges) v = r(rng);
    const double now = 0.1 * (t % 199);
    CHECK(discussed_dispersion_step(st, t % 3, s, now) == DriveCommand{});
  }
  CHECK(st.phase == DiscussedDispersionState::Phase::kDiscussOnly);
}

TEST_CASE("discussed dispersion examples") {
  auto st = fresh_state();
  CHECK(discussed_dispersion_step(st, 1, one_hit(0.0, 0.8), 5.0) == DriveCommand{});

  const auto cmd = discussed_dispersion_step(st, 1, one_hit(0.0, 0.8), 25.0);
  CHECK(st.phase == DiscussedDispersionState::Phase::kDisperseAndDiscuss);
  CHECK_FALSE(cmd == DriveCommand{});
  CHECK(cmd == dispersion_step(one_hit(0.0, 0.8), {1.0, kLimits}));

  // Same obstacle, opinion 0 maps to 0.6 m: out of range, so stand still.
  CHECK(discussed_dispersion_step(st, 0, one_hit(0.0, 0.8), 25.1) == DriveCommand{});
  CHECK(st.dispersion.dispersion_range == 0.6);
}

TEST_CASE("phase switches exactly once at the decision time") {
  auto st = fresh_state();
  discussed_dispersion_step(st, 0, one_hit(0.0, 0.3), 19.9);
  CHECK(st.phase == DiscussedDispersionState::Phase::kDiscussOnly);
  // 200 ticks of 0.1 s accumulate to slightly less than 20.
  double now = 0.0;
  for (int k = 0; k < 200; ++k) now += 0.1;
  discussed_dispersion_step(st, 0, one_hit(0.0, 0.3), now);
  CHECK(st.phase == DiscussedDispersionState::Phase::kDisperseAndDiscuss);
  discussed_dispersion_step(st, 0, one_hit(0.0, 0.3), 5.0);
  CHECK(st.phase == DiscussedDispersionState::Phase::kDisperseAndDiscuss);
}

TEST_CASE("dispersion range follows the opinion within the tick") {
  auto st = fresh_state();
  for (int op : {2, 0, 1, 1, 2}) {
    discussed_dispersion_step(st, op, one_hit(1.0, 2.0), 30.0);
    CHECK(st.dispersion.dispersion_range == st.mapping.at(op));
  }
  CHECK_THROWS_AS(discussed_dispersion_step(st, 7, one_hit(1.0, 2.0), 30.0), std::out_of_range);
}

TEST_CASE("compose_parallel") {
  const auto scan = one_hit(0.0, 1.0);
  const TickInput in{0.0, 0.1, &scan, {}};

  SUBCASE("voting only emits no command") {
    std::vector<std::unique_ptr<Pattern>> m;
    m.push_back(voter(0, 1));
    auto p = compose_parallel(std::move(m));
    const auto out = p->tick(in);
    CHECK_FALSE(out.command.has_value());
    CHECK(out.opinions.size() == 1);
    CHECK(p->opinion() == 1);
  }
  SUBCASE("a single drive member is forwarded unchanged") {
    std::vector<std::unique_ptr<Pattern>> m;
    m.push_back(std::make_unique<DrivePattern>(DriveConfig{0.15, kLimits}));
    auto p = compose_parallel(std::move(m));
    DrivePattern alone({0.15, kLimits});
    CHECK(p->tick(in).command == alone.tick(in).command);
  }
  SUBCASE("two drivers without a rule are rejected") {
    std::vector<std::unique_ptr<Pattern>> m;
    m.push_back(std::make_unique<DrivePattern>(DriveConfig{0.15, kLimits}));
    m.push_back(std::make_unique<DispersionPattern>(DispersionConfig{1.0, kLimits}));
    CHECK_THROWS_AS(compose_parallel(std::move(m)), std::invalid_argument);
  }
  SUBCASE("majority plus dispersion under a phase arbiter") {
    std::vector<std::unique_ptr<Pattern>> m;
    m.push_back(voter(0, 2));
    m.push_back(std::make_unique<DispersionPattern>(DispersionConfig{1.4, kLimits}));
    auto p = compose_parallel(std::move(m), phase_arbiter(20.0, 1));
    CHECK(p->tick(in).command == DriveCommand{});
    const TickInput later{21.0, 0.1, &scan, {}};
    CHECK(p->tick(later).command == dispersion_step(scan, {1.4, kLimits}));
  }
}

TEST_CASE("timeout wrapper stops the inner pattern") {
  TimeoutPattern p(std::make_unique<DrivePattern>(DriveConfig{0.15, kLimits}), 2.0);
  const auto scan = ScanSnapshot::empty(8, 0.1, 1.0);
  CHECK(p.tick({10.0, 0.1, &scan, {}}).command == DriveCommand{0.15, 0.0});
  CHECK(p.tick({11.9, 0.1, &scan, {}}).command == DriveCommand{0.15, 0.0});
  CHECK_FALSE(p.expired());
  CHECK(p.tick({12.0, 0.1, &scan, {}}).command == DriveCommand{});
  CHECK(p.expired());
  CHECK(p.tick({13.0, 0.1, &scan, {}}).command == DriveCommand{});
}

TEST_CASE("discussed dispersion pattern") {
  DiscussedDispersionConfig cfg;
  cfg.dispersion = {1.0, kLimits};
  cfg.voting.rule = DecisionRule::kVoter;  // ignored: the combination is majority-based
  DiscussedDispersionPattern p(0, 2, cfg, make_rng(3, 0));
  CHECK(p.drives());
  CHECK(p.opinion() == 2);

  const auto scan = one_hit(0.0, 0.5);
  auto out = p.tick({0.0, 0.1, &scan, {}});
  CHECK(out.command == DriveCommand{});
  REQUIRE(out.opinions.size() == 1);

  // Unanimous opinion 1 from the rest of the swarm arrives during window 0.
  std::vector<StampedOpinion> inbox;
  for (int id = 1; id < 7; ++id) inbox.push_back({{id, 1}, 0.0});
  p.tick({0.1, 0.1, &scan, inbox});
  out = p.tick({1.0, 0.1, &scan, {}});
  CHECK(p.opinion() == 1);
  CHECK(p.state().dispersion.dispersion_range == 1.0);

  out = p.tick({20.0, 0.1, &scan, {}});
  CHECK(out.command == dispersion_step(scan, {1.0, kLimits}));

  CHECK_THROWS_AS(DiscussedDispersionPattern(0, 5, cfg, make_rng(3, 0)), std::invalid_argument);
}
