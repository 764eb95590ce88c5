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

#include "swarm/sim/simulator.hpp"

#include <deque>
#include <stdexcept>
#include <variant>

#include "swarm/sim/kinematics.hpp"
#include "swarm/sim/raycast.hpp"

namespace swarm::sim {

namespace {
constexpr int kContactBisections = 60;
}  // namespace

struct Simulator::Node {
  std::unique_ptr<patterns::Pattern> pattern;
  protection::ProtectionLayer protection;
  PlatformSpec platform;
  bus::SubscriptionHandle pattern_scan;
  bus::SubscriptionHandle pattern_votes;
  bus::SubscriptionHandle protection_scan;
  bus::SubscriptionHandle protection_cmd;
  bus::SubscriptionHandle motor_cmd;
  core::ScanSnapshot latest_scan;
  core::DriveCommand commanded;
  core::DriveCommand emitted;
  bool suppressed = false;
  std::deque<bool> suppression_in_flight;  // one flag per undelivered cmd_vel
};

Simulator::Simulator(std::vector<Segment> walls, SimulatorOptions options)
    : options_(std::move(options)) {
  if (!(options_.dt > 0.0)) throw std::invalid_argument("dt must be positive");
  world_.walls = std::move(walls);
  world_.rng_seed = options_.seed;
}

Simulator::~Simulator() = default;
Simulator::Simulator(Simulator&&) noexcept = default;
Simulator& Simulator::operator=(Simulator&&) noexcept = default;

bus::RobotId Simulator::add_robot(RobotSetup setup) {
  setup.platform.validate();
  if (!setup.pattern) throw std::invalid_argument("robot needs a pattern");
  const auto id = static_cast<bus::RobotId>(world_.robots.size());
  RobotBody body{id, setup.pose, setup.platform.name, setup.platform.radius};
  body.pose.theta = core::normalize_angle(body.pose.theta);
  if (wall_clearance(body, world_.walls) <= 0.0) {
    throw std::invalid_argument("robot " + std::to_string(id) + " overlaps a wall");
  }
  world_.robots.push_back(body);
  lidars_.push_back(setup.platform.lidar);

  using bus::TopicName;
  Node node{std::move(setup.pattern),
            protection::ProtectionLayer(setup.protection, setup.platform.lidar.range_min),
            setup.platform,
            bus_.subscribe(TopicName::robot(id, "scan"), id, "pattern"),
            bus_.subscribe(TopicName::global(options_.vote_topic), id, "pattern"),
            bus_.subscribe(TopicName::robot(id, "scan"), id, "protection"),
            bus_.subscribe(TopicName::robot(id, "pattern_cmd"), id, "protection"),
            bus_.subscribe(TopicName::robot(id, "cmd_vel"), id, "motors"),
            core::ScanSnapshot::empty(setup.platform.lidar.beam_count,
                                      setup.platform.lidar.range_min,
                                      setup.platform.lidar.range_max),
            {},
            {},
            false,
            {}};
  nodes_.push_back(std::move(node));
  return id;
}

void Simulator::move_robot(std::size_t i, const core::DriveCommand& cmd) {
  RobotBody& body = world_.robots[i];
  const core::Pose2D start = body.pose;
  const core::Pose2D full = integrate_pose(start, cmd, options_.dt);
  RobotBody probe = body;
  probe.pose = full;
  if (wall_clearance(probe, world_.walls) >= 0.0) {
    body.pose = full;
    return;
  }
  // Truncate the translation at first contact; the heading change is kept.
  double lo = 0.0;
  double hi = 1.0;
  for (int k = 0; k < kContactBisections; ++k) {
    const double mid = 0.5 * (lo + hi);
    probe.pose = integrate_pose(start, cmd, mid * options_.dt);
    (wall_clearance(probe, world_.walls) >= 0.0 ? lo : hi) = mid;
  }
  const core::Pose2D contact = integrate_pose(start, cmd, lo * options_.dt);
  body.pose = {contact.x, contact.y, full.theta};
}

std::vector<TraceRow> Simulator::step() {
  using bus::Envelope;
  using bus::TopicName;
  const double now = static_cast<double>(world_.tick) * options_.dt;
  world_.clock = now;
  const std::size_t n = nodes_.size();

  // (1) sense
  const auto scans = options_.parallel_raycast ? raycast_all_parallel(world_, lidars_, now)
                                               : raycast_all_serial(world_, lidars_, now);
  for (std::size_t i = 0; i < n; ++i) {
    const auto id = static_cast<bus::RobotId>(i);
    bus_.publish(Envelope{TopicName::robot(id, "scan"), scans[i], id, now});
  }

  // (2) patterns
  for (std::size_t i = 0; i < n; ++i) {
    Node& node = nodes_[i];
    const auto id = static_cast<bus::RobotId>(i);
    for (auto& env : bus_.drain(node.pattern_scan)) {
      node.latest_scan = std::get<core::ScanSnapshot>(std::move(env.payload));
    }
    std::vector<patterns::StampedOpinion> opinions;
    for (const auto& env : bus_.drain(node.pattern_votes)) {
      opinions.push_back({std::get<bus::OpinionMessage>(env.payload), env.stamp});
    }
    patterns::TickOutput out = node.pattern->tick(
        patterns::TickInput{now, options_.dt, &node.latest_scan, opinions});
    node.commanded = out.command.value_or(core::DriveCommand{});
    bus_.publish(Envelope{TopicName::robot(id, "pattern_cmd"), node.commanded, id, now});
    for (const auto& msg : out.opinions) {
      bus_.publish(Envelope{TopicName::global(options_.vote_topic), msg, id, now});
    }
  }

  // (3) hardware protection
  for (std::size_t i = 0; i < n; ++i) {
    Node& node = nodes_[i];
    const auto id = static_cast<bus::RobotId>(i);
    for (const auto& env : bus_.drain(node.protection_cmd)) {
      node.protection.on_pattern_command(std::get<core::DriveCommand>(env.payload), env.stamp);
    }
    for (const auto& env : bus_.drain(node.protection_scan)) {
      const auto& scan = std::get<core::ScanSnapshot>(env.payload);
      const auto decision = node.protection.arbitrate(scan, now);
      bus_.publish(Envelope{TopicName::robot(id, "cmd_vel"), decision.command, id, now});
      node.suppression_in_flight.push_back(decision.suppressed);
    }
  }

  // Rows carry the pose at the start of the tick.
  std::vector<TraceRow> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    rows.push_back({world_.tick, now, static_cast<bus::RobotId>(i), world_.robots[i].pose,
                    nodes_[i].commanded, {}, false, nodes_[i].pattern->opinion()});
  }

  // (4) motion
  for (std::size_t i = 0; i < n; ++i) {
    Node& node = nodes_[i];
    for (const auto& env : bus_.drain(node.motor_cmd)) {
      node.emitted = std::get<core::DriveCommand>(env.payload);
      node.suppressed = node.suppression_in_flight.front();
      node.suppression_in_flight.pop_front();
    }
    move_robot(i, node.emitted);
  }

  // (5) deliver everything published this tick, (6) record
  bus_.flush();
  for (std::size_t i = 0; i < n; ++i) {
    rows[i].emitted = nodes_[i].emitted;
    rows[i].suppressed = nodes_[i].suppressed;
  }
  ++world_.tick;
  world_.clock = static_cast<double>(world_.tick) * options_.dt;
  return rows;
}

}  // namespace swarm::sim
