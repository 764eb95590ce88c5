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
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "swarm/bus/bus.hpp"
#include "swarm/core/types.hpp"
#include "swarm/sim/world.hpp"

namespace swarm::sim {

/// State of one robot at the start of one tick plus what it was told to do.
struct TraceRow {
  std::int64_t tick = 0;
  double time = 0.0;
  bus::RobotId robot = 0;
  core::Pose2D pose;
  core::DriveCommand commanded;  // pattern output
  core::DriveCommand emitted;    // what reached the motors
  bool suppressed = false;
  std::optional<int> opinion;

  bool operator==(const TraceRow&) const = default;
};

struct TraceRobot {
  bus::RobotId id = 0;
  std::string platform;
  double radius = 0.0;
  bool operator==(const TraceRobot&) const = default;
};

struct TraceHeader {
  std::string scenario;
  std::uint64_t seed = 0;
  double dt = 0.1;
  std::optional<double> vote_window;
  std::vector<TraceRobot> robots;
  std::vector<Segment> walls;
  std::vector<std::string> config;  // verbatim scenario text for replay

  bool operator==(const TraceHeader&) const = default;
};

struct Trace {
  TraceHeader header;
  std::vector<TraceRow> rows;
};

class TraceFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// CSV with a '#'-prefixed self-describing preamble. Doubles use the shortest
/// round-trip representation, so write -> read -> write is byte-identical.
void write_trace(std::ostream& out, const Trace& trace);
Trace read_trace(std::istream& in);

void write_trace_file(const std::string& path, const Trace& trace);
Trace read_trace_file(const std::string& path);

/// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

}  // namespace swarm::sim
