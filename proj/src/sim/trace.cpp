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

#include "swarm/sim/trace.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <limits>
#include <istream>
#include <ostream>
#include <sstream>

namespace swarm::sim {

namespace {

constexpr std::string_view kMagic = "# swarmkit-trace 1";
constexpr std::string_view kColumns =
    "tick,time,robot,x,y,theta,cmd_linear,cmd_angular,out_linear,out_angular,"
    "suppressed,opinion";

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream ss(line);
  while (std::getline(ss, cur, sep)) out.push_back(cur);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

double parse_double(const std::string& s) {
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw TraceFormatError("bad number '" + s + "'");
  }
  return v;
}

template <typename Int>
Int parse_int(const std::string& s) {
  Int v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw TraceFormatError("bad integer '" + s + "'");
  }
  return v;
}

}  // namespace

std::string format_double(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

void write_trace(std::ostream& out, const Trace& trace) {
  const auto& h = trace.header;
  out << kMagic << '\n';
  out << "# scenario " << h.scenario << '\n';
  out << "# seed " << h.seed << '\n';
  out << "# dt " << format_double(h.dt) << '\n';
  if (h.vote_window) out << "# vote_window " << format_double(*h.vote_window) << '\n';
  for (const auto& r : h.robots) {
    out << "# robot " << r.id << ' ' << r.platform << ' ' << format_double(r.radius) << '\n';
  }
  for (const auto& w : h.walls) {
    out << "# wall " << format_double(w.a.x) << ' ' << format_double(w.a.y) << ' '
        << format_double(w.b.x) << ' ' << format_double(w.b.y) << '\n';
  }
  for (const auto& line : h.config) out << "#| " << line << '\n';
  out << kColumns << '\n';
  for (const auto& r : trace.rows) {
    out << r.tick << ',' << format_double(r.time) << ',' << r.robot << ','
        << format_double(r.pose.x) << ',' << format_double(r.pose.y) << ','
        << format_double(r.pose.theta) << ',' << format_double(r.commanded.linear) << ','
        << format_double(r.commanded.angular) << ',' << format_double(r.emitted.linear)
        << ',' << format_double(r.emitted.angular) << ',' << (r.suppressed ? 1 : 0) << ',';
    if (r.opinion) out << *r.opinion;
    out << '\n';
  }
}

Trace read_trace(std::istream& in) {
  Trace trace;
  auto& h = trace.header;
  std::string line;
  if (!std::getline(in, line) || line != kMagic) {
    throw TraceFormatError("not a swarmkit trace");
  }
  bool columns_seen = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (!columns_seen) {
      if (line.rfind("#| ", 0) == 0) {
        h.config.push_back(line.substr(3));
        continue;
      }
      if (line == "#|") {
        h.config.emplace_back();
        continue;
      }
      if (line.rfind("# ", 0) == 0) {
        std::istringstream ss(line.substr(2));
        std::string key;
        ss >> key;
        if (key == "scenario") {
          std::getline(ss >> std::ws, h.scenario);
        } else if (key == "seed") {
          std::string v;
          ss >> v;
          h.seed = parse_int<std::uint64_t>(v);
        } else if (key == "dt") {
          std::string v;
          ss >> v;
          h.dt = parse_double(v);
        } else if (key == "vote_window") {
          std::string v;
          ss >> v;
          h.vote_window = parse_double(v);
        } else if (key == "robot") {
          std::string id, platform, radius;
          ss >> id >> platform >> radius;
          h.robots.push_back({parse_int<bus::RobotId>(id), platform, parse_double(radius)});
        } else if (key == "wall") {
          std::array<std::string, 4> v;
          ss >> v[0] >> v[1] >> v[2] >> v[3];
          h.walls.push_back({{parse_double(v[0]), parse_double(v[1])},
                             {parse_double(v[2]), parse_double(v[3])}});
        }
        continue;
      }
      if (line != kColumns) throw TraceFormatError("unexpected column header: " + line);
      columns_seen = true;
      continue;
    }
    const auto f = split(line, ',');
    if (f.size() != 12) throw TraceFormatError("row has wrong field count: " + line);
    TraceRow r;
    r.tick = parse_int<std::int64_t>(f[0]);
    r.time = parse_double(f[1]);
    r.robot = parse_int<bus::RobotId>(f[2]);
    r.pose = {parse_double(f[3]), parse_double(f[4]), parse_double(f[5])};
    r.commanded = {parse_double(f[6]), parse_double(f[7])};
    r.emitted = {parse_double(f[8]), parse_double(f[9])};
    r.suppressed = f[10] == "1";
    if (!f[11].empty()) r.opinion = parse_int<int>(f[11]);
    trace.rows.push_back(r);
  }
  if (!columns_seen) throw TraceFormatError("trace has no column header");
  return trace;
}

void write_trace_file(const std::string& path, const Trace& trace) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_trace(out, trace);
  if (!out) throw std::runtime_error("failed writing " + path);
}

Trace read_trace_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_trace(in);
}

}  // namespace swarm::sim
