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

#include "swarm/harness/platform.hpp"

#include "swarm/harness/errors.hpp"

namespace swarm::harness {

sim::PlatformSpec platform_preset(std::string_view name) {
  sim::PlatformSpec spec;
  spec.name = std::string(name);
  if (name == "burger") {
    spec.lidar = {360, 0.12, 3.5};
    spec.radius = 0.15;
    spec.max_linear = 0.22;
    spec.max_angular = 2.84;
    spec.protection_threshold = 0.5;
  } else if (name == "waffle_pi") {
    spec.lidar = {360, 0.12, 3.5};
    spec.radius = 0.15;
    spec.max_linear = 0.26;
    spec.max_angular = 1.82;
    spec.protection_threshold = 0.5;
  } else if (name == "jackal") {
    // 16-layer sensor collapsed to one planar ring.
    spec.lidar = {360, 0.8, 5.0};
    spec.radius = 0.3;
    spec.max_linear = 2.0;
    spec.max_angular = 4.0;
    spec.protection_threshold = 1.2;
  } else {
    throw ConfigError(ConfigError::Kind::kUnknownPlatform,
                      "unknown platform '" + std::string(name) + "'");
  }
  return spec;
}

std::vector<std::string> platform_names() { return {"burger", "waffle_pi", "jackal"}; }

PatternDefaults pattern_defaults(const sim::PlatformSpec& platform) {
  const bool large = platform.name == "jackal";
  PatternDefaults d;
  d.limits = large ? core::DriveLimits{0.5, 1.5, 1.0} : core::DriveLimits{0.2, 1.8, 1.0};

  d.attraction = {large ? 3.0 : 2.0, d.limits};
  d.dispersion = {large ? 2.0 : 1.0, d.limits};
  d.drive = {large ? 0.4 : 0.15, d.limits};

  d.random_walk.linear = large ? 0.4 : 0.15;
  d.random_walk.angular = 1.0;
  d.random_walk.limits = d.limits;

  d.flocking.near = large ? 1.3 : 0.5;
  d.flocking.far = large ? 2.5 : 1.2;
  d.flocking.linear = large ? 0.4 : 0.15;
  d.flocking.linear_turning = large ? 0.1 : 0.05;
  d.flocking.angular = 0.8;
  d.flocking.limits = d.limits;

  d.discussed_dispersion.dispersion = d.dispersion;
  return d;
}

}  // namespace swarm::harness
