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

#include <string>
#include <string_view>
#include <vector>

#include "swarm/patterns/combined.hpp"
#include "swarm/patterns/movement.hpp"
#include "swarm/sim/world.hpp"

namespace swarm::harness {

/// Built-in robot models: "burger", "waffle_pi", "jackal".
sim::PlatformSpec platform_preset(std::string_view name);
std::vector<std::string> platform_names();

/// Per-platform parameter set for every pattern, the in-code counterpart of a
/// per-robot parameter file.
struct PatternDefaults {
  core::DriveLimits limits;
  patterns::AttractionConfig attraction;
  patterns::DispersionConfig dispersion;
  patterns::DriveConfig drive;
  patterns::WalkConfig random_walk;
  patterns::FlockingConfig flocking;
  patterns::DiscussedDispersionConfig discussed_dispersion;
};

PatternDefaults pattern_defaults(const sim::PlatformSpec& platform);

}  // namespace swarm::harness
