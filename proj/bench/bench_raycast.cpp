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


// Serial vs OpenMP ray casting for swarms of increasing size.

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "swarm/sim/raycast.hpp"
#include "swarm/sim/world.hpp"

namespace {

using swarm::sim::LidarSpec;
using swarm::sim::WorldState;

WorldState random_swarm(std::size_t n) {
  const double side = 4.0 * std::sqrt(static_cast<double>(n));
  WorldState w;
  w.walls = swarm::sim::rectangular_arena(side, side);
  std::mt19937_64 rng(n);
  std::uniform_real_distribution<double> pos(-side / 2 + 0.5, side / 2 - 0.5);
  std::uniform_real_distribution<double> ang(-3.14159, 3.14159);
  while (w.robots.size() < n) {
    const swarm::core::Pose2D p{pos(rng), pos(rng), ang(rng)};
    bool free = true;
    for (const auto& r : w.robots) {
      free = free && std::hypot(p.x - r.pose.x, p.y - r.pose.y) > 0.4;
    }
    if (free) {
      w.robots.push_back({static_cast<swarm::bus::RobotId>(w.robots.size()), p, "burger", 0.15});
    }
  }
  return w;
}

template <auto Kernel>
void BM_Raycast(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto world = random_swarm(n);
  const std::vector<LidarSpec> lidars(n, LidarSpec{360, 0.12, 3.5});
  for (auto _ : state) {
    auto scans = Kernel(world, lidars, 0.0);
    benchmark::DoNotOptimize(scans.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n) * 360);
}

}  // namespace

BENCHMARK(BM_Raycast<swarm::sim::raycast_all_serial>)
    ->Name("raycast/serial")
    ->RangeMultiplier(4)
    ->Range(4, 256);
BENCHMARK(BM_Raycast<swarm::sim::raycast_all_parallel>)
    ->Name("raycast/parallel")
    ->RangeMultiplier(4)
    ->Range(4, 256);

BENCHMARK_MAIN();
