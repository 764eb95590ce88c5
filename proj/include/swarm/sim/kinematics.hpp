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

#include "swarm/core/types.hpp"

namespace swarm::sim {

/// Exact unicycle integration over one step: a straight segment when the yaw
/// rate is negligible, otherwise a circular arc.
core::Pose2D integrate_pose(const core::Pose2D& pose, const core::DriveCommand& cmd,
                            double dt);

}  // namespace swarm::sim
