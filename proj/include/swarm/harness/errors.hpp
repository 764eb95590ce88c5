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

#include <stdexcept>
#include <string>

namespace swarm::harness {

/// Load-time configuration failure. `kind` says which rule was broken.
class ConfigError : public std::runtime_error {
 public:
  enum class Kind {
    kParse,
    kUnknownPlatform,
    kUnknownPattern,
    kUnknownPreset,
    kMappingBelowThreshold,
    kPoseOutsideArena,
    kInvalidParameter,
  };

  ConfigError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

}  // namespace swarm::harness
