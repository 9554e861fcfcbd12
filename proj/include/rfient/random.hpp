// Copyright 2026 The rfient Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>

namespace rfient {

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);

// Independent, reproducible stream `stream` derived from `seed`. Parallel
// drivers give work item k the stream make_stream(seed, k) so results do not
// depend on thread count or scheduling.
Rng make_stream(std::uint64_t seed, std::uint64_t stream);

}  // namespace rfient
