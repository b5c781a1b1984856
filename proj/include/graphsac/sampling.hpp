// Copyright 2026 The graphsac Authors.
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

#include <vector>

#include "graphsac/graph.hpp"
#include "graphsac/rng.hpp"

namespace graphsac {

/// Sorted, duplicate-free node indices.
using SeedSet = std::vector<Index>;

/// Uniformly random size-`sample_size` subset of {0, ..., num_nodes - 1}.
/// Every one of the C(N, S) subsets is equally likely (Floyd's algorithm).
SeedSet draw_sample(Rng& rng, Index num_nodes, Index sample_size);

/// Throws unless `seeds` is sorted, duplicate-free and inside [0, num_nodes).
void validate_seed_set(const SeedSet& seeds, Index num_nodes);

}  // namespace graphsac
