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

#include "graphsac/sampling.hpp"

#include <algorithm>
#include <string>

namespace graphsac {

SeedSet draw_sample(Rng& rng, Index num_nodes, Index sample_size) {
  if (sample_size < 0 || sample_size > num_nodes) {
    throw PreconditionError("sample size " + std::to_string(sample_size) +
                            " outside [0, " + std::to_string(num_nodes) + "]");
  }
  std::vector<bool> taken(static_cast<std::size_t>(num_nodes), false);
  SeedSet out;
  out.reserve(static_cast<std::size_t>(sample_size));
  for (Index j = num_nodes - sample_size; j < num_nodes; ++j) {
    const auto t = static_cast<Index>(
        rng.uniform_index(static_cast<std::uint64_t>(j) + 1));
    const Index pick = taken[t] ? j : t;
    taken[pick] = true;
    out.push_back(pick);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void validate_seed_set(const SeedSet& seeds, Index num_nodes) {
  for (std::size_t k = 0; k < seeds.size(); ++k) {
    if (seeds[k] < 0 || seeds[k] >= num_nodes) {
      throw BoundsError("seed " + std::to_string(seeds[k]) + " outside [0, " +
                        std::to_string(num_nodes) + ")");
    }
    if (k > 0 && seeds[k] <= seeds[k - 1]) {
      throw PreconditionError("seed set must be sorted and duplicate-free");
    }
  }
}

}  // namespace graphsac
