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

#include <cstdint>
#include <vector>

#include "graphsac/graph.hpp"
#include "graphsac/labels.hpp"

namespace graphsac {

struct SbmParams {
  std::vector<Index> sizes;
  double p_in = 0.05;
  double p_out = 0.002;
  /// Class of each community; empty means community b gets class b.
  std::vector<int> community_labels;

  /// `count` communities of `size` nodes each.
  static SbmParams uniform(int count, Index size, double p_in, double p_out) {
    return {std::vector<Index>(static_cast<std::size_t>(count), size), p_in,
            p_out, {}};
  }
};

struct SbmGraph {
  Graph graph;
  LabelMatrix labels;
  /// Community of every node; communities occupy contiguous id ranges.
  std::vector<int> community;
};

/// Undirected stochastic block model: each pair inside a community is an edge
/// with probability p_in, each pair across communities with p_out. Pairs are
/// visited with geometric skips, so the cost is O(N + E) per block row.
/// Deterministic per seed.
SbmGraph generate_sbm(const SbmParams& params, std::uint64_t seed);

}  // namespace graphsac
