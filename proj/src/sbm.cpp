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

#include "graphsac/sbm.hpp"

#include <cmath>

#include "graphsac/rng.hpp"

namespace graphsac {
namespace {

// Appends (row, j) for every j in [begin, end) kept with probability p.
void sample_segment(Rng& rng, Index row, Index begin, Index end, double p,
                    std::vector<WeightedEdge>& out) {
  if (p <= 0.0 || begin >= end) return;
  if (p >= 1.0) {
    for (Index j = begin; j < end; ++j) out.push_back({row, j, 1.0});
    return;
  }
  const double log_q = std::log1p(-p);
  Index j = begin - 1;
  while (true) {
    // Gap to the next success of a Bernoulli(p) sequence.
    const double u = 1.0 - rng.uniform01();  // (0, 1]
    const double gap = std::floor(std::log(u) / log_q);
    if (gap >= static_cast<double>(end - j)) break;
    j += 1 + static_cast<Index>(gap);
    if (j >= end) break;
    out.push_back({row, j, 1.0});
  }
}

}  // namespace

SbmGraph generate_sbm(const SbmParams& params, std::uint64_t seed) {
  if (params.sizes.empty()) throw ConfigError("SBM needs at least one community");
  for (Index s : params.sizes) {
    if (s < 1) throw ConfigError("SBM community sizes must be >= 1");
  }
  if (!(params.p_out >= 0.0) || !(params.p_in > params.p_out) ||
      params.p_in > 1.0) {
    throw ConfigError("SBM requires 0 <= p_out < p_in <= 1");
  }
  if (!params.community_labels.empty() &&
      params.community_labels.size() != params.sizes.size()) {
    throw ConfigError("one label per SBM community required");
  }

  std::vector<Index> start{0};
  for (Index s : params.sizes) start.push_back(start.back() + s);
  const Index n = start.back();

  SbmGraph out;
  out.community.resize(static_cast<std::size_t>(n));
  std::vector<int> y(static_cast<std::size_t>(n));
  for (std::size_t b = 0; b < params.sizes.size(); ++b) {
    const int label = params.community_labels.empty()
                          ? static_cast<int>(b)
                          : params.community_labels[b];
    for (Index v = start[b]; v < start[b + 1]; ++v) {
      out.community[v] = static_cast<int>(b);
      y[v] = label;
    }
  }

  Rng rng(seed);
  std::vector<WeightedEdge> edges;
  for (std::size_t b = 0; b < params.sizes.size(); ++b) {
    for (Index i = start[b]; i < start[b + 1]; ++i) {
      sample_segment(rng, i, i + 1, start[b + 1], params.p_in, edges);
      sample_segment(rng, i, start[b + 1], n, params.p_out, edges);
    }
  }
  out.graph = Graph::from_edges(n, edges);
  out.labels = LabelMatrix::from_single(y);
  return out;
}

}  // namespace graphsac
