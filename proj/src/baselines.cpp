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

#include "graphsac/baselines.hpp"

#include <algorithm>

#include "graphsac/parallel.hpp"

namespace graphsac {

Egonet egonet_stats(const Graph& graph, Index n) {
  if (n < 0 || n >= graph.num_nodes()) {
    throw BoundsError("node " + std::to_string(n) + " outside graph");
  }
  Egonet ego;
  ego.center = n;
  ego.members.push_back(n);
  for (Index u : graph.neighbors(n)) {
    if (u != n) ego.members.push_back(u);
  }
  std::sort(ego.members.begin(), ego.members.end());

  auto inside = [&](Index v) {
    return std::binary_search(ego.members.begin(), ego.members.end(), v);
  };
  Index internal_endpoints = 0;
  for (Index m : ego.members) {
    Index in = 0;
    Index out = 0;
    for (Index u : graph.neighbors(m)) {
      if (u == m) {
        ++ego.internal_edges;  // self-loop, stored once
      } else if (inside(u)) {
        ++in;
      } else {
        ++out;
      }
    }
    internal_endpoints += in;
    ego.boundary_edges += out;
    if (in < out) ++ego.leaky_members;
  }
  ego.internal_edges += internal_endpoints / 2;
  return ego;
}

std::string_view to_string(BaselineMetric metric) {
  switch (metric) {
    case BaselineMetric::AverageDegree: return "avgdegree";
    case BaselineMetric::CutRatio: return "cutratio";
    case BaselineMetric::Flake: return "flake";
    case BaselineMetric::Conductance: return "conductance";
  }
  return "unknown";
}

std::optional<BaselineMetric> parse_baseline_metric(std::string_view name) {
  for (auto m : {BaselineMetric::AverageDegree, BaselineMetric::CutRatio,
                 BaselineMetric::Flake, BaselineMetric::Conductance}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

double egonet_quality(const Egonet& ego, Index num_nodes,
                      BaselineMetric metric) {
  const auto size = static_cast<double>(ego.members.size());
  const auto e_in = static_cast<double>(ego.internal_edges);
  const auto e_out = static_cast<double>(ego.boundary_edges);
  auto ratio = [](double num, double den) { return den > 0.0 ? num / den : 0.0; };
  switch (metric) {
    case BaselineMetric::AverageDegree:
      return ratio(2.0 * e_in, size);
    case BaselineMetric::CutRatio:
      return ratio(e_out, size * (static_cast<double>(num_nodes) - size));
    case BaselineMetric::Flake:
      return ratio(static_cast<double>(ego.leaky_members), size);
    case BaselineMetric::Conductance:
      return ratio(e_out, 2.0 * e_in + e_out);
  }
  return 0.0;
}

ScoreVector baseline_scores(const Graph& graph, BaselineMetric metric,
                            bool invert, unsigned threads) {
  ScoreVector out;
  out.scores.resize(graph.num_nodes());
  const double sign =
      (metric == BaselineMetric::AverageDegree ? -1.0 : 1.0) * (invert ? -1.0 : 1.0);
  parallel_for(graph.num_nodes(), threads, [&](std::int64_t n) {
    const double q = egonet_quality(egonet_stats(graph, n), graph.num_nodes(), metric);
    out.scores[n] = q == 0.0 ? 0.0 : sign * q;
  });
  return out;
}

}  // namespace graphsac
