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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphsac/consensus.hpp"
#include "graphsac/graph.hpp"

namespace graphsac {

/// Node n, its neighbors, and the edges among them. Counts ignore weights;
/// a self-loop is an internal edge.
struct Egonet {
  Index center = 0;
  std::vector<Index> members;
  Index internal_edges = 0;
  Index boundary_edges = 0;
  /// Members with fewer neighbors inside the egonet than outside it.
  Index leaky_members = 0;
};

Egonet egonet_stats(const Graph& graph, Index n);

enum class BaselineMetric { AverageDegree, CutRatio, Flake, Conductance };

std::string_view to_string(BaselineMetric metric);
std::optional<BaselineMetric> parse_baseline_metric(std::string_view name);

/// Community quality of one egonet:
///   AverageDegree  2 e_in / |ego|
///   CutRatio       e_out / (|ego| (N - |ego|))
///   Flake          leaky members / |ego|
///   Conductance    e_out / (2 e_in + e_out)
/// A zero denominator yields 0.
double egonet_quality(const Egonet& ego, Index num_nodes, BaselineMetric metric);

/// Anomaly scores from egonet quality, oriented so that higher means more
/// anomalous: -q for AverageDegree (sparse egonets), q for the others (leaky
/// egonets). `invert` flips the orientation.
ScoreVector baseline_scores(const Graph& graph, BaselineMetric metric,
                            bool invert = false, unsigned threads = 1);

}  // namespace graphsac
