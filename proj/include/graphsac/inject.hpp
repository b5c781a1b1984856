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

#include <algorithm>
#include <filesystem>
#include <iosfwd>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "graphsac/graph.hpp"
#include "graphsac/labels.hpp"
#include "graphsac/rng.hpp"

namespace graphsac {

struct InjectionMeta {
  std::string kind;
  int walk_length = 0;
  int repeats = 0;
  Index labels_changed = 0;
  Index edges_added = 0;
  Index edges_removed = 0;
  /// The generator ran but altered nothing (e.g. a cluster that already
  /// carried its least common label).
  bool degenerate = false;
  /// Clustered anomalies: the label all members were set to.
  int assigned_label = -1;
  std::string note;
};

/// Copy of the inputs with anomalies planted, plus the anomaly set.
struct InjectionResult {
  Graph graph;
  LabelMatrix labels;
  /// Sorted anomaly node ids; size K.
  std::vector<Index> anomalies;
  InjectionMeta meta;

  std::vector<bool> mask() const;
};

/// Landing node of a `length`-step simple random walk from `start`. Each step
/// moves to a uniformly chosen stored neighbor, ignoring weights; a node
/// without neighbors absorbs the walk. `source.uniform_index(d)` must return
/// a value in [0, d).
template <typename Source>
Index random_walk(const Graph& graph, Index start, int length, Source& source) {
  Index at = start;
  for (int step = 0; step < length; ++step) {
    const auto nb = graph.neighbors(at);
    if (nb.empty()) break;
    at = nb[static_cast<std::size_t>(source.uniform_index(nb.size()))];
  }
  return at;
}

/// New undirected edges (n, landing) from `repeats` independent walks per
/// anomaly. Existing edges, repeats and self-edges are skipped.
template <typename Source>
std::vector<WeightedEdge> walk_edges(const Graph& graph,
                                     const std::vector<Index>& anomalies,
                                     int length, int repeats, Source& source) {
  std::vector<WeightedEdge> added;
  std::set<std::pair<Index, Index>> seen;
  for (Index n : anomalies) {
    for (int r = 0; r < repeats; ++r) {
      const Index m = random_walk(graph, n, length, source);
      if (m == n || graph.has_edge(n, m)) continue;
      if (seen.emplace(std::min(n, m), std::max(n, m)).second) {
        added.push_back({n, m, 1.0});
      }
    }
  }
  return added;
}

/// K uniformly chosen nodes each take the label of the node where a
/// `walk_length`-step random walk from them lands. The anomaly set keeps
/// nodes whose label happens not to change.
InjectionResult inject_rw_label_anomalies(const Graph& graph,
                                          const LabelMatrix& labels, Index k,
                                          int walk_length, Rng& rng);

/// A connected K-node cluster, cut from a label-propagation community by
/// breadth-first growth from its highest internal-degree node, all set to the
/// least common original label within the cluster (ties: smallest id).
/// Single-label input only.
InjectionResult inject_clustered_anomalies(const Graph& graph,
                                           const LabelMatrix& labels, Index k,
                                           Rng& rng);

/// K uniformly chosen nodes each gain edges to the landing nodes of
/// `repeats` independent `walk_length`-step walks. Labels are unchanged.
InjectionResult inject_rw_structural_anomalies(const Graph& graph,
                                               const LabelMatrix& labels,
                                               Index k, int walk_length,
                                               int repeats, Rng& rng);

/// Wraps an externally perturbed graph and its target nodes.
InjectionResult ingest_perturbed_graph(const Graph& original,
                                       const LabelMatrix& labels,
                                       const Graph& perturbed,
                                       std::vector<Index> targets);

/// One node id per line; `#` comments allowed.
std::vector<Index> load_node_list(std::istream& in, Index num_nodes);
std::vector<Index> load_node_list_file(const std::filesystem::path& path,
                                       Index num_nodes);
void save_node_list_file(const std::filesystem::path& path,
                         const std::vector<Index>& nodes);

/// Semi-synchronous label propagation: nodes of one greedy color class
/// update together, adopting the most frequent neighbor community (keeping
/// their own on ties when it is among the maxima). Returns a community id
/// per node.
std::vector<Index> label_propagation_communities(const Graph& graph, Rng& rng,
                                                 int max_rounds = 100);

}  // namespace graphsac
