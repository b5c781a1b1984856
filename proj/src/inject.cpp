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

#include "graphsac/inject.hpp"

#include <charconv>
#include <deque>
#include <istream>
#include <map>
#include <numeric>
#include <sstream>

#include "graphsac/io.hpp"
#include "graphsac/sampling.hpp"

namespace graphsac {

std::vector<bool> InjectionResult::mask() const {
  std::vector<bool> m(static_cast<std::size_t>(labels.num_nodes()), false);
  for (Index n : anomalies) m[n] = true;
  return m;
}

namespace {

// K distinct nodes, uniformly among those with at least one neighbor when
// walks are taken (walks from isolated nodes cannot move).
std::vector<Index> choose_anomalies(const Graph& graph, Index k,
                                    int walk_length, Rng& rng) {
  const Index n = graph.num_nodes();
  if (k < 0 || k > n) {
    throw PreconditionError("K = " + std::to_string(k) + " outside [0, N = " +
                            std::to_string(n) + "]");
  }
  std::vector<Index> pool;
  for (Index v = 0; v < n; ++v) {
    if (walk_length == 0 || graph.neighbor_count(v) > 0) pool.push_back(v);
  }
  if (static_cast<Index>(pool.size()) < k) {
    throw PreconditionError("only " + std::to_string(pool.size()) +
                            " non-isolated nodes for K = " + std::to_string(k));
  }
  std::vector<Index> chosen;
  for (Index pos : draw_sample(rng, static_cast<Index>(pool.size()), k)) {
    chosen.push_back(pool[static_cast<std::size_t>(pos)]);
  }
  return chosen;
}

}  // namespace

InjectionResult inject_rw_label_anomalies(const Graph& graph,
                                          const LabelMatrix& labels, Index k,
                                          int walk_length, Rng& rng) {
  if (labels.num_nodes() != graph.num_nodes()) {
    throw DimensionError("label matrix and graph disagree on N");
  }
  if (walk_length < 0) throw PreconditionError("negative walk length");
  InjectionResult out;
  out.graph = graph;
  out.anomalies = choose_anomalies(graph, k, walk_length, rng);
  out.meta.kind = "rw-label";
  out.meta.walk_length = walk_length;

  auto sets = labels.to_sets();
  for (Index v : out.anomalies) {
    const Index landing = random_walk(graph, v, walk_length, rng);
    const auto src = labels.labels(landing);
    std::vector<int> replacement(src.begin(), src.end());
    if (replacement != sets[v]) ++out.meta.labels_changed;
    sets[v] = std::move(replacement);
  }
  out.labels = LabelMatrix::from_sets(sets, labels.num_classes());
  out.meta.degenerate = out.meta.labels_changed == 0;
  return out;
}

std::vector<Index> label_propagation_communities(const Graph& graph, Rng& rng,
                                                 int max_rounds) {
  const Index n = graph.num_nodes();
  // Greedy coloring in id order: no two neighbors share a color, so every
  // color class can update simultaneously.
  std::vector<Index> color(static_cast<std::size_t>(n), -1);
  Index num_colors = 0;
  std::vector<Index> mark;
  for (Index v = 0; v < n; ++v) {
    mark.assign(static_cast<std::size_t>(num_colors) + 1, -1);
    for (Index u : graph.neighbors(v)) {
      if (color[u] >= 0) mark[color[u]] = v;
    }
    Index c = 0;
    while (mark[c] == v) ++c;
    color[v] = c;
    num_colors = std::max(num_colors, c + 1);
  }
  std::vector<std::vector<Index>> classes(static_cast<std::size_t>(num_colors));
  for (Index v = 0; v < n; ++v) classes[color[v]].push_back(v);

  std::vector<Index> community(static_cast<std::size_t>(n));
  std::iota(community.begin(), community.end(), Index{0});
  std::map<Index, Index> counts;
  std::vector<Index> best;
  std::vector<Index> update;
  for (int round = 0; round < max_rounds; ++round) {
    bool changed = false;
    for (const auto& members : classes) {
      update.assign(members.size(), 0);
      for (std::size_t i = 0; i < members.size(); ++i) {
        const Index v = members[i];
        update[i] = community[v];
        if (graph.neighbor_count(v) == 0) continue;
        counts.clear();
        for (Index u : graph.neighbors(v)) ++counts[community[u]];
        Index top = 0;
        for (const auto& [label, cnt] : counts) top = std::max(top, cnt);
        best.clear();
        for (const auto& [label, cnt] : counts) {
          if (cnt == top) best.push_back(label);
        }
        const bool keep =
            std::find(best.begin(), best.end(), community[v]) != best.end();
        if (!keep) {
          update[i] = best[static_cast<std::size_t>(rng.uniform_index(best.size()))];
        }
      }
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (community[members[i]] != update[i]) {
          community[members[i]] = update[i];
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
  return community;
}

namespace {

// Connected K-node set grown from `core`: nodes inside `community` are
// expanded before any outside node. Empty if the component is too small.
std::vector<Index> grow_cluster(const Graph& graph,
                                const std::vector<Index>& community,
                                Index label, Index core, Index k) {
  std::vector<bool> seen(static_cast<std::size_t>(graph.num_nodes()), false);
  std::deque<Index> inside{core};
  std::deque<Index> outside;
  seen[core] = true;
  std::vector<Index> picked;
  while (static_cast<Index>(picked.size()) < k &&
         (!inside.empty() || !outside.empty())) {
    std::deque<Index>& queue = inside.empty() ? outside : inside;
    const Index v = queue.front();
    queue.pop_front();
    picked.push_back(v);
    for (Index u : graph.neighbors(v)) {
      if (seen[u]) continue;
      seen[u] = true;
      (community[u] == label ? inside : outside).push_back(u);
    }
  }
  if (static_cast<Index>(picked.size()) < k) picked.clear();
  return picked;
}

}  // namespace

InjectionResult inject_clustered_anomalies(const Graph& graph,
                                           const LabelMatrix& labels, Index k,
                                           Rng& rng) {
  const Index n = graph.num_nodes();
  if (labels.num_nodes() != n) {
    throw DimensionError("label matrix and graph disagree on N");
  }
  if (!labels.is_single_label()) {
    throw PreconditionError("clustered anomalies need single-label input");
  }
  if (k < 1 || k > n) {
    throw PreconditionError("K = " + std::to_string(k) + " outside [1, N]");
  }
  const std::vector<Index> community = label_propagation_communities(graph, rng);
  std::map<Index, std::vector<Index>> members;
  for (Index v = 0; v < n; ++v) members[community[v]].push_back(v);

  // Communities that can hold K nodes come first, in random order; the rest
  // follow by decreasing size and are completed from outside the community.
  std::vector<Index> big;
  std::vector<Index> small;
  for (const auto& [id, nodes] : members) {
    (static_cast<Index>(nodes.size()) >= k ? big : small).push_back(id);
  }
  for (std::size_t i = big.size(); i > 1; --i) {
    std::swap(big[i - 1], big[rng.uniform_index(i)]);
  }
  std::stable_sort(small.begin(), small.end(), [&](Index a, Index b) {
    return members[a].size() > members[b].size();
  });
  big.insert(big.end(), small.begin(), small.end());

  std::vector<Index> cluster;
  Index core = -1;
  Index chosen = -1;
  for (Index id : big) {
    Index best_internal = -1;
    for (Index v : members[id]) {
      Index internal = 0;
      for (Index u : graph.neighbors(v)) internal += community[u] == id ? 1 : 0;
      if (internal > best_internal) {
        best_internal = internal;
        core = v;
      }
    }
    cluster = grow_cluster(graph, community, id, core, k);
    if (!cluster.empty()) {
      chosen = id;
      break;
    }
  }
  if (cluster.empty()) {
    throw PreconditionError("no connected component has " + std::to_string(k) +
                            " nodes");
  }
  std::sort(cluster.begin(), cluster.end());

  std::vector<Index> freq(static_cast<std::size_t>(labels.num_classes()), 0);
  for (Index v : cluster) ++freq[labels.primary(v)];
  int target = -1;
  for (int c = 0; c < labels.num_classes(); ++c) {
    if (freq[c] > 0 && (target < 0 || freq[c] < freq[target])) target = c;
  }

  auto y = labels.to_single();
  InjectionResult out;
  out.graph = graph;
  for (Index v : cluster) {
    if (y[v] != target) ++out.meta.labels_changed;
    y[v] = target;
  }
  out.labels = LabelMatrix::from_single(y, labels.num_classes());
  out.anomalies = std::move(cluster);
  out.meta.kind = "clustered";
  out.meta.assigned_label = target;
  out.meta.degenerate = out.meta.labels_changed == 0;
  out.meta.note = "label-propagation community " + std::to_string(chosen) +
                  " (" + std::to_string(members[chosen].size()) +
                  " nodes), grown from core node " + std::to_string(core);
  return out;
}

InjectionResult inject_rw_structural_anomalies(const Graph& graph,
                                               const LabelMatrix& labels,
                                               Index k, int walk_length,
                                               int repeats, Rng& rng) {
  if (labels.num_nodes() != graph.num_nodes()) {
    throw DimensionError("label matrix and graph disagree on N");
  }
  if (walk_length < 0 || repeats < 0) {
    throw PreconditionError("walk length and repeats must be >= 0");
  }
  InjectionResult out;
  out.anomalies = choose_anomalies(graph, k, walk_length, rng);
  const auto added = walk_edges(graph, out.anomalies, walk_length, repeats, rng);
  auto edges = graph.edges();
  edges.insert(edges.end(), added.begin(), added.end());
  out.graph = Graph::from_edges(graph.num_nodes(), edges, true);
  out.labels = labels;
  out.meta.kind = "rw-structural";
  out.meta.walk_length = walk_length;
  out.meta.repeats = repeats;
  out.meta.edges_added = static_cast<Index>(added.size());
  out.meta.degenerate = added.empty();
  std::sort(out.anomalies.begin(), out.anomalies.end());
  return out;
}

InjectionResult ingest_perturbed_graph(const Graph& original,
                                       const LabelMatrix& labels,
                                       const Graph& perturbed,
                                       std::vector<Index> targets) {
  if (perturbed.num_nodes() != original.num_nodes()) {
    throw DimensionError("perturbed graph has " +
                         std::to_string(perturbed.num_nodes()) +
                         " nodes, original has " +
                         std::to_string(original.num_nodes()));
  }
  for (Index t : targets) {
    if (t < 0 || t >= original.num_nodes()) {
      throw BoundsError("target " + std::to_string(t) + " outside graph");
    }
  }
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());

  InjectionResult out;
  out.graph = perturbed;
  out.labels = labels;
  out.anomalies = std::move(targets);
  out.meta.kind = "external";
  for (const auto& e : perturbed.edges()) {
    if (!original.has_edge(e.source, e.target)) ++out.meta.edges_added;
  }
  for (const auto& e : original.edges()) {
    if (!perturbed.has_edge(e.source, e.target)) ++out.meta.edges_removed;
  }
  out.meta.degenerate = out.meta.edges_added == 0 && out.meta.edges_removed == 0;
  return out;
}

std::vector<Index> load_node_list(std::istream& in, Index num_nodes) {
  std::vector<Index> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = io::strip_comment(line);
    if (body.empty()) continue;
    Index v = 0;
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
    if (ec != std::errc() || ptr != body.data() + body.size() || v < 0) {
      throw ParseError("bad node id '" + std::string(body) + "'", line_no);
    }
    if (v >= num_nodes) {
      throw BoundsError("line " + std::to_string(line_no) + ": node " +
                        std::to_string(v) + " >= N = " +
                        std::to_string(num_nodes));
    }
    out.push_back(v);
  }
  return out;
}

std::vector<Index> load_node_list_file(const std::filesystem::path& path,
                                       Index num_nodes) {
  std::istringstream in(io::read_text_file(path));
  return load_node_list(in, num_nodes);
}

void save_node_list_file(const std::filesystem::path& path,
                         const std::vector<Index>& nodes) {
  std::string text;
  for (Index v : nodes) text += std::to_string(v) + '\n';
  io::write_text_file(path, text);
}

}  // namespace graphsac
