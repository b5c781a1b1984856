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
#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "graphsac/diffusion.hpp"
#include "graphsac/graph.hpp"
#include "graphsac/labels.hpp"
#include "graphsac/sampling.hpp"

namespace graphsac {

/// Floor applied to probabilities inside the cross-entropy log.
inline constexpr double kScoreEpsilon = 1e-12;

struct GraphSacConfig {
  /// Seeds per draw, S. Zero selects max(ceil(0.1 N), C).
  Index sample_size = 0;
  /// Number of draws, I.
  Index num_draws = 50;
  /// Minimum consensus ratio, T. Draws with ratio < T are rejected.
  double threshold = 0.5;
  std::uint64_t master_seed = 0;
  DiffusionModel model = DiffusionModel::ppr();
  /// Worker threads; 0 means hardware concurrency. Results do not depend on it.
  unsigned threads = 1;

  Index resolved_sample_size(Index num_nodes, int num_classes) const;
  /// Throws ConfigError when S, I or T are out of range for this graph.
  void validate(Index num_nodes, int num_classes) const;
};

/// One iteration of the sampling loop.
struct DrawRecord {
  Index index = 0;
  SeedSet seeds;
  /// |U*| / N.
  double consensus_ratio = 0.0;
  bool accepted = false;
  /// |seeds ∩ anomalies|, known only when ground truth was supplied.
  std::optional<Index> contamination;
};

/// Per-node anomaly scores, higher meaning more anomalous, with an optional
/// ground-truth mask (empty when unknown).
struct ScoreVector {
  Eigen::VectorXd scores;
  std::vector<bool> anomalous;

  Index size() const noexcept { return scores.size(); }
  bool has_truth() const noexcept { return !anomalous.empty(); }
};

struct ConsensusResult {
  double ratio = 0.0;
  bool accepted = false;
};

/// Highest-probability class of row n; ties go to the lowest class index.
int argmax_class(const DistributionMatrix& pred, Index n);

/// Fraction of nodes whose argmax class is among their labels, and whether it
/// reaches `threshold` (ratio >= threshold accepts).
ConsensusResult consensus_filter(const DistributionMatrix& pred,
                                 const LabelMatrix& labels, double threshold);

/// phi_n = -sum_{c in labels(n)} log(max(P(n, c), eps)).
Eigen::VectorXd cross_entropy_scores(const DistributionMatrix& estimate,
                                     const LabelMatrix& labels,
                                     double eps = kScoreEpsilon);

struct RunOptions {
  /// Ground-truth anomaly mask of length N; enables DrawRecord::contamination.
  std::vector<bool> anomalous;
  /// Replaces the consensus verdict of each draw when set.
  std::function<bool(const DrawRecord&)> verdict_override;
  /// Keep every draw's prediction matrix in GraphSacResult::predictions.
  bool keep_predictions = false;
};

struct GraphSacResult {
  /// Mean prediction over accepted draws.
  DistributionMatrix estimate;
  ScoreVector scores;
  std::vector<DrawRecord> draws;
  Index accepted = 0;
  std::vector<DistributionMatrix> predictions;
};

/// Runs the sampling-and-consensus loop: I uniform seed draws, one diffusion
/// solve each, consensus filtering, averaging of the accepted predictions and
/// cross-entropy scoring against the observed labels.
///
/// Draw i uses the RNG stream derive_seed(master_seed, i) and the reduction
/// runs in draw order, so the output is bitwise independent of `threads`.
/// Throws AllRejectedError when no draw passes the filter.
GraphSacResult run_graphsac(const Graph& graph, const LabelMatrix& labels,
                            const GraphSacConfig& config,
                            const RunOptions& options = {});

/// Node ids by decreasing score, ties by increasing id; the first k.
std::vector<Index> rank_anomalies(const ScoreVector& scores, Index k);

}  // namespace graphsac
