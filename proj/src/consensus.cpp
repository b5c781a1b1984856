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

#include "graphsac/consensus.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "graphsac/parallel.hpp"
#include "graphsac/rng.hpp"

namespace graphsac {

Index GraphSacConfig::resolved_sample_size(Index num_nodes,
                                           int num_classes) const {
  if (sample_size > 0) return sample_size;
  const auto tenth = static_cast<Index>(
      std::ceil(0.1 * static_cast<double>(num_nodes)));
  return std::min(num_nodes, std::max<Index>(tenth, num_classes));
}

void GraphSacConfig::validate(Index num_nodes, int num_classes) const {
  const Index s = resolved_sample_size(num_nodes, num_classes);
  if (s < 1 || s > num_nodes) {
    throw ConfigError("sample size S = " + std::to_string(s) +
                      " must satisfy 1 <= S <= N = " +
                      std::to_string(num_nodes));
  }
  if (num_draws < 1) throw ConfigError("number of draws I must be >= 1");
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw ConfigError("threshold T must lie in [0, 1]");
  }
  if (num_classes < 1) throw ConfigError("at least one class is required");
  model.validate();
}

int argmax_class(const DistributionMatrix& pred, Index n) {
  int best = 0;
  double best_value = pred(n, 0);
  for (Index c = 1; c < pred.cols(); ++c) {
    if (pred(n, c) > best_value) {
      best_value = pred(n, c);
      best = static_cast<int>(c);
    }
  }
  return best;
}

ConsensusResult consensus_filter(const DistributionMatrix& pred,
                                 const LabelMatrix& labels, double threshold) {
  if (pred.rows() != labels.num_nodes() || pred.cols() != labels.num_classes()) {
    throw DimensionError("prediction and label shapes differ");
  }
  Index agree = 0;
  for (Index n = 0; n < pred.rows(); ++n) {
    if (labels.contains(n, argmax_class(pred, n))) ++agree;
  }
  ConsensusResult r;
  r.ratio = pred.rows() > 0
                ? static_cast<double>(agree) / static_cast<double>(pred.rows())
                : 0.0;
  r.accepted = r.ratio >= threshold;
  return r;
}

Eigen::VectorXd cross_entropy_scores(const DistributionMatrix& estimate,
                                     const LabelMatrix& labels, double eps) {
  Eigen::VectorXd phi(estimate.rows());
  for (Index n = 0; n < estimate.rows(); ++n) {
    double s = 0.0;
    for (int c : labels.labels(n)) s -= std::log(std::max(estimate(n, c), eps));
    phi[n] = s;
  }
  return phi;
}

GraphSacResult run_graphsac(const Graph& graph, const LabelMatrix& labels,
                            const GraphSacConfig& config,
                            const RunOptions& options) {
  const Index n = graph.num_nodes();
  const int c = labels.num_classes();
  if (labels.num_nodes() != n) {
    throw DimensionError("label matrix and graph disagree on N");
  }
  config.validate(n, c);
  if (!options.anomalous.empty() &&
      static_cast<Index>(options.anomalous.size()) != n) {
    throw DimensionError("anomaly mask length differs from N");
  }
  const Index s = config.resolved_sample_size(n, c);
  const NormalizedOperator op(graph);
  const unsigned threads = resolve_threads(config.threads);

  GraphSacResult result;
  result.draws.resize(static_cast<std::size_t>(config.num_draws));
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, c);

  // Draws run in fixed-size batches; the accumulation below walks each batch
  // in draw order so the floating-point sum never depends on scheduling.
  const Index batch = std::max<Index>(1, 2 * static_cast<Index>(threads));
  std::vector<DistributionMatrix> preds(static_cast<std::size_t>(batch));
  for (Index first = 0; first < config.num_draws; first += batch) {
    const Index count = std::min(batch, config.num_draws - first);
    parallel_for(count, threads, [&](std::int64_t k) {
      const Index i = first + k;
      Rng rng(config.master_seed, static_cast<std::uint64_t>(i));
      DrawRecord& rec = result.draws[static_cast<std::size_t>(i)];
      rec.index = i;
      rec.seeds = draw_sample(rng, n, s);
      preds[k] = predict(config.model, op, labels, rec.seeds);
      const ConsensusResult verdict =
          consensus_filter(preds[k], labels, config.threshold);
      rec.consensus_ratio = verdict.ratio;
      rec.accepted = verdict.accepted;
      if (!options.anomalous.empty()) {
        Index hits = 0;
        for (Index v : rec.seeds) hits += options.anomalous[v] ? 1 : 0;
        rec.contamination = hits;
      }
      if (options.verdict_override) rec.accepted = options.verdict_override(rec);
    });
    for (Index k = 0; k < count; ++k) {
      const auto& rec = result.draws[static_cast<std::size_t>(first + k)];
      if (rec.accepted) {
        sum += preds[k];
        ++result.accepted;
      }
      if (options.keep_predictions) result.predictions.push_back(preds[k]);
    }
  }
  if (result.accepted == 0) {
    throw AllRejectedError("all " + std::to_string(config.num_draws) +
                           " draws rejected at T = " +
                           std::to_string(config.threshold) +
                           "; lower the threshold or check the model");
  }
  result.estimate = sum / static_cast<double>(result.accepted);
  result.scores.scores = cross_entropy_scores(result.estimate, labels);
  result.scores.anomalous = options.anomalous;
  return result;
}

std::vector<Index> rank_anomalies(const ScoreVector& scores, Index k) {
  const Index n = scores.size();
  if (k < 0 || k > n) {
    throw PreconditionError("k = " + std::to_string(k) + " outside [0, N]");
  }
  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    return scores.scores[a] > scores.scores[b];
  });
  order.resize(static_cast<std::size_t>(k));
  return order;
}

}  // namespace graphsac
