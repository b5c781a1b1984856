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
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "graphsac/consensus.hpp"

namespace graphsac {

struct RocPoint {
  double fpr = 0.0;
  double tpr = 0.0;
};

struct EvalReport {
  double auc = 0.0;
  /// From (0, 0) to (1, 1), one point per distinct score value.
  std::vector<RocPoint> roc;
  /// Precision among the top-K ranked nodes, K = number of anomalies.
  double precision_at_k = 0.0;
  Index positives = 0;
  Index negatives = 0;
  std::string method;
  double wall_seconds = 0.0;
};

/// Twice the Mann-Whitney U statistic of the anomalies (ties count 1/2),
/// i.e. 2 #(a > n) + #(a == n) over anomaly/normal pairs. Exact.
std::int64_t mann_whitney_u_x2(const Eigen::VectorXd& scores,
                               const std::vector<bool>& anomalous);

/// Mann-Whitney AUC with midranks: P(score_a > score_n) + P(tie) / 2 for a
/// random anomaly a and normal node n. Needs both classes present.
double auc(const Eigen::VectorXd& scores, const std::vector<bool>& anomalous);

/// Threshold sweep over distinct score values, highest first.
std::vector<RocPoint> roc_curve(const Eigen::VectorXd& scores,
                                const std::vector<bool>& anomalous);

/// Trapezoidal area under a stored curve.
double trapezoid_area(std::span<const RocPoint> roc);

/// AUC, ROC and precision@K of scores carrying ground truth.
EvalReport evaluate(const ScoreVector& scores);

/// Parses `node<TAB>score` lines covering 0..N-1.
Eigen::VectorXd load_external_scores(std::istream& in, Index num_nodes);
Eigen::VectorXd load_external_scores_file(const std::filesystem::path& path,
                                          Index num_nodes);

/// EvalReport of an external method's score file under `anomalous`.
EvalReport ingest_external_scores(std::istream& in,
                                  const std::vector<bool>& anomalous,
                                  const std::string& method = "external");

}  // namespace graphsac
