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

#include "graphsac/diffusion.hpp"

#include <cmath>

namespace graphsac {

void DiffusionModel::validate() const {
  if (order < 0) throw ConfigError("diffusion order must be >= 0");
  if (kind == DiffusionKind::PersonalizedPageRank &&
      !(teleport > 0.0 && teleport < 1.0)) {
    throw ConfigError("PPR teleport must lie in (0, 1)");
  }
  if (kind == DiffusionKind::HeatKernel &&
      !(hk_scale > 0.0 && std::isfinite(hk_scale))) {
    throw ConfigError("heat-kernel scale must be positive");
  }
}

std::vector<double> DiffusionModel::coefficients() const {
  validate();
  std::vector<double> a(static_cast<std::size_t>(order) + 1);
  if (kind == DiffusionKind::PersonalizedPageRank) {
    double term = teleport;
    for (auto& v : a) {
      v = term;
      term *= 1.0 - teleport;
    }
  } else {
    double term = std::exp(-hk_scale);
    for (std::size_t t = 0; t < a.size(); ++t) {
      a[t] = term;
      term *= hk_scale / static_cast<double>(t + 1);
    }
  }
  return a;
}

std::string DiffusionModel::name() const {
  return kind == DiffusionKind::PersonalizedPageRank ? "ppr" : "hk";
}

Eigen::MatrixXd predict_raw(const DiffusionModel& model,
                            const NormalizedOperator& op,
                            const LabelMatrix& labels, const SeedSet& seeds) {
  if (seeds.empty()) throw PreconditionError("empty seed set");
  if (labels.num_nodes() != op.size()) {
    throw DimensionError("label matrix and graph disagree on N");
  }
  validate_seed_set(seeds, op.size());
  Eigen::MatrixXd out = apply_diffusion(model, op, labels.seed_rows(seeds));
  if (!out.allFinite()) {
    throw NumericError("non-finite diffusion output");
  }
  return out;
}

void normalize_rows(Eigen::MatrixXd& m) {
  const double uniform = m.cols() > 0 ? 1.0 / static_cast<double>(m.cols()) : 0.0;
  for (Index n = 0; n < m.rows(); ++n) {
    const double s = m.row(n).sum();
    if (s > 0.0) {
      m.row(n) /= s;
    } else {
      m.row(n).setConstant(uniform);
    }
  }
}

DistributionMatrix predict(const DiffusionModel& model,
                           const NormalizedOperator& op,
                           const LabelMatrix& labels, const SeedSet& seeds) {
  Eigen::MatrixXd p = predict_raw(model, op, labels, seeds);
  normalize_rows(p);
  return p;
}

DistributionMatrix predict(const DiffusionModel& model, const Graph& graph,
                           const LabelMatrix& labels, const SeedSet& seeds) {
  const NormalizedOperator op(graph);
  return predict(model, op, labels, seeds);
}

Eigen::VectorXd diffusion_column_norms(const DiffusionModel& model,
                                       const NormalizedOperator& op,
                                       const ColumnNormOptions& options) {
  const Index n = op.size();
  if (n > options.dense_cap && !options.streaming) {
    throw CapacityError("N = " + std::to_string(n) + " exceeds dense cap " +
                        std::to_string(options.dense_cap) +
                        "; enable streaming");
  }
  const Index block = n <= options.dense_cap
                          ? std::max<Index>(n, 1)
                          : std::max<Index>(options.block_size, 1);
  Eigen::VectorXd norms(n);
  for (Index start = 0; start < n; start += block) {
    const Index width = std::min(block, n - start);
    Eigen::MatrixXd unit = Eigen::MatrixXd::Zero(n, width);
    for (Index k = 0; k < width; ++k) unit(start + k, k) = 1.0;
    // h(W) is symmetric with nonnegative entries, so column sums are 1-norms.
    norms.segment(start, width) =
        apply_diffusion(model, op, unit).colwise().sum().transpose();
  }
  return norms;
}

}  // namespace graphsac
