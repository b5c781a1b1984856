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

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "graphsac/graph.hpp"
#include "graphsac/labels.hpp"
#include "graphsac/sampling.hpp"

namespace graphsac {

/// N x C row-stochastic matrix of predicted class distributions.
using DistributionMatrix = Eigen::MatrixXd;

enum class DiffusionKind { PersonalizedPageRank, HeatKernel };

/// Polynomial diffusion h(W) = sum_{t=0}^{order} a_t W^t over the symmetric
/// normalized adjacency W.
///
///   PPR:          a_t = teleport * (1 - teleport)^t
///   heat kernel:  a_t = exp(-scale) * scale^t / t!
///
/// All coefficients are positive and any truncation sums to at most 1.
struct DiffusionModel {
  DiffusionKind kind = DiffusionKind::PersonalizedPageRank;
  int order = 10;
  double teleport = 0.15;
  double hk_scale = 5.0;

  static DiffusionModel ppr(double teleport = 0.15, int order = 10) {
    return {DiffusionKind::PersonalizedPageRank, order, teleport, 5.0};
  }
  static DiffusionModel heat_kernel(double scale = 5.0, int order = 15) {
    return {DiffusionKind::HeatKernel, order, 0.15, scale};
  }

  /// Throws ConfigError on out-of-range parameters.
  void validate() const;
  std::vector<double> coefficients() const;
  std::string name() const;
};

/// h(W) y by Horner's rule: T sparse products, h(W) never materialized.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>
apply_diffusion(const DiffusionModel& model, const NormalizedOperator& op,
                const Eigen::MatrixBase<Derived>& y) {
  using Scalar = typename Derived::Scalar;
  const std::vector<double> a = model.coefficients();
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> acc =
      Scalar(a.back()) * y.derived();
  for (int t = static_cast<int>(a.size()) - 2; t >= 0; --t) {
    acc = normalized_apply(op, acc);
    acc += Scalar(a[t]) * y.derived();
  }
  return acc;
}

/// Linear diffusion output h(W) Y_L, before any row normalization.
Eigen::MatrixXd predict_raw(const DiffusionModel& model,
                            const NormalizedOperator& op,
                            const LabelMatrix& labels, const SeedSet& seeds);

/// Row-normalized h(W) Y_L. Rows without mass become uniform 1/C.
DistributionMatrix predict(const DiffusionModel& model,
                           const NormalizedOperator& op,
                           const LabelMatrix& labels, const SeedSet& seeds);
DistributionMatrix predict(const DiffusionModel& model, const Graph& graph,
                           const LabelMatrix& labels, const SeedSet& seeds);

/// Scales each row to sum 1; all-zero rows become uniform.
void normalize_rows(Eigen::MatrixXd& m);

struct ColumnNormOptions {
  /// Largest N handled in one dense block.
  Index dense_cap = 2000;
  /// Allow N > dense_cap by solving unit vectors in column blocks.
  bool streaming = false;
  Index block_size = 256;
};

/// ||h_n||_1 for every column h_n of h(W).
Eigen::VectorXd diffusion_column_norms(const DiffusionModel& model,
                                       const NormalizedOperator& op,
                                       const ColumnNormOptions& options = {});

}  // namespace graphsac
