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

#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "graphsac/graph.hpp"

namespace graphsac {

/// Node-to-class assignment Y, stored as sorted per-node class sets.
///
/// Every node carries at least one class and every class id is below
/// `num_classes()`. In single-label mode each row has exactly one entry.
class LabelMatrix {
 public:
  LabelMatrix() = default;

  /// One class per node. `num_classes` of 0 means 1 + max(y).
  static LabelMatrix from_single(std::span<const int> y, int num_classes = 0);
  /// Arbitrary nonempty class sets. `num_classes` of 0 means 1 + max id.
  static LabelMatrix from_sets(const std::vector<std::vector<int>>& sets,
                               int num_classes = 0);

  Index num_nodes() const noexcept {
    return offsets_.empty() ? 0 : static_cast<Index>(offsets_.size()) - 1;
  }
  int num_classes() const noexcept { return num_classes_; }
  bool is_single_label() const noexcept { return single_label_; }

  std::span<const int> labels(Index n) const {
    return {classes_.data() + offsets_[n],
            static_cast<std::size_t>(offsets_[n + 1] - offsets_[n])};
  }
  /// Smallest class of node n; the class itself in single-label mode.
  int primary(Index n) const { return classes_[offsets_[n]]; }
  bool contains(Index n, int c) const;

  std::vector<std::vector<int>> to_sets() const;
  /// Single-label vector; throws PreconditionError for multilabel matrices.
  std::vector<int> to_single() const;

  /// Dense N x C 0/1 matrix.
  Eigen::MatrixXd dense() const;
  /// Y restricted to `seeds`: row n is y_n for seeds and zero otherwise.
  Eigen::MatrixXd seed_rows(std::span<const Index> seeds) const;

  friend bool operator==(const LabelMatrix&, const LabelMatrix&) = default;

 private:
  std::vector<Index> offsets_;
  std::vector<int> classes_;
  int num_classes_ = 0;
  bool single_label_ = true;
};

/// Parses `node<TAB>label` or `node<TAB>l1,l2,...` lines covering 0..N-1.
LabelMatrix load_labels(std::istream& in, Index num_nodes);
LabelMatrix load_labels_file(const std::filesystem::path& path,
                             Index num_nodes);

void save_labels(std::ostream& out, const LabelMatrix& labels);
void save_labels_file(const std::filesystem::path& path,
                      const LabelMatrix& labels);

}  // namespace graphsac
