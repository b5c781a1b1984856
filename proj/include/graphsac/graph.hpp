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
#include <optional>
#include <span>
#include <type_traits>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "graphsac/error.hpp"

namespace graphsac {

using Index = Eigen::Index;

struct WeightedEdge {
  Index source = 0;
  Index target = 0;
  double weight = 1.0;
};

/// Immutable undirected graph in compressed sparse row form.
///
/// Every undirected edge {n, m} is stored twice, once per endpoint row, with
/// the same strictly positive weight. Column indices within a row are sorted
/// and unique. Self-loops, when kept, are stored once on the diagonal.
class Graph {
 public:
  using Adjacency = Eigen::SparseMatrix<double, Eigen::RowMajor, Index>;

  Graph() = default;

  /// Builds a symmetric graph from a (possibly directed, possibly repeated)
  /// edge list. Edges are symmetrized by union; conflicting weights resolve
  /// to the maximum. Self-loops are dropped unless `keep_self_loops`.
  static Graph from_edges(Index num_nodes, std::span<const WeightedEdge> edges,
                          bool keep_self_loops = false);

  Index num_nodes() const noexcept { return adjacency_.rows(); }
  /// Undirected edge count; a kept self-loop counts once.
  Index num_edges() const noexcept { return num_edges_; }

  const Adjacency& adjacency() const noexcept { return adjacency_; }
  /// Weighted degrees d_n = sum_m A(n, m).
  const Eigen::VectorXd& degrees() const noexcept { return degrees_; }

  std::span<const Index> neighbors(Index n) const;
  std::span<const double> weights(Index n) const;
  /// Number of stored neighbors of `n` (weights ignored).
  Index neighbor_count(Index n) const {
    return adjacency_.outerIndexPtr()[n + 1] - adjacency_.outerIndexPtr()[n];
  }
  bool has_edge(Index a, Index b) const;
  bool is_weighted() const noexcept { return weighted_; }

  /// One entry per undirected edge with source <= target, in row order.
  std::vector<WeightedEdge> edges() const;

 private:
  Adjacency adjacency_{0, 0};
  Eigen::VectorXd degrees_;
  Index num_edges_ = 0;
  bool weighted_ = false;
};

struct GraphLoadOptions {
  /// Declared node count. Ids at or above it are a BoundsError. When absent,
  /// N is one more than the largest id seen (or a `# nodes N` header).
  std::optional<Index> num_nodes;
  bool keep_self_loops = false;
  /// Map arbitrary integer ids onto 0..N-1 in order of first appearance.
  bool remap_ids = false;
};

/// External id of every dense node, filled when ids are remapped.
using IdTable = std::vector<std::int64_t>;

/// Parses `src dst [weight]` lines. `#` starts a comment.
Graph load_graph(std::istream& in, const GraphLoadOptions& options = {},
                 IdTable* ids = nullptr);
/// As load_graph; a `.gz` extension is decompressed transparently.
Graph load_graph_file(const std::filesystem::path& path,
                      const GraphLoadOptions& options = {},
                      IdTable* ids = nullptr);

/// Writes a `# nodes N` header followed by one line per undirected edge.
/// Weights are written only for weighted graphs, with round-trip precision.
void save_graph(std::ostream& out, const Graph& graph);
void save_graph_file(const std::filesystem::path& path, const Graph& graph);

/// Symmetric normalization D^{-1/2} A D^{-1/2} of a graph's adjacency.
/// Rows and columns of isolated nodes are zero.
class NormalizedOperator {
 public:
  explicit NormalizedOperator(const Graph& graph);

  const Graph& graph() const noexcept { return *graph_; }
  const Graph::Adjacency& matrix() const noexcept { return normalized_; }
  Index size() const noexcept { return normalized_.rows(); }

 private:
  const Graph* graph_;
  Graph::Adjacency normalized_;
};

/// Applies D^{-1/2} A D^{-1/2} to the columns of `v` in O(E * v.cols()).
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>
normalized_apply(const NormalizedOperator& op,
                 const Eigen::MatrixBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  if (v.rows() != op.size()) {
    throw DimensionError("normalized_apply: operand has " +
                         std::to_string(v.rows()) + " rows, operator has " +
                         std::to_string(op.size()));
  }
  if constexpr (std::is_same_v<Scalar, double>) {
    return op.matrix() * v.derived();
  } else {
    return op.matrix().template cast<Scalar>() * v.derived();
  }
}

}  // namespace graphsac
