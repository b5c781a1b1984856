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
#include <string>
#include <string_view>
#include <vector>

#include "graphsac/consensus.hpp"
#include "graphsac/graph.hpp"
#include "graphsac/inject.hpp"
#include "graphsac/labels.hpp"

namespace graphsac {

enum class InjectorKind { RwLabel, Clustered, RwStructural };

std::string_view to_string(InjectorKind kind);
InjectorKind parse_injector_kind(std::string_view name);

struct InjectorConfig {
  InjectorKind kind = InjectorKind::RwLabel;
  int walk_length = 10;
  /// Walks per anomaly for structural anomalies.
  int repeats = 5;
};

/// Runs the configured generator with K anomalies.
InjectionResult inject(const Graph& graph, const LabelMatrix& labels,
                       const InjectorConfig& config, Index k, Rng& rng);

/// Contamination statistics of one run's draws.
struct FilterStats {
  Index contaminated = 0;
  Index contaminated_rejected = 0;
  /// Largest contamination among accepted draws (0 if none was contaminated).
  Index max_accepted_contamination = 0;

  /// Fraction of contaminated draws rejected; 1 when none were contaminated.
  double rejected_fraction() const {
    return contaminated == 0 ? 1.0
                             : static_cast<double>(contaminated_rejected) /
                                   static_cast<double>(contaminated);
  }
};

FilterStats filter_stats(const std::vector<DrawRecord>& draws);

struct SweepSpec {
  std::vector<double> sample_fractions;
  std::vector<double> anomaly_fractions;
  std::vector<std::uint64_t> seeds;
  InjectorConfig injector;
  /// Detector template; sample_size and master_seed are set per cell.
  GraphSacConfig detector;
  /// Concurrent (cell, seed) jobs.
  unsigned threads = 1;
};

struct CellRun {
  std::uint64_t seed = 0;
  double auc = 0.0;
  /// Fraction of contaminated draws rejected (p_c).
  double rejected_fraction = 1.0;
  double max_accepted_contamination = 0.0;
  Index accepted = 0;
  double wall_seconds = 0.0;
  /// Why the metrics are NaN, when they are.
  std::string error;
};

struct SweepCell {
  double sample_fraction = 0.0;
  double anomaly_fraction = 0.0;
  Index sample_size = 0;
  Index num_anomalies = 0;
  std::vector<CellRun> runs;
};

struct Summary {
  double mean = 0.0;
  double sd = 0.0;
  Index count = 0;
};

/// Mean and sample standard deviation of the finite entries.
Summary summarize(const std::vector<double>& values);

struct SweepResult {
  /// Row-major: one row per anomaly fraction, one column per sample fraction.
  std::vector<SweepCell> cells;
  Index rows = 0;
  Index cols = 0;

  const SweepCell& at(Index row, Index col) const {
    return cells[static_cast<std::size_t>(row * cols + col)];
  }
};

/// S = max(1, round(fraction * N)).
Index sample_size_for(double fraction, Index num_nodes);
/// K = round(fraction * N).
Index anomaly_count_for(double fraction, Index num_nodes);

/// Detection grid over (S/N, K/N, seed). Anomalies depend only on (seed, K)
/// so every S in a row sees the same injected graph; detector streams depend
/// only on (seed, K, S). Failed runs record NaN metrics and the cause instead
/// of aborting the grid.
SweepResult sweep_grid(const Graph& graph, const LabelMatrix& labels,
                       const SweepSpec& spec);

/// One (S, K, seed) run as performed inside sweep_grid.
CellRun run_cell(const Graph& graph, const LabelMatrix& labels,
                 const SweepSpec& spec, Index sample_size, Index num_anomalies,
                 std::uint64_t seed);

}  // namespace graphsac
