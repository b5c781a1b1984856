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

#include "graphsac/sweep.hpp"

#include <chrono>
#include <cmath>
#include <limits>

#include "graphsac/metrics.hpp"
#include "graphsac/parallel.hpp"

namespace graphsac {

std::string_view to_string(InjectorKind kind) {
  switch (kind) {
    case InjectorKind::RwLabel: return "rw-label";
    case InjectorKind::Clustered: return "clustered";
    case InjectorKind::RwStructural: return "rw-structural";
  }
  return "unknown";
}

InjectorKind parse_injector_kind(std::string_view name) {
  for (auto k : {InjectorKind::RwLabel, InjectorKind::Clustered,
                 InjectorKind::RwStructural}) {
    if (to_string(k) == name) return k;
  }
  throw ConfigError("unknown injector '" + std::string(name) +
                    "' (expected rw-label, clustered or rw-structural)");
}

InjectionResult inject(const Graph& graph, const LabelMatrix& labels,
                       const InjectorConfig& config, Index k, Rng& rng) {
  switch (config.kind) {
    case InjectorKind::RwLabel:
      return inject_rw_label_anomalies(graph, labels, k, config.walk_length, rng);
    case InjectorKind::Clustered:
      return inject_clustered_anomalies(graph, labels, k, rng);
    case InjectorKind::RwStructural:
      return inject_rw_structural_anomalies(graph, labels, k, config.walk_length,
                                            config.repeats, rng);
  }
  throw ConfigError("unknown injector");
}

FilterStats filter_stats(const std::vector<DrawRecord>& draws) {
  FilterStats s;
  for (const auto& d : draws) {
    const Index hits = d.contamination.value_or(0);
    if (hits == 0) continue;
    ++s.contaminated;
    if (d.accepted) {
      s.max_accepted_contamination = std::max(s.max_accepted_contamination, hits);
    } else {
      ++s.contaminated_rejected;
    }
  }
  return s;
}

Summary summarize(const std::vector<double>& values) {
  Summary s;
  double sum = 0.0;
  for (double v : values) {
    if (std::isfinite(v)) {
      sum += v;
      ++s.count;
    }
  }
  if (s.count == 0) {
    s.mean = s.sd = std::numeric_limits<double>::quiet_NaN();
    return s;
  }
  s.mean = sum / static_cast<double>(s.count);
  double ss = 0.0;
  for (double v : values) {
    if (std::isfinite(v)) ss += (v - s.mean) * (v - s.mean);
  }
  s.sd = s.count > 1 ? std::sqrt(ss / static_cast<double>(s.count - 1)) : 0.0;
  return s;
}

Index sample_size_for(double fraction, Index num_nodes) {
  return std::max<Index>(
      1, static_cast<Index>(std::llround(fraction * static_cast<double>(num_nodes))));
}

Index anomaly_count_for(double fraction, Index num_nodes) {
  return static_cast<Index>(std::llround(fraction * static_cast<double>(num_nodes)));
}

CellRun run_cell(const Graph& graph, const LabelMatrix& labels,
                 const SweepSpec& spec, Index sample_size, Index num_anomalies,
                 std::uint64_t seed) {
  constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
  CellRun run;
  run.seed = seed;
  try {
    Rng inject_rng(seed, static_cast<std::uint64_t>(num_anomalies));
    const InjectionResult planted =
        inject(graph, labels, spec.injector, num_anomalies, inject_rng);
    GraphSacConfig cfg = spec.detector;
    cfg.sample_size = sample_size;
    cfg.threads = 1;
    cfg.master_seed = derive_seed(
        derive_seed(seed, static_cast<std::uint64_t>(num_anomalies)),
        static_cast<std::uint64_t>(sample_size));
    RunOptions opts;
    opts.anomalous = planted.mask();

    const auto start = std::chrono::steady_clock::now();
    const GraphSacResult res = run_graphsac(planted.graph, planted.labels, cfg, opts);
    run.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();

    const FilterStats stats = filter_stats(res.draws);
    run.rejected_fraction = stats.rejected_fraction();
    run.max_accepted_contamination =
        static_cast<double>(stats.max_accepted_contamination);
    run.accepted = res.accepted;
    if (num_anomalies == 0) {
      run.auc = kNaN;
      run.error = "AUC undefined without anomalies";
    } else {
      run.auc = auc(res.scores.scores, res.scores.anomalous);
    }
  } catch (const std::exception& e) {
    run.auc = run.rejected_fraction = run.max_accepted_contamination = kNaN;
    run.error = e.what();
  }
  return run;
}

SweepResult sweep_grid(const Graph& graph, const LabelMatrix& labels,
                       const SweepSpec& spec) {
  if (spec.seeds.empty()) throw ConfigError("sweep needs at least one seed");
  for (double f : spec.sample_fractions) {
    if (!(f > 0.0 && f <= 1.0)) throw ConfigError("S/N fractions must lie in (0, 1]");
  }
  for (double f : spec.anomaly_fractions) {
    if (!(f >= 0.0 && f <= 1.0)) throw ConfigError("K/N fractions must lie in [0, 1]");
  }
  const Index n = graph.num_nodes();
  SweepResult out;
  out.rows = static_cast<Index>(spec.anomaly_fractions.size());
  out.cols = static_cast<Index>(spec.sample_fractions.size());
  out.cells.resize(static_cast<std::size_t>(out.rows * out.cols));
  for (Index r = 0; r < out.rows; ++r) {
    for (Index c = 0; c < out.cols; ++c) {
      auto& cell = out.cells[static_cast<std::size_t>(r * out.cols + c)];
      cell.anomaly_fraction = spec.anomaly_fractions[r];
      cell.sample_fraction = spec.sample_fractions[c];
      cell.num_anomalies = anomaly_count_for(cell.anomaly_fraction, n);
      cell.sample_size = sample_size_for(cell.sample_fraction, n);
      cell.runs.resize(spec.seeds.size());
    }
  }
  const auto per_cell = static_cast<std::int64_t>(spec.seeds.size());
  parallel_for(static_cast<std::int64_t>(out.cells.size()) * per_cell,
               spec.threads, [&](std::int64_t job) {
                 auto& cell = out.cells[static_cast<std::size_t>(job / per_cell)];
                 const auto s = static_cast<std::size_t>(job % per_cell);
                 cell.runs[s] = run_cell(graph, labels, spec, cell.sample_size,
                                         cell.num_anomalies, spec.seeds[s]);
               });
  return out;
}

}  // namespace graphsac
