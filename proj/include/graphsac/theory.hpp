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

// Brute-force checks of the sampling analysis on graphs small enough to
// enumerate every seed subset. Means are taken over the raw (unnormalized)
// diffusion output unless stated otherwise; row normalization would break
// the linearity the closed forms rely on.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "graphsac/consensus.hpp"
#include "graphsac/diffusion.hpp"
#include "graphsac/graph.hpp"
#include "graphsac/labels.hpp"
#include "graphsac/sampling.hpp"

namespace graphsac {

/// Exact C(n, k); 0 when k < 0 or k > n. Throws CapacityError on overflow.
std::int64_t binomial(std::int64_t n, std::int64_t k);

/// ‖M‖₁ as the sum of absolute entries.
template <typename Derived>
typename Derived::Scalar entrywise_l1(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs().sum();
}

/// Largest singular value.
template <typename Derived>
typename Derived::Scalar spectral_norm(const Eigen::MatrixBase<Derived>& m) {
  using Plain = typename Derived::PlainObject;
  if (m.size() == 0) return typename Derived::Scalar(0);
  Eigen::JacobiSVD<Plain> svd(m.derived());
  return svd.singularValues()(0);
}

inline constexpr std::int64_t kDefaultEnumerationCap = 2'000'000;

/// Every S-subset of N nodes in lexicographic order, tagged with the number
/// of anomalies it contains.
class SubsetEnsemble {
 public:
  static SubsetEnsemble enumerate(Index num_nodes, Index sample_size,
                                  std::vector<Index> anomalies,
                                  std::int64_t cap = kDefaultEnumerationCap);

  Index num_nodes() const { return num_nodes_; }
  Index sample_size() const { return sample_size_; }
  Index num_anomalies() const { return static_cast<Index>(anomalies_.size()); }
  const std::vector<Index>& anomalies() const { return anomalies_; }
  const std::vector<bool>& anomaly_mask() const { return mask_; }

  /// |L_S|
  std::int64_t size() const { return static_cast<std::int64_t>(hits_.size()); }
  /// |L̄_S|, subsets without anomalies.
  std::int64_t clean_count() const { return clean_; }
  /// |L̄_S^c|
  std::int64_t contaminated_count() const { return size() - clean_; }

  std::span<const Index> subset(std::int64_t i) const {
    return {members_.data() + i * sample_size_,
            static_cast<std::size_t>(sample_size_)};
  }
  SeedSet seeds(std::int64_t i) const;
  Index contamination(std::int64_t i) const { return hits_[i]; }
  bool is_clean(std::int64_t i) const { return hits_[i] == 0; }

 private:
  Index num_nodes_ = 0;
  Index sample_size_ = 0;
  std::vector<Index> anomalies_;
  std::vector<bool> mask_;
  std::vector<Index> members_;
  std::vector<Index> hits_;
  std::int64_t clean_ = 0;
};

/// Sampling law p_G over an ensemble. Either the two-level model (every clean
/// subset has probability d, every contaminated one f, d fixed by
/// normalization) or uniform sampling restricted to the subsets a filter
/// accepts.
class FilterModel {
 public:
  enum class Kind { TwoLevel, Empirical };

  /// Throws PreconditionError unless 0 <= f and |L̄^c| f <= 1, and, when no
  /// clean subset exists, |L̄^c| f == 1.
  static FilterModel two_level(const SubsetEnsemble& ensemble, double f);
  /// One verdict per subset, in enumeration order.
  static FilterModel empirical(const SubsetEnsemble& ensemble,
                               std::vector<bool> verdicts);

  Kind kind() const { return kind_; }
  double clean_probability() const { return d_; }
  double contaminated_probability() const { return f_; }
  const std::vector<bool>& verdicts() const { return verdicts_; }

  /// p_G of subset i.
  double probability(const SubsetEnsemble& ensemble, std::int64_t i) const;
  /// |L_S| / |L̄^c| · f for the two-level model; accepted share of the
  /// contaminated subsets for empirical verdicts.
  double false_alarm(const SubsetEnsemble& ensemble) const;
  /// Σ p_G, which must be 1.
  double total_probability(const SubsetEnsemble& ensemble) const;

 private:
  Kind kind_ = Kind::TwoLevel;
  double d_ = 0.0;
  double f_ = 0.0;
  std::vector<bool> verdicts_;
  std::int64_t accepted_ = 0;
};

/// Runs consensus_filter on the normalized prediction of every subset.
std::vector<bool> consensus_verdicts(const DiffusionModel& model,
                                     const NormalizedOperator& op,
                                     const LabelMatrix& labels,
                                     const SubsetEnsemble& ensemble,
                                     double threshold, unsigned threads = 1);

struct EnsembleMeans {
  /// Mean over clean subsets.
  Eigen::MatrixXd nominal;
  /// Mean over contaminated subsets (zero when there are none).
  Eigen::MatrixXd anomalous;
  /// Σ p_G(L) f(L).
  Eigen::MatrixXd filtered;
};

/// Exact means of the raw diffusion output. Sums are reduced in fixed-size
/// chunks in enumeration order, so results do not depend on `threads`.
EnsembleMeans exact_ensemble_means(const DiffusionModel& model,
                                   const NormalizedOperator& op,
                                   const LabelMatrix& labels,
                                   const SubsetEnsemble& ensemble,
                                   const FilterModel& filter,
                                   unsigned threads = 1);

struct TheoremReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  /// Set when a precondition failed and the comparison was not made.
  bool skipped = false;
  std::vector<std::pair<std::string, double>> details;
  std::string note;

  /// Sets gap = |lhs - rhs| and pass accordingly.
  void settle_equality();
  /// Sets gap = max(0, lhs - rhs) and pass accordingly.
  void settle_upper_bound();
  double detail(const std::string& key) const;
};

/// ‖P_G − P_N‖₁ against (|L̄^c|²/|L_S|)·p_fa·‖P_A − P_N‖₁, plus the
/// convex-combination form P_G = (1−ρ)P_N + ρP_A checked entrywise
/// (detail "convex_max_abs").
TheoremReport verify_theorem1(const SubsetEnsemble& ensemble,
                              const FilterModel& filter,
                              const EnsembleMeans& means,
                              double tolerance = 1e-10,
                              double convex_tolerance = 1e-12);

/// ‖P_N − P_A‖₁ against the closed form in the diffusion columns h_n, with
/// f_A = C(N−1, S−1). Also checks, by direct count, that each nominal node
/// lies in C(N−K−1, S−1) clean subsets and in f_N contaminated ones with
/// (N−K) f_N = S|L̄^c| − K f_A, and that the reverse-triangle lower bound
/// holds. Requires single-label input and K ≥ 1.
std::vector<TheoremReport> verify_corollary1(const DiffusionModel& model,
                                             const NormalizedOperator& op,
                                             const LabelMatrix& labels,
                                             const SubsetEnsemble& ensemble,
                                             double tolerance = 1e-10,
                                             unsigned threads = 1);

struct Theorem2Options {
  std::vector<Index> draw_counts{1, 5, 25, 125, 625};
  Index trials = 200;
  std::uint64_t seed = 0;
  /// Allowed distance of the log-log slope from -1/2.
  double slope_tolerance = 0.15;
};

/// Monte-Carlo check of the concentration of P̂_G around P_G under the real
/// filter. P_G is the exact mean of the normalized predictions over accepted
/// subsets; each trial averages I subsets drawn uniformly from the accepted
/// ones. Reports per I the mean spectral deviation against
/// √(2N log(N+C)/I) + 2√N log(N+C)/(3I), tail frequencies against
/// (N+C) exp(−I t²/(N + 2√N t/3)) at probe points, and the decay slope.
std::vector<TheoremReport> verify_theorem2(const DiffusionModel& model,
                                           const NormalizedOperator& op,
                                           const LabelMatrix& labels,
                                           const SubsetEnsemble& ensemble,
                                           const std::vector<bool>& verdicts,
                                           const Theorem2Options& options = {});

/// Right-hand sides of the two concentration bounds.
double theorem2_mean_bound(Index n, Index c, Index draws);
double theorem2_tail_bound(Index n, Index c, Index draws, double t);

/// Refined identity under the two filter assumptions: every clean subset is
/// accepted, and every subset with more than K_m anomalies is rejected for
/// some K_m ≤ K−1 (K_m is taken as the largest contamination accepted).
/// Returns the literal identity, with p_fa = P(accept | 1 ≤ hits ≤ K_m),
/// followed by the identity with p_δ = p_clean + p_fa·p_{K_m}. When an
/// assumption fails both reports are skipped and the note lists offending
/// subsets.
std::vector<TheoremReport> verify_theorem3(const DiffusionModel& model,
                                           const NormalizedOperator& op,
                                           const LabelMatrix& labels,
                                           const SubsetEnsemble& ensemble,
                                           const std::vector<bool>& verdicts,
                                           double tolerance = 1e-10,
                                           unsigned threads = 1);

/// JSON array of reports.
std::string reports_to_json(const std::vector<TheoremReport>& reports);

}  // namespace graphsac
