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

#include "graphsac/theory.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "graphsac/parallel.hpp"
#include "graphsac/rng.hpp"

namespace graphsac {
namespace {

constexpr std::int64_t kChunk = 1024;

std::string subset_string(std::span<const Index> s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

// Σ_i w_k(i) f(L_i) for each weight function, f the raw diffusion output.
// Per-chunk partial sums are combined in chunk order.
std::vector<Eigen::MatrixXd> weighted_sums(
    const DiffusionModel& model, const NormalizedOperator& op,
    const LabelMatrix& labels, const SubsetEnsemble& ensemble,
    const std::vector<std::function<double(std::int64_t)>>& weights,
    unsigned threads) {
  const Index n = ensemble.num_nodes();
  const Index c = labels.num_classes();
  const std::int64_t chunks = (ensemble.size() + kChunk - 1) / kChunk;
  std::vector<std::vector<Eigen::MatrixXd>> partial(
      static_cast<std::size_t>(chunks),
      std::vector<Eigen::MatrixXd>(weights.size(), Eigen::MatrixXd::Zero(n, c)));
  parallel_for(chunks, threads, [&](std::int64_t chunk) {
    auto& acc = partial[static_cast<std::size_t>(chunk)];
    const std::int64_t end = std::min(ensemble.size(), (chunk + 1) * kChunk);
    for (std::int64_t i = chunk * kChunk; i < end; ++i) {
      std::vector<double> w(weights.size());
      bool any = false;
      for (std::size_t k = 0; k < weights.size(); ++k) {
        w[k] = weights[k](i);
        any = any || w[k] != 0.0;
      }
      if (!any) continue;
      const Eigen::MatrixXd f = predict_raw(model, op, labels, ensemble.seeds(i));
      for (std::size_t k = 0; k < weights.size(); ++k) {
        if (w[k] != 0.0) acc[k] += w[k] * f;
      }
    }
  });
  std::vector<Eigen::MatrixXd> total(weights.size(), Eigen::MatrixXd::Zero(n, c));
  for (const auto& acc : partial) {
    for (std::size_t k = 0; k < weights.size(); ++k) total[k] += acc[k];
  }
  return total;
}

void check_operator(const NormalizedOperator& op, const LabelMatrix& labels,
                    const SubsetEnsemble& ensemble) {
  if (op.size() != ensemble.num_nodes() || labels.num_nodes() != ensemble.num_nodes()) {
    throw DimensionError("graph, labels and ensemble disagree on N");
  }
}

}  // namespace

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __int128 r = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    r = r * (n - i) / (i + 1);
    if (r > std::numeric_limits<std::int64_t>::max()) {
      throw CapacityError("C(" + std::to_string(n) + ", " + std::to_string(k) +
                          ") overflows 64 bits");
    }
  }
  return static_cast<std::int64_t>(r);
}

// ---------------------------------------------------------------------------
// SubsetEnsemble

SubsetEnsemble SubsetEnsemble::enumerate(Index num_nodes, Index sample_size,
                                         std::vector<Index> anomalies,
                                         std::int64_t cap) {
  if (num_nodes < 1) throw PreconditionError("ensemble needs N >= 1");
  if (sample_size < 1 || sample_size > num_nodes) {
    throw PreconditionError("ensemble needs 1 <= S <= N");
  }
  const std::int64_t count = binomial(num_nodes, sample_size);
  if (count > cap) {
    throw CapacityError("C(" + std::to_string(num_nodes) + ", " +
                        std::to_string(sample_size) + ") = " +
                        std::to_string(count) + " subsets exceeds the cap of " +
                        std::to_string(cap));
  }
  std::sort(anomalies.begin(), anomalies.end());
  anomalies.erase(std::unique(anomalies.begin(), anomalies.end()), anomalies.end());
  for (Index a : anomalies) {
    if (a < 0 || a >= num_nodes) throw BoundsError("anomaly id out of range");
  }

  SubsetEnsemble e;
  e.num_nodes_ = num_nodes;
  e.sample_size_ = sample_size;
  e.anomalies_ = std::move(anomalies);
  e.mask_.assign(static_cast<std::size_t>(num_nodes), false);
  for (Index a : e.anomalies_) e.mask_[a] = true;
  e.members_.reserve(static_cast<std::size_t>(count * sample_size));
  e.hits_.reserve(static_cast<std::size_t>(count));

  std::vector<Index> idx(static_cast<std::size_t>(sample_size));
  for (Index i = 0; i < sample_size; ++i) idx[i] = i;
  while (true) {
    Index hits = 0;
    for (Index v : idx) {
      e.members_.push_back(v);
      hits += e.mask_[v] ? 1 : 0;
    }
    e.hits_.push_back(hits);
    if (hits == 0) ++e.clean_;
    Index pos = sample_size - 1;
    while (pos >= 0 && idx[pos] == num_nodes - sample_size + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (Index j = pos + 1; j < sample_size; ++j) idx[j] = idx[j - 1] + 1;
  }
  return e;
}

SeedSet SubsetEnsemble::seeds(std::int64_t i) const {
  const auto s = subset(i);
  return SeedSet(s.begin(), s.end());
}

// ---------------------------------------------------------------------------
// FilterModel

FilterModel FilterModel::two_level(const SubsetEnsemble& ensemble, double f) {
  const auto clean = static_cast<double>(ensemble.clean_count());
  const auto dirty = static_cast<double>(ensemble.contaminated_count());
  if (!(f >= 0.0) || dirty * f > 1.0 + 1e-15) {
    throw PreconditionError("two-level filter needs 0 <= f <= 1/|contaminated|");
  }
  FilterModel m;
  m.kind_ = Kind::TwoLevel;
  m.f_ = f;
  if (ensemble.clean_count() == 0) {
    if (std::abs(dirty * f - 1.0) > 1e-12) {
      throw PreconditionError(
          "without clean subsets the contaminated mass must be 1");
    }
    m.d_ = 0.0;
  } else {
    m.d_ = (1.0 - dirty * f) / clean;
  }
  return m;
}

FilterModel FilterModel::empirical(const SubsetEnsemble& ensemble,
                                   std::vector<bool> verdicts) {
  if (static_cast<std::int64_t>(verdicts.size()) != ensemble.size()) {
    throw DimensionError("one verdict per subset required");
  }
  FilterModel m;
  m.kind_ = Kind::Empirical;
  m.verdicts_ = std::move(verdicts);
  m.accepted_ = std::count(m.verdicts_.begin(), m.verdicts_.end(), true);
  if (m.accepted_ == 0) throw AllRejectedError("filter rejects every subset");
  return m;
}

double FilterModel::probability(const SubsetEnsemble& ensemble,
                                std::int64_t i) const {
  if (kind_ == Kind::TwoLevel) return ensemble.is_clean(i) ? d_ : f_;
  return verdicts_[i] ? 1.0 / static_cast<double>(accepted_) : 0.0;
}

double FilterModel::false_alarm(const SubsetEnsemble& ensemble) const {
  const std::int64_t dirty = ensemble.contaminated_count();
  if (dirty == 0) return 0.0;
  if (kind_ == Kind::TwoLevel) {
    return static_cast<double>(ensemble.size()) / static_cast<double>(dirty) * f_;
  }
  std::int64_t hits = 0;
  for (std::int64_t i = 0; i < ensemble.size(); ++i) {
    if (!ensemble.is_clean(i) && verdicts_[i]) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(dirty);
}

double FilterModel::total_probability(const SubsetEnsemble& ensemble) const {
  if (kind_ == Kind::TwoLevel) {
    return static_cast<double>(ensemble.clean_count()) * d_ +
           static_cast<double>(ensemble.contaminated_count()) * f_;
  }
  double s = 0.0;
  for (std::int64_t i = 0; i < ensemble.size(); ++i) s += probability(ensemble, i);
  return s;
}

// ---------------------------------------------------------------------------

std::vector<bool> consensus_verdicts(const DiffusionModel& model,
                                     const NormalizedOperator& op,
                                     const LabelMatrix& labels,
                                     const SubsetEnsemble& ensemble,
                                     double threshold, unsigned threads) {
  check_operator(op, labels, ensemble);
  std::vector<char> out(static_cast<std::size_t>(ensemble.size()), 0);
  parallel_for(ensemble.size(), threads, [&](std::int64_t i) {
    const auto pred = predict(model, op, labels, ensemble.seeds(i));
    out[static_cast<std::size_t>(i)] =
        consensus_filter(pred, labels, threshold).accepted ? 1 : 0;
  });
  return {out.begin(), out.end()};
}

EnsembleMeans exact_ensemble_means(const DiffusionModel& model,
                                   const NormalizedOperator& op,
                                   const LabelMatrix& labels,
                                   const SubsetEnsemble& ensemble,
                                   const FilterModel& filter, unsigned threads) {
  check_operator(op, labels, ensemble);
  const auto sums = weighted_sums(
      model, op, labels, ensemble,
      {[&](std::int64_t i) { return ensemble.is_clean(i) ? 1.0 : 0.0; },
       [&](std::int64_t i) { return ensemble.is_clean(i) ? 0.0 : 1.0; },
       [&](std::int64_t i) { return filter.probability(ensemble, i); }},
      threads);
  EnsembleMeans m;
  m.nominal = ensemble.clean_count() > 0
                  ? Eigen::MatrixXd(sums[0] / static_cast<double>(ensemble.clean_count()))
                  : Eigen::MatrixXd::Zero(sums[0].rows(), sums[0].cols());
  m.anomalous =
      ensemble.contaminated_count() > 0
          ? Eigen::MatrixXd(sums[1] / static_cast<double>(ensemble.contaminated_count()))
          : Eigen::MatrixXd::Zero(sums[1].rows(), sums[1].cols());
  m.filtered = sums[2];
  return m;
}

// ---------------------------------------------------------------------------
// TheoremReport

void TheoremReport::settle_equality() {
  gap = std::abs(lhs - rhs);
  pass = !skipped && gap <= tolerance;
}

void TheoremReport::settle_upper_bound() {
  gap = std::max(0.0, lhs - rhs);
  pass = !skipped && gap <= tolerance;
}

double TheoremReport::detail(const std::string& key) const {
  for (const auto& [k, v] : details) {
    if (k == key) return v;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

TheoremReport verify_theorem1(const SubsetEnsemble& ensemble,
                              const FilterModel& filter,
                              const EnsembleMeans& means, double tolerance,
                              double convex_tolerance) {
  const auto all = static_cast<double>(ensemble.size());
  const auto dirty = static_cast<double>(ensemble.contaminated_count());
  const double p_fa = filter.false_alarm(ensemble);
  const double rho = dirty * dirty / all * p_fa;

  TheoremReport r;
  r.name = "theorem1";
  r.tolerance = tolerance;
  r.lhs = entrywise_l1(means.filtered - means.nominal);
  r.rhs = rho * entrywise_l1(means.anomalous - means.nominal);
  const Eigen::MatrixXd mix = (1.0 - rho) * means.nominal + rho * means.anomalous;
  const double convex = (means.filtered - mix).cwiseAbs().maxCoeff();
  r.settle_equality();
  r.pass = r.pass && convex <= convex_tolerance;
  r.details = {{"N", static_cast<double>(ensemble.num_nodes())},
               {"S", static_cast<double>(ensemble.sample_size())},
               {"K", static_cast<double>(ensemble.num_anomalies())},
               {"subsets", all},
               {"clean", static_cast<double>(ensemble.clean_count())},
               {"contaminated", dirty},
               {"d", filter.clean_probability()},
               {"f", filter.contaminated_probability()},
               {"p_fa", p_fa},
               {"rho", rho},
               {"total_probability", filter.total_probability(ensemble)},
               {"convex_max_abs", convex},
               {"convex_tolerance", convex_tolerance}};
  return r;
}

std::vector<TheoremReport> verify_corollary1(const DiffusionModel& model,
                                             const NormalizedOperator& op,
                                             const LabelMatrix& labels,
                                             const SubsetEnsemble& ensemble,
                                             double tolerance, unsigned threads) {
  check_operator(op, labels, ensemble);
  if (!labels.is_single_label()) {
    throw PreconditionError("closed form assumes one label per node");
  }
  const Index n = ensemble.num_nodes();
  const Index s = ensemble.sample_size();
  const Index k = ensemble.num_anomalies();
  if (k < 1) throw PreconditionError("closed form needs at least one anomaly");
  if (n - k < s) throw PreconditionError("closed form needs N - K >= S");

  const std::int64_t dirty = ensemble.contaminated_count();
  const std::int64_t f_a = binomial(n - 1, s - 1);
  const std::int64_t clean_freq = binomial(n - k - 1, s - 1);
  const auto& mask = ensemble.anomaly_mask();

  // Direct counts.
  std::vector<std::int64_t> in_clean(static_cast<std::size_t>(n), 0);
  std::vector<std::int64_t> in_dirty(static_cast<std::size_t>(n), 0);
  for (std::int64_t i = 0; i < ensemble.size(); ++i) {
    auto& bucket = ensemble.is_clean(i) ? in_clean : in_dirty;
    for (Index v : ensemble.subset(i)) ++bucket[v];
  }
  std::int64_t mismatches = 0;
  std::int64_t f_n = -1;
  for (Index v = 0; v < n; ++v) {
    if (mask[v]) {
      mismatches += (in_clean[v] != 0 || in_dirty[v] != f_a) ? 1 : 0;
    } else {
      mismatches += in_clean[v] != clean_freq ? 1 : 0;
      mismatches += (n - k) * in_dirty[v] != s * dirty - k * f_a ? 1 : 0;
      f_n = in_dirty[v];
    }
  }
  TheoremReport counting;
  counting.name = "corollary1.counting";
  counting.lhs = static_cast<double>(mismatches);
  counting.rhs = 0.0;
  counting.tolerance = 0.0;
  counting.settle_equality();
  counting.details = {{"f_A", static_cast<double>(f_a)},
                      {"f_N", static_cast<double>(f_n)},
                      {"clean_frequency", static_cast<double>(clean_freq)},
                      {"contaminated", static_cast<double>(dirty)}};

  // Enumerated means under uniform sampling.
  const FilterModel uniform =
      FilterModel::two_level(ensemble, 1.0 / static_cast<double>(ensemble.size()));
  const EnsembleMeans means =
      exact_ensemble_means(model, op, labels, ensemble, uniform, threads);
  const double lhs = entrywise_l1(means.nominal - means.anomalous);

  // Closed form from the dense diffusion matrix.
  const Eigen::MatrixXd h =
      apply_diffusion(model, op, Eigen::MatrixXd::Identity(n, n));
  const Eigen::MatrixXd y = labels.dense();
  Eigen::VectorXd nominal_sel(n), anomalous_sel(n);
  for (Index v = 0; v < n; ++v) {
    nominal_sel[v] = mask[v] ? 0.0 : 1.0;
    anomalous_sel[v] = mask[v] ? 1.0 : 0.0;
  }
  const Eigen::MatrixXd sum_nominal = h * nominal_sel.asDiagonal() * y;
  const Eigen::MatrixXd sum_anomalous = h * anomalous_sel.asDiagonal() * y;
  const double ratio = static_cast<double>(k) / static_cast<double>(n - k);
  const double scale = static_cast<double>(f_a) / static_cast<double>(dirty);

  TheoremReport identity;
  identity.name = "corollary1.identity";
  identity.lhs = lhs;
  identity.rhs = scale * entrywise_l1(ratio * sum_nominal - sum_anomalous);
  identity.tolerance = tolerance;
  identity.settle_equality();
  identity.details = {{"N", static_cast<double>(n)},
                      {"S", static_cast<double>(s)},
                      {"K", static_cast<double>(k)},
                      {"f_A", static_cast<double>(f_a)},
                      {"contaminated", static_cast<double>(dirty)}};

  const Eigen::VectorXd norms = diffusion_column_norms(model, op);
  const double bound =
      scale * std::abs(anomalous_sel.dot(norms) - ratio * nominal_sel.dot(norms));
  TheoremReport lower;
  lower.name = "corollary1.lower_bound";
  lower.lhs = bound;
  lower.rhs = lhs;
  lower.tolerance = tolerance;
  lower.settle_upper_bound();

  return {counting, identity, lower};
}

double theorem2_mean_bound(Index n, Index c, Index draws) {
  const double l = std::log(static_cast<double>(n + c));
  const double i = static_cast<double>(draws);
  const double nn = static_cast<double>(n);
  return std::sqrt(2.0 * nn * l / i) + 2.0 * std::sqrt(nn) * l / (3.0 * i);
}

double theorem2_tail_bound(Index n, Index c, Index draws, double t) {
  const double nn = static_cast<double>(n);
  const double i = static_cast<double>(draws);
  return static_cast<double>(n + c) *
         std::exp(-i * t * t / (nn + 2.0 * std::sqrt(nn) * t / 3.0));
}

std::vector<TheoremReport> verify_theorem2(const DiffusionModel& model,
                                           const NormalizedOperator& op,
                                           const LabelMatrix& labels,
                                           const SubsetEnsemble& ensemble,
                                           const std::vector<bool>& verdicts,
                                           const Theorem2Options& options) {
  check_operator(op, labels, ensemble);
  if (static_cast<std::int64_t>(verdicts.size()) != ensemble.size()) {
    throw DimensionError("one verdict per subset required");
  }
  if (options.trials < 1) throw PreconditionError("need at least one trial");
  const Index n = ensemble.num_nodes();
  const Index c = labels.num_classes();

  std::vector<Eigen::MatrixXd> accepted;
  for (std::int64_t i = 0; i < ensemble.size(); ++i) {
    if (verdicts[i]) accepted.push_back(predict(model, op, labels, ensemble.seeds(i)));
  }
  if (accepted.empty()) throw AllRejectedError("filter rejects every subset");
  Eigen::MatrixXd exact = Eigen::MatrixXd::Zero(n, c);
  for (const auto& p : accepted) exact += p;
  exact /= static_cast<double>(accepted.size());

  std::vector<TheoremReport> reports;
  std::vector<double> log_i, log_dev;
  for (Index draws : options.draw_counts) {
    if (draws < 1) throw PreconditionError("draw counts must be >= 1");
    Rng rng(options.seed, static_cast<std::uint64_t>(draws));
    std::vector<double> dev(static_cast<std::size_t>(options.trials));
    for (auto& d : dev) {
      Eigen::MatrixXd est = Eigen::MatrixXd::Zero(n, c);
      for (Index j = 0; j < draws; ++j) {
        est += accepted[rng.uniform_index(accepted.size())];
      }
      est /= static_cast<double>(draws);
      d = spectral_norm(est - exact);
    }
    double mean = 0.0;
    for (double d : dev) mean += d;
    mean /= static_cast<double>(dev.size());

    TheoremReport r;
    r.name = "theorem2.mean I=" + std::to_string(draws);
    r.lhs = mean;
    r.rhs = theorem2_mean_bound(n, c, draws);
    r.settle_upper_bound();
    r.details = {{"I", static_cast<double>(draws)},
                 {"trials", static_cast<double>(options.trials)},
                 {"max_deviation", *std::max_element(dev.begin(), dev.end())},
                 {"norm_bound", 2.0 * std::sqrt(static_cast<double>(n))},
                 {"accepted_subsets", static_cast<double>(accepted.size())}};
    reports.push_back(r);

    for (double t : {mean, 2.0 * mean}) {
      if (!(t > 0.0)) continue;
      const auto hits = std::count_if(dev.begin(), dev.end(),
                                      [t](double d) { return d >= t; });
      TheoremReport tail;
      tail.name = "theorem2.tail I=" + std::to_string(draws);
      tail.lhs = static_cast<double>(hits) / static_cast<double>(dev.size());
      tail.rhs = std::min(1.0, theorem2_tail_bound(n, c, draws, t));
      tail.settle_upper_bound();
      tail.details = {{"I", static_cast<double>(draws)}, {"t", t}};
      reports.push_back(tail);
    }
    if (mean > 0.0) {
      log_i.push_back(std::log(static_cast<double>(draws)));
      log_dev.push_back(std::log(mean));
    }
  }

  TheoremReport slope;
  slope.name = "theorem2.slope";
  slope.rhs = -0.5;
  slope.tolerance = options.slope_tolerance;
  if (log_i.size() < 2) {
    slope.skipped = true;
    slope.note = "fewer than two nonzero mean deviations";
    slope.lhs = std::numeric_limits<double>::quiet_NaN();
    slope.gap = std::numeric_limits<double>::quiet_NaN();
  } else {
    const auto m = static_cast<double>(log_i.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t j = 0; j < log_i.size(); ++j) {
      sx += log_i[j];
      sy += log_dev[j];
      sxx += log_i[j] * log_i[j];
      sxy += log_i[j] * log_dev[j];
    }
    slope.lhs = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    slope.settle_equality();
  }
  reports.push_back(slope);
  return reports;
}

std::vector<TheoremReport> verify_theorem3(const DiffusionModel& model,
                                           const NormalizedOperator& op,
                                           const LabelMatrix& labels,
                                           const SubsetEnsemble& ensemble,
                                           const std::vector<bool>& verdicts,
                                           double tolerance, unsigned threads) {
  check_operator(op, labels, ensemble);
  if (static_cast<std::int64_t>(verdicts.size()) != ensemble.size()) {
    throw DimensionError("one verdict per subset required");
  }
  const Index k = ensemble.num_anomalies();

  Index k_m = 0;
  std::vector<std::int64_t> rejected_clean;
  for (std::int64_t i = 0; i < ensemble.size(); ++i) {
    if (ensemble.is_clean(i) && !verdicts[i]) rejected_clean.push_back(i);
    if (verdicts[i]) k_m = std::max(k_m, ensemble.contamination(i));
  }
  const bool first_holds = rejected_clean.empty();
  const bool second_holds = k == 0 || k_m <= k - 1;

  TheoremReport literal;
  literal.name = "theorem3";
  literal.tolerance = tolerance;
  TheoremReport refined;
  refined.name = "theorem3.refined";
  refined.tolerance = tolerance;
  const std::vector<std::pair<std::string, double>> common = {
      {"K", static_cast<double>(k)},
      {"K_m", static_cast<double>(k_m)},
      {"assumption_clean_accepted", first_holds ? 1.0 : 0.0},
      {"assumption_heavy_rejected", second_holds ? 1.0 : 0.0}};

  if (!first_holds || !second_holds) {
    std::ostringstream note;
    if (!first_holds) {
      note << rejected_clean.size() << " clean subsets rejected, e.g.";
      for (std::size_t j = 0; j < std::min<std::size_t>(5, rejected_clean.size()); ++j) {
        note << " " << subset_string(ensemble.subset(rejected_clean[j]));
      }
      note << ". ";
    }
    if (!second_holds) {
      std::int64_t heavy = 0;
      std::string examples;
      for (std::int64_t i = 0; i < ensemble.size(); ++i) {
        if (verdicts[i] && ensemble.contamination(i) >= k) {
          if (heavy++ < 5) examples += " " + subset_string(ensemble.subset(i));
        }
      }
      note << heavy << " accepted subsets hold >= K = " << k
           << " anomalies, so no K_m <= K-1 exists, e.g." << examples << ".";
    }
    for (auto* r : {&literal, &refined}) {
      r->skipped = true;
      r->pass = false;
      r->lhs = r->rhs = r->gap = std::numeric_limits<double>::quiet_NaN();
      r->details = common;
      r->note = note.str();
    }
    return {literal, refined};
  }

  std::int64_t clean = ensemble.clean_count();
  std::int64_t light = 0;
  std::int64_t light_accepted = 0;
  for (std::int64_t i = 0; i < ensemble.size(); ++i) {
    const Index hits = ensemble.contamination(i);
    if (hits >= 1 && hits <= k_m) {
      ++light;
      light_accepted += verdicts[i] ? 1 : 0;
    }
  }
  const auto all = static_cast<double>(ensemble.size());
  const auto accepted = static_cast<double>(clean + light_accepted);
  const auto sums = weighted_sums(
      model, op, labels, ensemble,
      {[&](std::int64_t i) { return verdicts[i] ? 1.0 : 0.0; },
       [&](std::int64_t i) { return ensemble.is_clean(i) ? 1.0 : 0.0; },
       [&](std::int64_t i) {
         return verdicts[i] && !ensemble.is_clean(i) ? 1.0 : 0.0;
       }},
      threads);
  const Eigen::MatrixXd p_g = sums[0] / accepted;
  const Eigen::MatrixXd p_n =
      clean > 0 ? Eigen::MatrixXd(sums[1] / static_cast<double>(clean))
                : Eigen::MatrixXd::Zero(sums[1].rows(), sums[1].cols());
  const Eigen::MatrixXd p_a =
      light_accepted > 0
          ? Eigen::MatrixXd(sums[2] / static_cast<double>(light_accepted))
          : Eigen::MatrixXd::Zero(sums[2].rows(), sums[2].cols());

  const double p_clean = static_cast<double>(clean) / all;
  const double p_light = static_cast<double>(light) / all;
  const double p_fa =
      light > 0 ? static_cast<double>(light_accepted) / static_cast<double>(light)
                : 0.0;
  const double lhs = entrywise_l1(p_g - p_n);

  literal.lhs = lhs;
  literal.rhs = p_fa / (p_clean + p_fa * (1.0 - p_clean)) *
                entrywise_l1(p_light * p_a - (1.0 - p_clean) * p_n);
  literal.settle_equality();

  const double p_delta = p_clean + p_fa * p_light;
  refined.lhs = lhs;
  refined.rhs = p_fa * p_light / p_delta * entrywise_l1(p_a - p_n);
  refined.settle_equality();

  // Same display with the acceptance rate taken over all contaminated subsets.
  const double dirty = static_cast<double>(ensemble.contaminated_count()) / all;
  const double p_fa_dirty =
      dirty > 0.0 ? static_cast<double>(light_accepted) / all / dirty : 0.0;
  const double rhs_dirty = p_fa_dirty / (p_clean + p_fa_dirty * (1.0 - p_clean)) *
                           entrywise_l1(p_light * p_a - (1.0 - p_clean) * p_n);

  for (auto* r : {&literal, &refined}) {
    r->details = common;
    if (r == &literal) r->details.emplace_back("rhs_rate_over_contaminated", rhs_dirty);
    r->details.insert(r->details.end(),
                      {{"p_clean", p_clean},
                       {"p_light", p_light},
                       {"p_fa", p_fa},
                       {"p_delta", p_delta},
                       {"accepted_contaminated", static_cast<double>(light_accepted)}});
  }
  if (p_fa > 0.0 && p_light < 1.0 - p_clean) {
    literal.note =
        "accepted contaminated subsets exist while subsets with more than K_m "
        "anomalies have positive mass; the acceptance probability in the "
        "normalizer is then p_fa*p_light, not p_fa*(1-p_clean)";
  }
  return {literal, refined};
}

std::string reports_to_json(const std::vector<TheoremReport>& reports) {
  auto num = [](double v) -> nlohmann::json {
    if (std::isfinite(v)) return v;
    return nullptr;
  };
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json j;
    j["name"] = r.name;
    j["lhs"] = num(r.lhs);
    j["rhs"] = num(r.rhs);
    j["gap"] = num(r.gap);
    j["tolerance"] = r.tolerance;
    j["pass"] = r.pass;
    j["skipped"] = r.skipped;
    nlohmann::json details = nlohmann::json::object();
    for (const auto& [k, v] : r.details) details[k] = num(v);
    j["details"] = details;
    if (!r.note.empty()) j["note"] = r.note;
    out.push_back(j);
  }
  return out.dump(2) + "\n";
}

}  // namespace graphsac
