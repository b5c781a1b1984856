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

#include "graphsac/metrics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <numeric>
#include <sstream>

#include "graphsac/io.hpp"

namespace graphsac {
namespace {

void check_truth(const Eigen::VectorXd& scores,
                 const std::vector<bool>& anomalous, Index& pos, Index& neg) {
  if (static_cast<Index>(anomalous.size()) != scores.size()) {
    throw DimensionError("score and ground-truth lengths differ");
  }
  if (!scores.allFinite()) throw NumericError("non-finite anomaly score");
  pos = std::count(anomalous.begin(), anomalous.end(), true);
  neg = scores.size() - pos;
  if (pos == 0 || neg == 0) {
    throw PreconditionError(
        "AUC needs at least one anomalous and one normal node");
  }
}

std::vector<Index> descending_order(const Eigen::VectorXd& scores) {
  std::vector<Index> order(static_cast<std::size_t>(scores.size()));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return scores[a] > scores[b]; });
  return order;
}

}  // namespace

std::int64_t mann_whitney_u_x2(const Eigen::VectorXd& scores,
                               const std::vector<bool>& anomalous) {
  Index pos = 0;
  Index neg = 0;
  check_truth(scores, anomalous, pos, neg);
  std::vector<Index> order(static_cast<std::size_t>(scores.size()));
  std::iota(order.begin(), order.end(), Index{0});
  std::sort(order.begin(), order.end(),
            [&](Index a, Index b) { return scores[a] < scores[b]; });
  // Twice the midrank sum keeps every tie group integral.
  std::int64_t rank_sum_x2 = 0;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && scores[order[j]] == scores[order[i]]) ++j;
    const auto midrank_x2 = static_cast<std::int64_t>(i + 1 + j);
    for (std::size_t k = i; k < j; ++k) {
      if (anomalous[order[k]]) rank_sum_x2 += midrank_x2;
    }
    i = j;
  }
  return rank_sum_x2 - static_cast<std::int64_t>(pos) * (pos + 1);
}

double auc(const Eigen::VectorXd& scores, const std::vector<bool>& anomalous) {
  const std::int64_t u_x2 = mann_whitney_u_x2(scores, anomalous);
  const auto pos = std::count(anomalous.begin(), anomalous.end(), true);
  const auto neg = static_cast<std::int64_t>(anomalous.size()) - pos;
  return static_cast<double>(u_x2) / (2.0 * static_cast<double>(pos) *
                                      static_cast<double>(neg));
}

std::vector<RocPoint> roc_curve(const Eigen::VectorXd& scores,
                                const std::vector<bool>& anomalous) {
  Index pos = 0;
  Index neg = 0;
  check_truth(scores, anomalous, pos, neg);
  const auto order = descending_order(scores);
  std::vector<RocPoint> roc{{0.0, 0.0}};
  Index tp = 0;
  Index fp = 0;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && scores[order[j]] == scores[order[i]]) {
      (anomalous[order[j]] ? tp : fp) += 1;
      ++j;
    }
    roc.push_back({static_cast<double>(fp) / static_cast<double>(neg),
                   static_cast<double>(tp) / static_cast<double>(pos)});
    i = j;
  }
  return roc;
}

double trapezoid_area(std::span<const RocPoint> roc) {
  double area = 0.0;
  for (std::size_t i = 1; i < roc.size(); ++i) {
    area += (roc[i].fpr - roc[i - 1].fpr) * (roc[i].tpr + roc[i - 1].tpr) / 2.0;
  }
  return area;
}

EvalReport evaluate(const ScoreVector& scores) {
  EvalReport r;
  r.auc = auc(scores.scores, scores.anomalous);
  r.roc = roc_curve(scores.scores, scores.anomalous);
  r.positives = std::count(scores.anomalous.begin(), scores.anomalous.end(), true);
  r.negatives = scores.size() - r.positives;
  const auto top = rank_anomalies(scores, r.positives);
  Index hits = 0;
  for (Index v : top) hits += scores.anomalous[v] ? 1 : 0;
  r.precision_at_k = static_cast<double>(hits) / static_cast<double>(r.positives);
  return r;
}

Eigen::VectorXd load_external_scores(std::istream& in, Index num_nodes) {
  Eigen::VectorXd scores = Eigen::VectorXd::Zero(num_nodes);
  std::vector<bool> seen(static_cast<std::size_t>(num_nodes), false);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = io::strip_comment(line);
    if (body.empty()) continue;
    const auto tokens = io::split_whitespace(body);
    if (tokens.size() != 2) {
      throw ParseError("expected 'node<TAB>score', got '" + std::string(body) + "'",
                       line_no);
    }
    Index node = 0;
    double value = 0.0;
    auto [p1, e1] = std::from_chars(tokens[0].data(),
                                    tokens[0].data() + tokens[0].size(), node);
    if (e1 != std::errc() || p1 != tokens[0].data() + tokens[0].size() ||
        node < 0) {
      throw ParseError("bad node id '" + std::string(tokens[0]) + "'", line_no);
    }
    auto [p2, e2] = std::from_chars(tokens[1].data(),
                                    tokens[1].data() + tokens[1].size(), value);
    if (e2 != std::errc() || p2 != tokens[1].data() + tokens[1].size() ||
        !std::isfinite(value)) {
      throw ParseError("non-numeric score '" + std::string(tokens[1]) + "'",
                       line_no);
    }
    if (node >= num_nodes) {
      throw BoundsError("line " + std::to_string(line_no) + ": node " +
                        std::to_string(node) + " >= N");
    }
    scores[node] = value;
    seen[node] = true;
  }
  std::vector<std::size_t> missing;
  for (std::size_t n = 0; n < seen.size(); ++n) {
    if (!seen[n]) missing.push_back(n);
  }
  if (!missing.empty()) {
    throw MissingNodesError("incomplete score file", std::move(missing));
  }
  return scores;
}

Eigen::VectorXd load_external_scores_file(const std::filesystem::path& path,
                                          Index num_nodes) {
  std::istringstream in(io::read_text_file(path));
  return load_external_scores(in, num_nodes);
}

EvalReport ingest_external_scores(std::istream& in,
                                  const std::vector<bool>& anomalous,
                                  const std::string& method) {
  ScoreVector sv;
  sv.scores = load_external_scores(in, static_cast<Index>(anomalous.size()));
  sv.anomalous = anomalous;
  EvalReport r = evaluate(sv);
  r.method = method;
  return r;
}

}  // namespace graphsac
