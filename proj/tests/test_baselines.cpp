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


#include <doctest.h>

#include <random>

#include "graphsac/baselines.hpp"
#include "oracles.hpp"

using namespace graphsac;

namespace {

Graph from(Index n, std::vector<WeightedEdge> e) { return Graph::from_edges(n, e); }

// Two 4-cliques {0..3} and {5..8} joined through node 4.
Graph bridged_cliques() {
  std::vector<WeightedEdge> e;
  for (Index base : {0, 5}) {
    for (Index i = 0; i < 4; ++i) {
      for (Index j = i + 1; j < 4; ++j) e.push_back({base + i, base + j, 1.0});
    }
  }
  e.push_back({3, 4, 1.0});
  e.push_back({4, 5, 1.0});
  return from(9, e);
}

}  // namespace

TEST_SUITE("baselines") {

TEST_CASE("hand-counted egonets") {
  Graph iso = from(3, {{0, 1}});
  Egonet e = egonet_stats(iso, 2);
  CHECK(e.members == std::vector<Index>{2});
  CHECK(e.internal_edges == 0);
  CHECK(e.boundary_edges == 0);

  Graph k3 = from(3, {{0, 1}, {1, 2}, {0, 2}});
  e = egonet_stats(k3, 1);
  CHECK(e.members.size() == 3);
  CHECK(e.internal_edges == 3);
  CHECK(e.boundary_edges == 0);

  Graph star = from(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  e = egonet_stats(star, 0);
  CHECK(e.internal_edges == 4);
  CHECK(e.boundary_edges == 0);
  e = egonet_stats(star, 2);
  CHECK(e.members.size() == 2);
  CHECK(e.internal_edges == 1);
  CHECK(e.boundary_edges == 3);
  CHECK(e.leaky_members == 1);

  Graph single = from(4, {{0, 1}});
  e = egonet_stats(single, 0);
  CHECK(e.internal_edges == 1);
  CHECK(egonet_quality(e, 4, BaselineMetric::Conductance) == 0.0);
}

TEST_CASE("metric formulas") {
  Egonet e;
  e.members = {0, 1, 2, 3};
  e.internal_edges = 3;
  e.boundary_edges = 2;
  e.leaky_members = 1;
  CHECK(egonet_quality(e, 10, BaselineMetric::AverageDegree) == 1.5);
  CHECK(egonet_quality(e, 10, BaselineMetric::CutRatio) == doctest::Approx(2.0 / 24));
  CHECK(egonet_quality(e, 10, BaselineMetric::Flake) == 0.25);
  CHECK(egonet_quality(e, 10, BaselineMetric::Conductance) == doctest::Approx(0.25));
  Egonet lone;
  lone.members = {0};
  CHECK(egonet_quality(lone, 1, BaselineMetric::CutRatio) == 0.0);
  CHECK(egonet_quality(lone, 1, BaselineMetric::Conductance) == 0.0);
}

TEST_CASE("names") {
  for (auto m : {BaselineMetric::AverageDegree, BaselineMetric::CutRatio,
                 BaselineMetric::Flake, BaselineMetric::Conductance}) {
    CHECK(parse_baseline_metric(to_string(m)) == m);
  }
  CHECK_FALSE(parse_baseline_metric("pagerank").has_value());
}

TEST_CASE("isolated clique scores zero, bridge scores highest") {
  Graph g = bridged_cliques();
  ScoreVector s = baseline_scores(g, BaselineMetric::Conductance);
  CHECK(s.scores[4] > s.scores[0]);
  CHECK(s.scores[4] > s.scores[1]);
  CHECK(s.scores[4] > s.scores[8]);

  Graph clique = from(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  for (auto m : {BaselineMetric::CutRatio, BaselineMetric::Flake,
                 BaselineMetric::Conductance}) {
    CHECK(baseline_scores(clique, m).scores.isZero());
  }
}

TEST_CASE("orientation and inversion") {
  Graph g = bridged_cliques();
  ScoreVector avg = baseline_scores(g, BaselineMetric::AverageDegree);
  Egonet e = egonet_stats(g, 0);
  CHECK(avg.scores[0] == -egonet_quality(e, 9, BaselineMetric::AverageDegree));
  ScoreVector inv = baseline_scores(g, BaselineMetric::Conductance, true);
  CHECK(inv.scores == -baseline_scores(g, BaselineMetric::Conductance).scores);
}

TEST_CASE("egonets against the dense oracle") {
  std::mt19937_64 gen(17);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = oracle::random_graph(gen, 8 + trial % 10, 0.25);
    for (Index n = 0; n < g.num_nodes(); ++n) {
      const Egonet e = egonet_stats(g, n);
      const oracle::DenseEgo d = oracle::dense_egonet(g, n);
      CHECK(static_cast<Index>(e.members.size()) == d.size);
      CHECK(e.internal_edges == d.internal);
      CHECK(e.boundary_edges == d.boundary);
      CHECK(e.leaky_members == d.leaky);
    }
  }
}

TEST_CASE("threads do not change scores") {
  std::mt19937_64 gen(1);
  Graph g = oracle::random_graph(gen, 60, 0.1);
  CHECK(baseline_scores(g, BaselineMetric::Flake, false, 1).scores ==
        baseline_scores(g, BaselineMetric::Flake, false, 4).scores);
}

}  // TEST_SUITE
