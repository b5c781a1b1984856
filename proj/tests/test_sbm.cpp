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

#include "graphsac/sbm.hpp"

using namespace graphsac;

TEST_SUITE("sbm") {

TEST_CASE("no cross edges without p_out") {
  SbmGraph g = generate_sbm(SbmParams::uniform(2, 30, 0.3, 0.0), 1);
  for (const auto& e : g.graph.edges()) {
    CHECK(g.community[e.source] == g.community[e.target]);
  }
  for (Index n = 0; n < 60; ++n) CHECK(g.labels.primary(n) == (n < 30 ? 0 : 1));
}

TEST_CASE("p_in = 1 gives cliques") {
  SbmGraph g = generate_sbm(SbmParams{{3, 4}, 1.0, 0.0, {}}, 9);
  CHECK(g.graph.num_edges() == 3 + 6);
  CHECK(g.graph.has_edge(0, 2));
  CHECK(g.graph.has_edge(3, 6));
}

TEST_CASE("edge density near the parameters") {
  SbmGraph g = generate_sbm(SbmParams::uniform(4, 250, 0.05, 0.002), 0);
  double in = 0, out = 0;
  for (const auto& e : g.graph.edges()) (g.community[e.source] == g.community[e.target] ? in : out) += 1;
  const double in_pairs = 4 * 250.0 * 249 / 2;
  const double out_pairs = 1000.0 * 999 / 2 - in_pairs;
  CHECK(in / in_pairs == doctest::Approx(0.05).epsilon(0.1));
  CHECK(out / out_pairs == doctest::Approx(0.002).epsilon(0.2));
}

TEST_CASE("deterministic per seed, custom labels, validation") {
  auto a = generate_sbm(SbmParams::uniform(3, 20, 0.2, 0.01), 4);
  auto b = generate_sbm(SbmParams::uniform(3, 20, 0.2, 0.01), 4);
  auto c = generate_sbm(SbmParams::uniform(3, 20, 0.2, 0.01), 5);
  CHECK(Eigen::MatrixXd(a.graph.adjacency()) == Eigen::MatrixXd(b.graph.adjacency()));
  CHECK(Eigen::MatrixXd(a.graph.adjacency()) != Eigen::MatrixXd(c.graph.adjacency()));

  auto l = generate_sbm(SbmParams{{2, 2}, 0.5, 0.1, {1, 1}}, 0);
  CHECK(l.labels.to_single() == std::vector<int>{1, 1, 1, 1});

  CHECK_THROWS_AS(generate_sbm(SbmParams{{}, 0.5, 0.1, {}}, 0), ConfigError);
  CHECK_THROWS_AS(generate_sbm(SbmParams{{3, 0}, 0.5, 0.1, {}}, 0), ConfigError);
  CHECK_THROWS_AS(generate_sbm(SbmParams{{3}, 0.1, 0.5, {}}, 0), ConfigError);
  CHECK_THROWS_AS(generate_sbm(SbmParams{{3, 3}, 0.5, 0.1, {0}}, 0), ConfigError);
}

}  // TEST_SUITE
