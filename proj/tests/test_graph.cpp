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

#include <filesystem>
#include <random>
#include <sstream>

#include "graphsac/graph.hpp"
#include "graphsac/io.hpp"
#include "oracles.hpp"

using namespace graphsac;

namespace {

Graph parse(const std::string& text, GraphLoadOptions opts = {}) {
  std::istringstream in(text);
  return load_graph(in, opts);
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("path, duplicate and star inputs") {
  Graph path = parse("0 1\n1 2");
  CHECK(path.num_nodes() == 3);
  CHECK(path.num_edges() == 2);
  CHECK(path.degrees() == Eigen::Vector3d(1, 2, 1));

  Graph dup = parse("0 1\n1 0");
  CHECK(dup.num_nodes() == 2);
  CHECK(dup.num_edges() == 1);

  Graph star = parse("0 1\n0 2\n0 3\n0 4");
  Eigen::VectorXd expect(5);
  expect << 4, 1, 1, 1, 1;
  CHECK(star.degrees() == expect);
}

TEST_CASE("conflicting weights keep the maximum") {
  Graph g = parse("0 1 0.5\n1 0 2.0\n1 2\n");
  CHECK(g.is_weighted());
  CHECK(g.adjacency().coeff(0, 1) == 2.0);
  CHECK(g.adjacency().coeff(1, 0) == 2.0);
  CHECK(g.num_edges() == 2);
}

TEST_CASE("self-loops") {
  Graph dropped = parse("0 0\n0 1\n");
  CHECK(dropped.num_edges() == 1);
  CHECK_FALSE(dropped.has_edge(0, 0));

  GraphLoadOptions keep;
  keep.keep_self_loops = true;
  Graph kept = parse("0 0\n0 1\n", keep);
  CHECK(kept.num_edges() == 2);
  CHECK(kept.has_edge(0, 0));
  CHECK(kept.degrees()[0] == 2.0);
}

TEST_CASE("parse errors carry the line") {
  try {
    parse("0 1\n# fine\n1 x\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse("0 1 -2\n"), ParseError);
  CHECK_THROWS_AS(parse("0\n"), ParseError);
  CHECK_THROWS_AS(parse("-1 2\n"), ParseError);

  GraphLoadOptions declared;
  declared.num_nodes = 3;
  CHECK_THROWS_AS(parse("0 3\n", declared), BoundsError);
}

TEST_CASE("nodes header sets N and isolated tail nodes survive") {
  Graph g = parse("# nodes 6\n0 1\n");
  CHECK(g.num_nodes() == 6);
  CHECK(g.degrees()[5] == 0.0);
}

TEST_CASE("id remapping") {
  GraphLoadOptions opts;
  opts.remap_ids = true;
  IdTable ids;
  std::istringstream in("100 7\n7 42\n");
  Graph g = load_graph(in, opts, &ids);
  CHECK(g.num_nodes() == 3);
  CHECK(ids == IdTable{100, 7, 42});
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
}

TEST_CASE("save and load round-trip, plain and gzip") {
  std::mt19937_64 gen(11);
  std::vector<WeightedEdge> edges;
  std::uniform_real_distribution<double> w(0.1, 3.0);
  for (Index i = 0; i < 12; ++i) edges.push_back({i, (i * 5 + 3) % 15, w(gen)});
  Graph g = Graph::from_edges(15, edges);

  const auto dir = std::filesystem::temp_directory_path() / "graphsac_graph_rt";
  std::filesystem::create_directories(dir);
  for (const char* name : {"g.txt", "g.txt.gz"}) {
    save_graph_file(dir / name, g);
    Graph back = load_graph_file(dir / name);
    CHECK(back.num_nodes() == g.num_nodes());
    CHECK(back.num_edges() == g.num_edges());
    CHECK(Eigen::MatrixXd(back.adjacency()) == Eigen::MatrixXd(g.adjacency()));
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("normalized operator small cases") {
  Graph edge = parse("0 1");
  NormalizedOperator op(edge);
  Eigen::MatrixXd out = normalized_apply(op, Eigen::MatrixXd::Identity(2, 2));
  CHECK(out == (Eigen::MatrixXd(2, 2) << 0, 1, 1, 0).finished());
  CHECK(normalized_apply(op, Eigen::MatrixXd::Zero(2, 3)).isZero());

  Graph tri = parse("0 1\n1 2\n2 0");
  NormalizedOperator top(tri);
  Eigen::VectorXd ones = Eigen::VectorXd::Ones(3);
  CHECK((normalized_apply(top, ones) - ones).cwiseAbs().maxCoeff() <= 1e-15);

  CHECK_THROWS_AS(normalized_apply(top, Eigen::MatrixXd::Ones(2, 1)), DimensionError);
}

TEST_CASE("normalized operator against the dense oracle") {
  std::mt19937_64 gen(3);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = oracle::random_graph(gen, 5 + trial, 0.3);
    NormalizedOperator op(g);
    const Eigen::MatrixXd w = oracle::dense_normalized(g);
    Eigen::MatrixXd v = Eigen::MatrixXd::Random(g.num_nodes(), 3);
    Eigen::MatrixXd twice = normalized_apply(op, normalized_apply(op, v));
    CHECK((twice - w * w * v).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("float operands") {
  Graph g = parse("0 1\n1 2\n2 3");
  NormalizedOperator op(g);
  Eigen::MatrixXf v = Eigen::MatrixXf::Ones(4, 2);
  Eigen::MatrixXf out = normalized_apply(op, v);
  Eigen::MatrixXd ref = oracle::dense_normalized(g) * Eigen::MatrixXd::Ones(4, 2);
  CHECK((out.cast<double>() - ref).cwiseAbs().maxCoeff() <= 1e-6);
}

}  // TEST_SUITE
