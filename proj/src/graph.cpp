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

#include "graphsac/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>

#include "graphsac/io.hpp"

namespace graphsac {

Graph Graph::from_edges(Index num_nodes, std::span<const WeightedEdge> edges,
                        bool keep_self_loops) {
  if (num_nodes < 0) {
    throw PreconditionError("negative node count");
  }
  std::vector<WeightedEdge> directed;
  directed.reserve(2 * edges.size());
  for (const auto& e : edges) {
    if (e.source < 0 || e.target < 0 || e.source >= num_nodes ||
        e.target >= num_nodes) {
      throw BoundsError("edge (" + std::to_string(e.source) + ", " +
                        std::to_string(e.target) + ") outside 0.." +
                        std::to_string(num_nodes - 1));
    }
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw PreconditionError("edge weights must be finite and positive");
    }
    if (e.source == e.target) {
      if (keep_self_loops) directed.push_back(e);
      continue;
    }
    directed.push_back(e);
    directed.push_back({e.target, e.source, e.weight});
  }
  std::sort(directed.begin(), directed.end(),
            [](const WeightedEdge& a, const WeightedEdge& b) {
              return a.source != b.source ? a.source < b.source
                                          : a.target < b.target;
            });

  Graph g;
  std::vector<Eigen::Triplet<double, Index>> triplets;
  triplets.reserve(directed.size());
  for (std::size_t i = 0; i < directed.size();) {
    std::size_t j = i;
    double w = directed[i].weight;
    while (j < directed.size() && directed[j].source == directed[i].source &&
           directed[j].target == directed[i].target) {
      w = std::max(w, directed[j].weight);
      ++j;
    }
    triplets.emplace_back(directed[i].source, directed[i].target, w);
    if (directed[i].source <= directed[i].target) ++g.num_edges_;
    if (w != 1.0) g.weighted_ = true;
    i = j;
  }
  g.adjacency_.resize(num_nodes, num_nodes);
  g.adjacency_.setFromTriplets(triplets.begin(), triplets.end());
  g.adjacency_.makeCompressed();

  g.degrees_ = Eigen::VectorXd::Zero(num_nodes);
  for (Index n = 0; n < num_nodes; ++n) {
    double d = 0.0;
    for (double w : g.weights(n)) d += w;
    g.degrees_[n] = d;
  }
  return g;
}

std::span<const Index> Graph::neighbors(Index n) const {
  const Index* outer = adjacency_.outerIndexPtr();
  return {adjacency_.innerIndexPtr() + outer[n],
          static_cast<std::size_t>(outer[n + 1] - outer[n])};
}

std::span<const double> Graph::weights(Index n) const {
  const Index* outer = adjacency_.outerIndexPtr();
  return {adjacency_.valuePtr() + outer[n],
          static_cast<std::size_t>(outer[n + 1] - outer[n])};
}

bool Graph::has_edge(Index a, Index b) const {
  const auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<WeightedEdge> Graph::edges() const {
  std::vector<WeightedEdge> out;
  out.reserve(static_cast<std::size_t>(num_edges_));
  for (Index n = 0; n < num_nodes(); ++n) {
    const auto nb = neighbors(n);
    const auto w = weights(n);
    for (std::size_t k = 0; k < nb.size(); ++k) {
      if (nb[k] >= n) out.push_back({n, nb[k], w[k]});
    }
  }
  return out;
}

namespace {

template <typename T>
bool parse_number(std::string_view token, T& value) {
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  return ec == std::errc() && ptr == end;
}

// "# nodes N" header emitted by save_graph.
std::optional<Index> parse_nodes_header(std::string_view line) {
  const auto hash = line.find('#');
  if (hash == std::string_view::npos) return std::nullopt;
  const auto tokens = io::split_whitespace(line.substr(hash + 1));
  Index n = 0;
  if (tokens.size() == 2 && tokens[0] == "nodes" && parse_number(tokens[1], n) &&
      n >= 0) {
    return n;
  }
  return std::nullopt;
}

}  // namespace

Graph load_graph(std::istream& in, const GraphLoadOptions& options,
                 IdTable* ids) {
  std::vector<WeightedEdge> edges;
  std::unordered_map<std::int64_t, Index> remap;
  IdTable external;
  std::optional<Index> header_nodes;
  Index max_id = -1;

  auto node_index = [&](std::int64_t raw, std::size_t line_no) -> Index {
    if (options.remap_ids) {
      auto [it, inserted] =
          remap.emplace(raw, static_cast<Index>(external.size()));
      if (inserted) external.push_back(raw);
      return it->second;
    }
    if (raw < 0) {
      throw ParseError("negative node id " + std::to_string(raw), line_no);
    }
    if (options.num_nodes && raw >= *options.num_nodes) {
      throw BoundsError("line " + std::to_string(line_no) + ": node id " +
                        std::to_string(raw) + " >= declared N = " +
                        std::to_string(*options.num_nodes));
    }
    return static_cast<Index>(raw);
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (edges.empty() && !header_nodes) header_nodes = parse_nodes_header(line);
    const auto body = io::strip_comment(line);
    if (body.empty()) continue;
    const auto tokens = io::split_whitespace(body);
    if (tokens.size() != 2 && tokens.size() != 3) {
      throw ParseError("expected 'src dst [weight]', got '" +
                           std::string(body) + "'",
                       line_no);
    }
    std::int64_t src = 0;
    std::int64_t dst = 0;
    if (!parse_number(tokens[0], src) || !parse_number(tokens[1], dst)) {
      throw ParseError("non-integer node id in '" + std::string(body) + "'",
                       line_no);
    }
    double weight = 1.0;
    if (tokens.size() == 3 &&
        (!parse_number(tokens[2], weight) || !std::isfinite(weight) ||
         weight <= 0.0)) {
      throw ParseError("weight must be a positive number, got '" +
                           std::string(tokens[2]) + "'",
                       line_no);
    }
    const Index a = node_index(src, line_no);
    const Index b = node_index(dst, line_no);
    max_id = std::max({max_id, a, b});
    edges.push_back({a, b, weight});
  }

  Index n = max_id + 1;
  if (options.remap_ids) {
    n = static_cast<Index>(external.size());
    if (ids) *ids = std::move(external);
  } else if (options.num_nodes) {
    n = *options.num_nodes;
  } else if (header_nodes) {
    if (*header_nodes < max_id + 1) {
      throw BoundsError("node id " + std::to_string(max_id) +
                        " exceeds '# nodes' header " +
                        std::to_string(*header_nodes));
    }
    n = *header_nodes;
  }
  return Graph::from_edges(n, edges, options.keep_self_loops);
}

Graph load_graph_file(const std::filesystem::path& path,
                      const GraphLoadOptions& options, IdTable* ids) {
  std::istringstream in(io::read_text_file(path));
  return load_graph(in, options, ids);
}

void save_graph(std::ostream& out, const Graph& graph) {
  out << "# nodes " << graph.num_nodes() << '\n';
  for (const auto& e : graph.edges()) {
    out << e.source << ' ' << e.target;
    if (graph.is_weighted()) out << ' ' << io::format_double(e.weight);
    out << '\n';
  }
}

void save_graph_file(const std::filesystem::path& path, const Graph& graph) {
  std::ostringstream out;
  save_graph(out, graph);
  io::write_text_file(path, out.str());
}

NormalizedOperator::NormalizedOperator(const Graph& graph)
    : graph_(&graph), normalized_(graph.adjacency()) {
  Eigen::VectorXd inv_sqrt(graph.num_nodes());
  for (Index n = 0; n < graph.num_nodes(); ++n) {
    const double d = graph.degrees()[n];
    inv_sqrt[n] = d > 0.0 ? 1.0 / std::sqrt(d) : 0.0;
  }
  for (Index row = 0; row < normalized_.outerSize(); ++row) {
    for (Graph::Adjacency::InnerIterator it(normalized_, row); it; ++it) {
      it.valueRef() *= inv_sqrt[row] * inv_sqrt[it.col()];
    }
  }
}

}  // namespace graphsac
