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

#include "graphsac/labels.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "graphsac/io.hpp"

namespace graphsac {

LabelMatrix LabelMatrix::from_single(std::span<const int> y, int num_classes) {
  std::vector<std::vector<int>> sets(y.size());
  for (std::size_t n = 0; n < y.size(); ++n) sets[n] = {y[n]};
  return from_sets(sets, num_classes);
}

LabelMatrix LabelMatrix::from_sets(const std::vector<std::vector<int>>& sets,
                                   int num_classes) {
  LabelMatrix m;
  int max_class = -1;
  m.offsets_.reserve(sets.size() + 1);
  m.offsets_.push_back(0);
  for (std::size_t n = 0; n < sets.size(); ++n) {
    std::vector<int> row = sets[n];
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    if (row.empty()) {
      throw PreconditionError("node " + std::to_string(n) + " has no label");
    }
    if (row.front() < 0) {
      throw PreconditionError("negative class id at node " + std::to_string(n));
    }
    if (row.size() > 1) m.single_label_ = false;
    max_class = std::max(max_class, row.back());
    m.classes_.insert(m.classes_.end(), row.begin(), row.end());
    m.offsets_.push_back(static_cast<Index>(m.classes_.size()));
  }
  if (num_classes == 0) {
    num_classes = max_class + 1;
  } else if (max_class >= num_classes) {
    throw BoundsError("class id " + std::to_string(max_class) +
                      " >= declared C = " + std::to_string(num_classes));
  }
  m.num_classes_ = num_classes;
  return m;
}

bool LabelMatrix::contains(Index n, int c) const {
  const auto row = labels(n);
  return std::binary_search(row.begin(), row.end(), c);
}

std::vector<std::vector<int>> LabelMatrix::to_sets() const {
  std::vector<std::vector<int>> sets(static_cast<std::size_t>(num_nodes()));
  for (Index n = 0; n < num_nodes(); ++n) {
    const auto row = labels(n);
    sets[n].assign(row.begin(), row.end());
  }
  return sets;
}

std::vector<int> LabelMatrix::to_single() const {
  if (!single_label_) {
    throw PreconditionError("operation requires single-label input");
  }
  return {classes_.begin(), classes_.end()};
}

Eigen::MatrixXd LabelMatrix::dense() const {
  Eigen::MatrixXd y = Eigen::MatrixXd::Zero(num_nodes(), num_classes_);
  for (Index n = 0; n < num_nodes(); ++n) {
    for (int c : labels(n)) y(n, c) = 1.0;
  }
  return y;
}

Eigen::MatrixXd LabelMatrix::seed_rows(std::span<const Index> seeds) const {
  Eigen::MatrixXd y = Eigen::MatrixXd::Zero(num_nodes(), num_classes_);
  for (Index n : seeds) {
    for (int c : labels(n)) y(n, c) = 1.0;
  }
  return y;
}

namespace {

template <typename T>
bool parse_int(std::string_view token, T& value) {
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  return ec == std::errc() && ptr == end;
}

}  // namespace

LabelMatrix load_labels(std::istream& in, Index num_nodes) {
  std::vector<std::vector<int>> sets(static_cast<std::size_t>(num_nodes));
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = io::strip_comment(line);
    if (body.empty()) continue;
    const auto tokens = io::split_whitespace(body);
    if (tokens.size() != 2) {
      throw ParseError("expected 'node<TAB>label[,label...]', got '" +
                           std::string(body) + "'",
                       line_no);
    }
    std::int64_t node = 0;
    if (!parse_int(tokens[0], node) || node < 0) {
      throw ParseError("bad node id '" + std::string(tokens[0]) + "'", line_no);
    }
    if (node >= num_nodes) {
      throw BoundsError("line " + std::to_string(line_no) + ": node " +
                        std::to_string(node) + " >= N = " +
                        std::to_string(num_nodes));
    }
    std::string_view rest = tokens[1];
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const auto item = rest.substr(0, comma);
      int label = 0;
      if (!parse_int(item, label)) {
        throw ParseError("bad label '" + std::string(item) + "'", line_no);
      }
      if (label < 0) {
        throw ParseError("negative label " + std::to_string(label), line_no);
      }
      sets[static_cast<std::size_t>(node)].push_back(label);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
      if (rest.empty()) throw ParseError("trailing comma", line_no);
    }
  }
  std::vector<std::size_t> missing;
  for (std::size_t n = 0; n < sets.size(); ++n) {
    if (sets[n].empty()) missing.push_back(n);
  }
  if (!missing.empty()) {
    throw MissingNodesError("incomplete labels", std::move(missing));
  }
  return LabelMatrix::from_sets(sets);
}

LabelMatrix load_labels_file(const std::filesystem::path& path,
                             Index num_nodes) {
  std::istringstream in(io::read_text_file(path));
  return load_labels(in, num_nodes);
}

void save_labels(std::ostream& out, const LabelMatrix& labels) {
  for (Index n = 0; n < labels.num_nodes(); ++n) {
    out << n << '\t';
    const auto row = labels.labels(n);
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out << ',';
      out << row[k];
    }
    out << '\n';
  }
}

void save_labels_file(const std::filesystem::path& path,
                      const LabelMatrix& labels) {
  std::ostringstream out;
  save_labels(out, labels);
  io::write_text_file(path, out.str());
}

}  // namespace graphsac
