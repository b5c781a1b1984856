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

#include "graphsac/io.hpp"

#include <zlib.h>

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "graphsac/error.hpp"

namespace graphsac::io {
namespace {

bool is_gzip(const std::filesystem::path& path) {
  return path.extension() == ".gz";
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  if (is_gzip(path)) {
    gzFile file = gzopen(path.c_str(), "rb");
    if (file == nullptr) {
      throw IoError("cannot open " + path.string());
    }
    std::string text;
    std::array<char, 1 << 16> buffer;
    int got = 0;
    while ((got = gzread(file, buffer.data(),
                         static_cast<unsigned>(buffer.size()))) > 0) {
      text.append(buffer.data(), static_cast<std::size_t>(got));
    }
    int status = Z_OK;
    gzerror(file, &status);
    gzclose(file);
    if (got < 0 || (status != Z_OK && status != Z_STREAM_END)) {
      throw IoError("corrupt gzip stream in " + path.string());
    }
    return text;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  if (is_gzip(path)) {
    gzFile file = gzopen(path.c_str(), "wb");
    if (file == nullptr) {
      throw IoError("cannot create " + path.string());
    }
    const int wrote = text.empty()
                          ? 0
                          : gzwrite(file, text.data(),
                                    static_cast<unsigned>(text.size()));
    gzclose(file);
    if (wrote != static_cast<int>(text.size())) {
      throw IoError("short write to " + path.string());
    }
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot create " + path.string());
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) {
    throw IoError("short write to " + path.string());
  }
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 64> buf;
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), end);
}

std::vector<std::string_view> split_whitespace(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string_view strip_comment(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) {
    line = line.substr(0, hash);
  }
  constexpr std::string_view kSpace = " \t\r\n";
  const auto first = line.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  const auto last = line.find_last_not_of(kSpace);
  return line.substr(first, last - first + 1);
}

}  // namespace graphsac::io
