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

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <limits>
#include <random>

#include "graphsac/error.hpp"
#include "graphsac/io.hpp"

using namespace graphsac;

TEST_SUITE("io") {

TEST_CASE("format_double round-trips") {
  std::mt19937_64 gen(0);
  for (int i = 0; i < 1000; ++i) {
    double v;
    std::uint64_t bits = gen();
    std::memcpy(&v, &bits, sizeof v);
    if (!std::isfinite(v)) continue;
    CHECK(std::strtod(io::format_double(v).c_str(), nullptr) == v);
  }
  CHECK(io::format_double(0.1) == "0.1");
  CHECK(io::format_double(2.0) == "2");
}

TEST_CASE("line helpers") {
  CHECK(io::strip_comment("  1 2 # edge\r") == "1 2");
  CHECK(io::strip_comment("# only").empty());
  auto parts = io::split_whitespace(" a\t b  c ");
  REQUIRE(parts.size() == 3);
  CHECK(parts[2] == "c");
}

TEST_CASE("text files, plain and gzip") {
  const auto dir = std::filesystem::temp_directory_path() / "graphsac_io_test";
  std::string big(100000, 'x');
  for (const char* name : {"a/b.txt", "a/b.txt.gz"}) {
    io::write_text_file(dir / name, big);
    CHECK(io::read_text_file(dir / name) == big);
  }
  CHECK(std::filesystem::file_size(dir / "a/b.txt.gz") < 10000);
  CHECK_THROWS_AS(io::read_text_file(dir / "missing.txt"), IoError);
  std::filesystem::remove_all(dir);
}

}  // TEST_SUITE
