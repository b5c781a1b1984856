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

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace graphsac::io {

/// Reads a whole file; `.gz` files are inflated.
std::string read_text_file(const std::filesystem::path& path);

/// Writes a whole file, creating parent directories; `.gz` files are deflated.
void write_text_file(const std::filesystem::path& path, std::string_view text);

/// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

/// Splits on runs of spaces and tabs.
std::vector<std::string_view> split_whitespace(std::string_view line);

/// Removes a `#` comment and surrounding whitespace (including a trailing CR).
std::string_view strip_comment(std::string_view line);

}  // namespace graphsac::io
