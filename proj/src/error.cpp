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

#include "graphsac/error.hpp"

#include <algorithm>

namespace graphsac {

MissingNodesError::MissingNodesError(const std::string& what,
                                     std::vector<std::size_t> missing)
    : Error([&] {
        std::string msg = what + ": missing node ids";
        const std::size_t shown = std::min<std::size_t>(missing.size(), 20);
        for (std::size_t i = 0; i < shown; ++i) {
          msg += (i ? ", " : " ") + std::to_string(missing[i]);
        }
        if (shown < missing.size()) {
          msg += " ... (" + std::to_string(missing.size()) + " total)";
        }
        return msg;
      }()),
      missing_(std::move(missing)) {}

}  // namespace graphsac
