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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace graphsac::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kConfig = 2,
  kAllRejected = 3,
  kIo = 4,
  kVerificationFailed = 5,
};

struct SbmSection {
  int communities = 4;
  std::int64_t size = 250;
  double p_in = 0.05;
  double p_out = 0.002;
};

struct DetectorSection {
  /// "graphsac" or a baseline metric name.
  std::string method = "graphsac";
  std::int64_t sample_size = 0;
  std::int64_t draws = 50;
  double threshold = 0.5;
  std::string model = "ppr";
  double teleport = 0.15;
  /// 0 selects the model's default order.
  int order = 0;
  double hk_scale = 5.0;
  unsigned threads = 1;
  bool invert = false;
};

struct InjectorSection {
  std::string kind = "rw-label";
  std::int64_t count = 20;
  int walk_length = 10;
  int repeats = 5;
};

struct SweepSection {
  std::vector<double> sample_fractions{0.01, 0.02, 0.05, 0.1};
  std::vector<double> anomaly_fractions{0.01, 0.024, 0.05, 0.08};
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
  unsigned threads = 0;
};

struct VerifySection {
  std::int64_t sample_size = 2;
  double threshold = 0.6;
  std::int64_t trials = 200;
  std::vector<std::int64_t> draw_counts{1, 5, 25, 125, 625};
};

struct BenchSection {
  int repeat = 3;
};

/// Everything a subcommand needs. Loaded from a JSON file, then overridden by
/// flags; echoed into summary files so a run can be repeated from its output.
struct RunConfig {
  std::string graph;
  std::string labels;
  std::string anomalies;
  std::string scores;
  std::optional<std::int64_t> nodes;
  SbmSection sbm;
  DetectorSection detector;
  InjectorSection injector;
  SweepSection sweep;
  VerifySection verify;
  BenchSection bench;
  std::uint64_t seed = 0;
  std::string out;
};

void to_json(nlohmann::json& j, const RunConfig& c);
/// Keys absent from `j` keep their current values in `c`.
void from_json(const nlohmann::json& j, RunConfig& c);

RunConfig load_config_file(const std::filesystem::path& path);

/// Output directory: the configured one, else $GRAPHSAC_OUT, else
/// ./graphsac_out.
std::filesystem::path output_dir(const RunConfig& config);

int cmd_detect(const RunConfig& config, std::ostream& log);
int cmd_inject(const RunConfig& config, std::ostream& log);
int cmd_eval(const RunConfig& config, std::ostream& log);
int cmd_sweep(const RunConfig& config, std::ostream& log);
int cmd_verify(const RunConfig& config, std::ostream& log);
int cmd_gen_sbm(const RunConfig& config, std::ostream& log);
int cmd_bench(const RunConfig& config, std::ostream& log);

/// Full command line, argv[0] included. Errors are mapped to ExitCode.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace graphsac::cli
