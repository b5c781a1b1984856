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

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include <CLI11.hpp>

#include "graphsac/baselines.hpp"
#include "graphsac/consensus.hpp"
#include "graphsac/error.hpp"
#include "graphsac/inject.hpp"
#include "graphsac/io.hpp"
#include "graphsac/metrics.hpp"
#include "graphsac/sbm.hpp"
#include "graphsac/sweep.hpp"
#include "graphsac/theory.hpp"

#ifndef GRAPHSAC_DATA_DIR
#define GRAPHSAC_DATA_DIR "data"
#endif

namespace graphsac::cli {
namespace fs = std::filesystem;
using nlohmann::json;

// ---------------------------------------------------------------------------
// Config <-> JSON

void to_json(json& j, const RunConfig& c) {
  j = json{
      {"graph", c.graph},
      {"labels", c.labels},
      {"anomalies", c.anomalies},
      {"scores", c.scores},
      {"sbm",
       {{"communities", c.sbm.communities},
        {"size", c.sbm.size},
        {"p_in", c.sbm.p_in},
        {"p_out", c.sbm.p_out}}},
      {"detector",
       {{"method", c.detector.method},
        {"sample_size", c.detector.sample_size},
        {"draws", c.detector.draws},
        {"threshold", c.detector.threshold},
        {"model", c.detector.model},
        {"teleport", c.detector.teleport},
        {"order", c.detector.order},
        {"hk_scale", c.detector.hk_scale},
        {"threads", c.detector.threads},
        {"invert", c.detector.invert}}},
      {"injector",
       {{"kind", c.injector.kind},
        {"count", c.injector.count},
        {"walk_length", c.injector.walk_length},
        {"repeats", c.injector.repeats}}},
      {"sweep",
       {{"sample_fractions", c.sweep.sample_fractions},
        {"anomaly_fractions", c.sweep.anomaly_fractions},
        {"seeds", c.sweep.seeds},
        {"threads", c.sweep.threads}}},
      {"verify",
       {{"sample_size", c.verify.sample_size},
        {"threshold", c.verify.threshold},
        {"trials", c.verify.trials},
        {"draw_counts", c.verify.draw_counts}}},
      {"bench", {{"repeat", c.bench.repeat}}},
      {"seed", c.seed},
      {"out", c.out}};
  if (c.nodes) j["nodes"] = *c.nodes;
}

namespace {

template <typename T>
void take(const json& j, const char* key, T& value) {
  if (j.contains(key) && !j.at(key).is_null()) value = j.at(key).get<T>();
}

}  // namespace

void from_json(const json& j, RunConfig& c) {
  take(j, "graph", c.graph);
  take(j, "labels", c.labels);
  take(j, "anomalies", c.anomalies);
  take(j, "scores", c.scores);
  if (j.contains("nodes") && !j.at("nodes").is_null()) {
    c.nodes = j.at("nodes").get<std::int64_t>();
  }
  if (j.contains("sbm")) {
    const auto& s = j.at("sbm");
    take(s, "communities", c.sbm.communities);
    take(s, "size", c.sbm.size);
    take(s, "p_in", c.sbm.p_in);
    take(s, "p_out", c.sbm.p_out);
  }
  if (j.contains("detector")) {
    const auto& d = j.at("detector");
    take(d, "method", c.detector.method);
    take(d, "sample_size", c.detector.sample_size);
    take(d, "draws", c.detector.draws);
    take(d, "threshold", c.detector.threshold);
    take(d, "model", c.detector.model);
    take(d, "teleport", c.detector.teleport);
    take(d, "order", c.detector.order);
    take(d, "hk_scale", c.detector.hk_scale);
    take(d, "threads", c.detector.threads);
    take(d, "invert", c.detector.invert);
  }
  if (j.contains("injector")) {
    const auto& i = j.at("injector");
    take(i, "kind", c.injector.kind);
    take(i, "count", c.injector.count);
    take(i, "walk_length", c.injector.walk_length);
    take(i, "repeats", c.injector.repeats);
  }
  if (j.contains("sweep")) {
    const auto& s = j.at("sweep");
    take(s, "sample_fractions", c.sweep.sample_fractions);
    take(s, "anomaly_fractions", c.sweep.anomaly_fractions);
    take(s, "seeds", c.sweep.seeds);
    take(s, "threads", c.sweep.threads);
  }
  if (j.contains("verify")) {
    const auto& v = j.at("verify");
    take(v, "sample_size", c.verify.sample_size);
    take(v, "threshold", c.verify.threshold);
    take(v, "trials", c.verify.trials);
    take(v, "draw_counts", c.verify.draw_counts);
  }
  if (j.contains("bench")) take(j.at("bench"), "repeat", c.bench.repeat);
  take(j, "seed", c.seed);
  take(j, "out", c.out);
}

RunConfig load_config_file(const fs::path& path) {
  std::string text;
  try {
    text = io::read_text_file(path);
  } catch (const Error& e) {
    throw ConfigError("cannot read config " + path.string() + ": " + e.what());
  }
  RunConfig c;
  try {
    from_json(json::parse(text), c);
  } catch (const json::exception& e) {
    throw ConfigError("bad config " + path.string() + ": " + e.what());
  }
  return c;
}

fs::path output_dir(const RunConfig& config) {
  if (!config.out.empty()) return config.out;
  if (const char* env = std::getenv("GRAPHSAC_OUT"); env && *env) return env;
  return "graphsac_out";
}

// ---------------------------------------------------------------------------
// Shared plumbing

namespace {

struct Dataset {
  Graph graph;
  LabelMatrix labels;
  std::string source;
};

Dataset load_dataset(const RunConfig& c) {
  Dataset d;
  if (c.graph.empty()) {
    if (!c.labels.empty()) throw ConfigError("--labels given without --graph");
    const auto sbm = generate_sbm(
        SbmParams::uniform(c.sbm.communities, c.sbm.size, c.sbm.p_in, c.sbm.p_out),
        c.seed);
    d.graph = sbm.graph;
    d.labels = sbm.labels;
    d.source = "sbm";
    return d;
  }
  if (c.labels.empty()) throw ConfigError("--graph needs --labels");
  GraphLoadOptions opts;
  if (c.nodes) opts.num_nodes = *c.nodes;
  d.graph = load_graph_file(c.graph, opts);
  d.labels = load_labels_file(c.labels, d.graph.num_nodes());
  d.source = c.graph;
  return d;
}

std::vector<bool> load_mask(const std::string& path, Index n) {
  std::vector<bool> mask(static_cast<std::size_t>(n), false);
  for (Index v : load_node_list_file(path, n)) mask[v] = true;
  return mask;
}

DiffusionModel make_model(const DetectorSection& d) {
  DiffusionModel m;
  if (d.model == "ppr") {
    m = DiffusionModel::ppr(d.teleport);
  } else if (d.model == "hk") {
    m = DiffusionModel::heat_kernel(d.hk_scale);
  } else {
    throw ConfigError("unknown model '" + d.model + "' (expected ppr or hk)");
  }
  if (d.order > 0) m.order = d.order;
  m.validate();
  return m;
}

GraphSacConfig make_detector(const RunConfig& c) {
  GraphSacConfig g;
  g.sample_size = c.detector.sample_size;
  g.num_draws = c.detector.draws;
  g.threshold = c.detector.threshold;
  g.master_seed = c.seed;
  g.model = make_model(c.detector);
  g.threads = c.detector.threads;
  return g;
}

std::string scores_csv(const Eigen::VectorXd& scores) {
  std::string out = "node,score\n";
  for (Index n = 0; n < scores.size(); ++n) {
    out += std::to_string(n) + "," + io::format_double(scores[n]) + "\n";
  }
  return out;
}

std::string draws_csv(const std::vector<DrawRecord>& draws) {
  std::string out = "draw,seeds,consensus_ratio,accepted,contamination\n";
  for (const auto& d : draws) {
    out += std::to_string(d.index) + ",";
    for (std::size_t i = 0; i < d.seeds.size(); ++i) {
      if (i) out += " ";
      out += std::to_string(d.seeds[i]);
    }
    out += "," + io::format_double(d.consensus_ratio) + "," +
           (d.accepted ? "1" : "0") + ",";
    if (d.contamination) out += std::to_string(*d.contamination);
    out += "\n";
  }
  return out;
}

json number(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

void write_json(const fs::path& path, const json& j) {
  io::write_text_file(path, j.dump(2) + "\n");
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

// Accepts the CSV written by detect (header `node,score`) as well as
// whitespace-separated `node score` lines.
Eigen::VectorXd read_scores(const std::string& path, std::optional<std::int64_t> nodes) {
  std::string text = io::read_text_file(path);
  std::istringstream lines(text);
  std::string normalized;
  std::string line;
  Index max_id = -1;
  while (std::getline(lines, line)) {
    std::replace(line.begin(), line.end(), ',', ' ');
    const auto body = io::strip_comment(line);
    const auto tokens = io::split_whitespace(body);
    if (tokens.size() == 2 && tokens[0] == "node") continue;
    if (!tokens.empty()) {
      try {
        max_id = std::max<Index>(max_id, std::stoll(std::string(tokens[0])));
      } catch (const std::exception&) {
        // Reported with a line number by the loader.
      }
    }
    normalized += line + "\n";
  }
  std::istringstream in(normalized);
  return load_external_scores(in, nodes ? *nodes : max_id + 1);
}

}  // namespace

// ---------------------------------------------------------------------------
// Subcommands

int cmd_detect(const RunConfig& config, std::ostream& log) {
  const Dataset data = load_dataset(config);
  const Index n = data.graph.num_nodes();
  const fs::path out = output_dir(config);
  std::vector<bool> truth;
  if (!config.anomalies.empty()) truth = load_mask(config.anomalies, n);

  RunConfig echo = config;
  json summary;
  summary["command"] = "detect";
  summary["num_nodes"] = n;
  summary["num_edges"] = data.graph.num_edges();
  summary["num_classes"] = data.labels.num_classes();

  const auto start = std::chrono::steady_clock::now();
  ScoreVector scores;
  if (config.detector.method == "graphsac") {
    GraphSacConfig det = make_detector(config);
    det.validate(n, data.labels.num_classes());
    echo.detector.sample_size = det.resolved_sample_size(n, data.labels.num_classes());
    RunOptions opts;
    opts.anomalous = truth;
    const GraphSacResult res = run_graphsac(data.graph, data.labels, det, opts);
    scores = res.scores;
    summary["accepted_draws"] = res.accepted;
    summary["total_draws"] = det.num_draws;
    io::write_text_file(out / "draws.csv", draws_csv(res.draws));
  } else {
    const auto metric = parse_baseline_metric(config.detector.method);
    if (!metric) {
      throw ConfigError("unknown detector '" + config.detector.method +
                        "' (expected graphsac, avgdegree, cutratio, flake or "
                        "conductance)");
    }
    scores = baseline_scores(data.graph, *metric, config.detector.invert,
                             config.detector.threads);
    scores.anomalous = truth;
  }
  summary["wall_seconds"] = seconds_since(start);
  if (scores.has_truth()) summary["auc"] = number(auc(scores.scores, scores.anomalous));
  summary["config"] = echo;

  io::write_text_file(out / "scores.csv", scores_csv(scores.scores));
  write_json(out / "summary.json", summary);
  log << "detect: " << n << " nodes scored -> " << (out / "scores.csv").string()
      << "\n";
  return kOk;
}

int cmd_inject(const RunConfig& config, std::ostream& log) {
  const Dataset data = load_dataset(config);
  InjectorConfig ic;
  ic.kind = parse_injector_kind(config.injector.kind);
  ic.walk_length = config.injector.walk_length;
  ic.repeats = config.injector.repeats;
  if (config.injector.count < 0) throw ConfigError("anomaly count must be >= 0");
  Rng rng(config.seed);
  const InjectionResult res =
      inject(data.graph, data.labels, ic, config.injector.count, rng);

  const fs::path out = output_dir(config);
  save_graph_file(out / "edges.txt", res.graph);
  save_labels_file(out / "labels.txt", res.labels);
  save_node_list_file(out / "anomalies.txt", res.anomalies);
  json meta{{"command", "inject"},
            {"kind", res.meta.kind},
            {"walk_length", res.meta.walk_length},
            {"repeats", res.meta.repeats},
            {"anomalies", res.anomalies.size()},
            {"labels_changed", res.meta.labels_changed},
            {"edges_added", res.meta.edges_added},
            {"edges_removed", res.meta.edges_removed},
            {"degenerate", res.meta.degenerate},
            {"assigned_label", res.meta.assigned_label},
            {"note", res.meta.note},
            {"config", config}};
  write_json(out / "injection.json", meta);
  log << "inject: " << res.anomalies.size() << " " << res.meta.kind
      << " anomalies -> " << out.string() << "\n";
  return kOk;
}

int cmd_eval(const RunConfig& config, std::ostream& log) {
  if (config.scores.empty()) throw ConfigError("eval needs --scores");
  if (config.anomalies.empty()) throw ConfigError("eval needs --anomalies");
  ScoreVector sv;
  sv.scores = read_scores(config.scores, config.nodes);
  sv.anomalous = load_mask(config.anomalies, sv.scores.size());
  const EvalReport r = evaluate(sv);

  const fs::path out = output_dir(config);
  std::string roc = "fpr,tpr\n";
  for (const auto& p : r.roc) {
    roc += io::format_double(p.fpr) + "," + io::format_double(p.tpr) + "\n";
  }
  io::write_text_file(out / "roc.csv", roc);
  write_json(out / "report.json",
             json{{"command", "eval"},
                  {"method", config.detector.method},
                  {"auc", r.auc},
                  {"roc_area", trapezoid_area(r.roc)},
                  {"precision_at_k", r.precision_at_k},
                  {"positives", r.positives},
                  {"negatives", r.negatives},
                  {"scores", config.scores},
                  {"anomalies", config.anomalies}});
  log << "eval: AUC " << io::format_double(r.auc) << "\n";
  return kOk;
}

int cmd_sweep(const RunConfig& config, std::ostream& log) {
  const Dataset data = load_dataset(config);
  SweepSpec spec;
  spec.sample_fractions = config.sweep.sample_fractions;
  spec.anomaly_fractions = config.sweep.anomaly_fractions;
  spec.seeds = config.sweep.seeds;
  spec.threads = config.sweep.threads;
  spec.injector.kind = parse_injector_kind(config.injector.kind);
  spec.injector.walk_length = config.injector.walk_length;
  spec.injector.repeats = config.injector.repeats;
  spec.detector = make_detector(config);
  const SweepResult res = sweep_grid(data.graph, data.labels, spec);

  const std::string header =
      "anomaly_fraction,sample_fraction,K,S,mean,sd,runs,failed\n";
  std::string auc_csv = header, pc_csv = header, km_csv = header;
  std::string runs_csv =
      "anomaly_fraction,sample_fraction,K,S,seed,auc,rejected_fraction,"
      "max_accepted_contamination,accepted,wall_seconds,error\n";
  auto row = [](const SweepCell& cell, const std::vector<double>& v) {
    const Summary s = summarize(v);
    const auto failed = static_cast<Index>(v.size()) - s.count;
    return io::format_double(cell.anomaly_fraction) + "," +
           io::format_double(cell.sample_fraction) + "," +
           std::to_string(cell.num_anomalies) + "," +
           std::to_string(cell.sample_size) + "," + io::format_double(s.mean) +
           "," + io::format_double(s.sd) + "," + std::to_string(v.size()) + "," +
           std::to_string(failed) + "\n";
  };
  for (const auto& cell : res.cells) {
    std::vector<double> a, p, k;
    for (const auto& r : cell.runs) {
      a.push_back(r.auc);
      p.push_back(r.rejected_fraction);
      k.push_back(r.max_accepted_contamination);
      std::string err = r.error;
      std::replace(err.begin(), err.end(), '"', '\'');
      runs_csv += io::format_double(cell.anomaly_fraction) + "," +
                  io::format_double(cell.sample_fraction) + "," +
                  std::to_string(cell.num_anomalies) + "," +
                  std::to_string(cell.sample_size) + "," + std::to_string(r.seed) +
                  "," + io::format_double(r.auc) + "," +
                  io::format_double(r.rejected_fraction) + "," +
                  io::format_double(r.max_accepted_contamination) + "," +
                  std::to_string(r.accepted) + "," +
                  io::format_double(r.wall_seconds) + ",\"" + err + "\"\n";
    }
    auc_csv += row(cell, a);
    pc_csv += row(cell, p);
    km_csv += row(cell, k);
  }
  const fs::path out = output_dir(config);
  io::write_text_file(out / "grid_auc.csv", auc_csv);
  io::write_text_file(out / "grid_pc.csv", pc_csv);
  io::write_text_file(out / "grid_km.csv", km_csv);
  io::write_text_file(out / "sweep_runs.csv", runs_csv);
  write_json(out / "sweep.json",
             json{{"command", "sweep"},
                  {"rows", res.rows},
                  {"cols", res.cols},
                  {"num_nodes", data.graph.num_nodes()},
                  {"config", config}});
  log << "sweep: " << res.cells.size() << " cells x " << spec.seeds.size()
      << " seeds -> " << out.string() << "\n";
  return kOk;
}

int cmd_verify(const RunConfig& config, std::ostream& log) {
  RunConfig c = config;
  if (c.graph.empty()) {
    const fs::path dir = fs::path(GRAPHSAC_DATA_DIR) / "fixture8";
    c.graph = (dir / "edges.txt").string();
    c.labels = (dir / "labels.txt").string();
    if (c.anomalies.empty()) c.anomalies = (dir / "anomalies.txt").string();
  }
  if (c.anomalies.empty()) throw ConfigError("verify needs --anomalies");
  const Dataset data = load_dataset(c);
  const Index n = data.graph.num_nodes();
  const auto anomalies = load_node_list_file(c.anomalies, n);
  const DiffusionModel model = make_model(c.detector);
  const NormalizedOperator op(data.graph);
  const auto ensemble = SubsetEnsemble::enumerate(n, c.verify.sample_size, anomalies);
  const unsigned threads = c.detector.threads;

  std::vector<TheoremReport> reports;
  const double dirty = static_cast<double>(ensemble.contaminated_count());
  std::vector<double> fs_values{0.0};
  if (dirty > 0) fs_values.push_back(0.1 / dirty);
  fs_values.push_back(1.0 / static_cast<double>(ensemble.size()));
  for (double f : fs_values) {
    const auto filter = FilterModel::two_level(ensemble, f);
    const auto means =
        exact_ensemble_means(model, op, data.labels, ensemble, filter, threads);
    auto r = verify_theorem1(ensemble, filter, means);
    r.name += " f=" + io::format_double(f);
    reports.push_back(std::move(r));
  }
  if (data.labels.is_single_label() && !anomalies.empty() &&
      n - static_cast<Index>(anomalies.size()) >= c.verify.sample_size) {
    for (auto& r : verify_corollary1(model, op, data.labels, ensemble, 1e-10, threads)) {
      reports.push_back(std::move(r));
    }
  }
  const auto verdicts = consensus_verdicts(model, op, data.labels, ensemble,
                                           c.verify.threshold, threads);
  if (std::find(verdicts.begin(), verdicts.end(), true) != verdicts.end()) {
    Theorem2Options t2;
    t2.trials = c.verify.trials;
    t2.seed = c.seed;
    t2.draw_counts.assign(c.verify.draw_counts.begin(), c.verify.draw_counts.end());
    for (auto& r : verify_theorem2(model, op, data.labels, ensemble, verdicts, t2)) {
      reports.push_back(std::move(r));
    }
  }
  for (auto& r : verify_theorem3(model, op, data.labels, ensemble, verdicts, 1e-10,
                                 threads)) {
    reports.push_back(std::move(r));
  }

  const fs::path out = output_dir(c);
  io::write_text_file(out / "theorem_reports.json", reports_to_json(reports));
  int failed = 0;
  for (const auto& r : reports) {
    const char* status = r.skipped ? "SKIP" : (r.pass ? "PASS" : "FAIL");
    log << status << "  " << r.name << "  lhs=" << io::format_double(r.lhs)
        << " rhs=" << io::format_double(r.rhs) << " gap=" << io::format_double(r.gap)
        << "\n";
    if (!r.note.empty()) log << "      " << r.note << "\n";
    if (!r.skipped && !r.pass) ++failed;
  }
  log << "verify: " << reports.size() << " reports, " << failed << " failed -> "
      << (out / "theorem_reports.json").string() << "\n";
  return failed == 0 ? kOk : kVerificationFailed;
}

int cmd_gen_sbm(const RunConfig& config, std::ostream& log) {
  const auto sbm = generate_sbm(
      SbmParams::uniform(config.sbm.communities, config.sbm.size, config.sbm.p_in,
                         config.sbm.p_out),
      config.seed);
  const fs::path out = output_dir(config);
  save_graph_file(out / "edges.txt", sbm.graph);
  save_labels_file(out / "labels.txt", sbm.labels);
  std::string comm;
  for (std::size_t v = 0; v < sbm.community.size(); ++v) {
    comm += std::to_string(v) + " " + std::to_string(sbm.community[v]) + "\n";
  }
  io::write_text_file(out / "communities.txt", comm);
  log << "gen-sbm: " << sbm.graph.num_nodes() << " nodes, " << sbm.graph.num_edges()
      << " edges -> " << out.string() << "\n";
  return kOk;
}

int cmd_bench(const RunConfig& config, std::ostream& log) {
  const Dataset data = load_dataset(config);
  if (config.bench.repeat < 1) throw ConfigError("bench repeat must be >= 1");
  GraphSacConfig det = make_detector(config);
  det.validate(data.graph.num_nodes(), data.labels.num_classes());
  auto timed = [&](auto&& fn) {
    std::vector<double> t;
    for (int r = 0; r < config.bench.repeat; ++r) {
      const auto start = std::chrono::steady_clock::now();
      fn();
      t.push_back(seconds_since(start));
    }
    std::sort(t.begin(), t.end());
    return json{{"min", t.front()}, {"median", t[t.size() / 2]}, {"max", t.back()}};
  };
  json results;
  results["graphsac"] = timed([&] {
    try {
      run_graphsac(data.graph, data.labels, det);
    } catch (const AllRejectedError&) {
      // Timing is still meaningful.
    }
  });
  for (auto m : {BaselineMetric::AverageDegree, BaselineMetric::CutRatio,
                 BaselineMetric::Flake, BaselineMetric::Conductance}) {
    results[std::string(to_string(m))] = timed(
        [&] { baseline_scores(data.graph, m, false, config.detector.threads); });
  }
  const fs::path out = output_dir(config);
  write_json(out / "bench.json", json{{"command", "bench"},
                                      {"num_nodes", data.graph.num_nodes()},
                                      {"num_edges", data.graph.num_edges()},
                                      {"seconds", results},
                                      {"config", config}});
  log << "bench: graphsac median "
      << io::format_double(results["graphsac"]["median"].get<double>()) << " s\n";
  return kOk;
}

// ---------------------------------------------------------------------------
// Command line

namespace {

std::optional<std::string> find_config_arg(const std::vector<std::string>& args) {
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) return args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
  }
  return std::nullopt;
}

void add_data_options(CLI::App* app, RunConfig& c) {
  app->add_option("--graph", c.graph, "Edge list (`src dst [w]`, .gz ok)");
  app->add_option("--labels", c.labels, "Labels (`node c1,c2,...`)");
  app->add_option("--nodes", c.nodes, "Node count, when not inferable");
  app->add_option("--sbm-communities", c.sbm.communities,
                  "Synthetic SBM communities (used without --graph)");
  app->add_option("--sbm-size", c.sbm.size, "Nodes per SBM community");
  app->add_option("--p-in", c.sbm.p_in, "SBM intra-community edge probability");
  app->add_option("--p-out", c.sbm.p_out, "SBM inter-community edge probability");
}

void add_detector_options(CLI::App* app, RunConfig& c) {
  app->add_option("--method", c.detector.method,
                  "graphsac, avgdegree, cutratio, flake or conductance");
  app->add_option("-S,--sample-size", c.detector.sample_size,
                  "Seeds per draw (0: max(ceil(N/10), C))");
  app->add_option("-I,--draws", c.detector.draws, "Number of draws");
  app->add_option("-T,--threshold", c.detector.threshold, "Consensus threshold");
  app->add_option("--model", c.detector.model, "ppr or hk");
  app->add_option("--alpha", c.detector.teleport, "PPR teleport probability");
  app->add_option("--order", c.detector.order, "Diffusion polynomial order");
  app->add_option("--hk-scale", c.detector.hk_scale, "Heat-kernel scale");
  app->add_option("--threads", c.detector.threads, "Worker threads (0: all)");
  app->add_flag("--invert", c.detector.invert, "Flip baseline score orientation");
}

void add_injector_options(CLI::App* app, RunConfig& c) {
  app->add_option("--kind", c.injector.kind, "rw-label, clustered or rw-structural");
  app->add_option("-K,--count", c.injector.count, "Number of anomalies");
  app->add_option("--walk-length", c.injector.walk_length, "Random-walk length");
  app->add_option("--repeats", c.injector.repeats, "Walks per structural anomaly");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  std::string config_path;
  try {
    if (auto path = find_config_arg(args)) c = load_config_file(*path);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kConfig;
  }

  CLI::App app{"Sampling-and-consensus anomaly detection on labeled graphs",
               "graphsac"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON config; flags override it");
    sub->add_option("--seed", c.seed, "Master seed");
    sub->add_option("-o,--out", c.out, "Output directory (default $GRAPHSAC_OUT)");
  };

  auto* detect = app.add_subcommand("detect", "Score nodes; writes scores.csv, "
                                              "draws.csv, summary.json");
  common(detect);
  add_data_options(detect, c);
  add_detector_options(detect, c);
  detect->add_option("--anomalies", c.anomalies, "Ground-truth node list");

  auto* inj = app.add_subcommand("inject", "Plant anomalies; writes edges.txt, "
                                           "labels.txt, anomalies.txt");
  common(inj);
  add_data_options(inj, c);
  add_injector_options(inj, c);

  auto* eval = app.add_subcommand("eval", "AUC of a score file; writes "
                                          "report.json, roc.csv");
  common(eval);
  eval->add_option("--scores", c.scores, "Scores (`node,score` CSV or `node score`)");
  eval->add_option("--anomalies", c.anomalies, "Ground-truth node list");
  eval->add_option("--nodes", c.nodes, "Node count (default: largest id + 1)");
  eval->add_option("--method", c.detector.method, "Method name for the report");

  auto* sweep = app.add_subcommand("sweep", "(S/N, K/N) grid; writes grid_auc.csv, "
                                            "grid_pc.csv, grid_km.csv");
  common(sweep);
  add_data_options(sweep, c);
  add_detector_options(sweep, c);
  add_injector_options(sweep, c);
  sweep->add_option("--sample-fractions", c.sweep.sample_fractions, "S/N values")
      ->delimiter(',');
  sweep->add_option("--anomaly-fractions", c.sweep.anomaly_fractions, "K/N values")
      ->delimiter(',');
  sweep->add_option("--seeds", c.sweep.seeds, "Seeds per cell")->delimiter(',');
  sweep->add_option("--jobs", c.sweep.threads, "Concurrent runs (0: all cores)");

  auto* verify = app.add_subcommand("verify", "Brute-force theorem checks; writes "
                                              "theorem_reports.json");
  common(verify);
  add_data_options(verify, c);
  add_detector_options(verify, c);
  verify->add_option("--anomalies", c.anomalies, "Anomaly node list");
  verify->add_option("--subset-size", c.verify.sample_size, "S for enumeration");
  verify->add_option("--filter-threshold", c.verify.threshold,
                     "Consensus threshold of the real filter");
  verify->add_option("--trials", c.verify.trials, "Monte-Carlo trials per I");
  verify->add_option("--draw-counts", c.verify.draw_counts, "I values")
      ->delimiter(',');

  auto* gen = app.add_subcommand("gen-sbm", "Write a stochastic block model");
  common(gen);
  gen->add_option("--communities", c.sbm.communities, "Number of communities");
  gen->add_option("--size", c.sbm.size, "Nodes per community");
  gen->add_option("--p-in", c.sbm.p_in, "Intra-community edge probability");
  gen->add_option("--p-out", c.sbm.p_out, "Inter-community edge probability");

  auto* bench = app.add_subcommand("bench", "Wall time of the detectors");
  common(bench);
  add_data_options(bench, c);
  add_detector_options(bench, c);
  bench->add_option("--repeat", c.bench.repeat, "Timed repetitions");

  std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kConfig;
  }

  try {
    if (detect->parsed()) return cmd_detect(c, out);
    if (inj->parsed()) return cmd_inject(c, out);
    if (eval->parsed()) return cmd_eval(c, out);
    if (sweep->parsed()) return cmd_sweep(c, out);
    if (verify->parsed()) return cmd_verify(c, out);
    if (gen->parsed()) return cmd_gen_sbm(c, out);
    if (bench->parsed()) return cmd_bench(c, out);
  } catch (const AllRejectedError& e) {
    err << "error: " << e.what() << "\n";
    return kAllRejected;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const PreconditionError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const CapacityError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return kIo;
  } catch (const MissingNodesError& e) {
    err << "input error: " << e.what() << "\n";
    return kIo;
  } catch (const BoundsError& e) {
    err << "input error: " << e.what() << "\n";
    return kIo;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace graphsac::cli
