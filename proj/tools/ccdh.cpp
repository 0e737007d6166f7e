//  Copyright 2026 The headtail Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

// ccdh: command-line front end for the head/tail degree-distribution sketch.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "headtail/baselines.hpp"
#include "headtail/error.hpp"
#include "headtail/experiment.hpp"
#include "headtail/histogram.hpp"
#include "headtail/rh.hpp"
#include "headtail/sketch.hpp"
#include "headtail/stream.hpp"
#include "headtail/tgmath.hpp"

namespace {

using headtail::Ccdh;
using headtail::EdgeStream;
using nlohmann::json;

constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;

struct Globals {
  std::uint64_t seed = 1;
  bool quiet = false;
  std::string json_report;
  bool timing = false;
};

Globals g;

void note(const std::string& msg) {
  if (!g.quiet) std::cerr << "ccdh: " << msg << '\n';
}

void with_output(const std::string& path, const std::function<void(std::ostream&)>& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) throw headtail::IoError("cannot open " + path + " for writing");
  write(out);
  if (!out) throw headtail::IoError("write failed: " + path);
}

void write_json(const std::string& path, const json& report) {
  if (path.empty()) return;
  with_output(path, [&](std::ostream& out) { out << report.dump(2) << '\n'; });
}

EdgeStream open_input(const std::string& path) {
  if (path == "-") return EdgeStream::from_istream(std::cin, "<stdin>");
  return EdgeStream::from_file(path);
}

// For commands that need several passes: standard input is read into memory once.
EdgeStream open_replayable(const std::string& path) {
  if (path == "-") return EdgeStream(EdgeStream::from_istream(std::cin, "<stdin>").materialize());
  return EdgeStream::from_file(path);
}

Ccdh load_or_compute_truth(const std::string& truth_path, const EdgeStream& stream) {
  if (!truth_path.empty()) return headtail::read_ccdh_tsv(truth_path);
  note("computing the exact ccdh in a separate pass");
  return headtail::dh_to_ccdh(headtail::exact_dh(stream));
}

json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

const auto kProbability = CLI::Range(0.0, 1.0);

// ---------------------------------------------------------------- headtail run

struct RunOptions {
  double ph = 0.0;
  double pt = 0.0;
  double threshold_constant = 50.0;
  std::string input;
  std::string output = "-";
  std::string report;
  bool clamp = false;
  std::string rounding = "ceil";
};

json cmd_headtail_run(const RunOptions& o) {
  headtail::EstimateConfig config;
  config.threshold_constant = o.threshold_constant;
  config.monotone_clamp = o.clamp;
  config.rounding = o.rounding == "floor" ? headtail::LossRounding::kFloor : headtail::LossRounding::kCeil;

  double wall_ms = 0.0;
  const auto sketch = headtail::run_sketch(open_input(o.input), o.ph, o.pt, g.seed, &wall_ms);
  const auto result = sketch.estimate(config);
  const auto size = sketch.storage();

  json report = {{"command", "headtail run"},
                 {"ph", o.ph},
                 {"pt", o.pt},
                 {"seed", g.seed},
                 {"threshold_constant", o.threshold_constant},
                 {"rounding", o.rounding},
                 {"monotone_clamp", o.clamp},
                 {"edges", sketch.edges_seen()},
                 {"d_thr", result.d_thr},
                 {"head_size", size.head},
                 {"tail_size", size.tail},
                 {"storage", size.total()}};
  if (g.timing) report["wall_time_ms"] = wall_ms;
  if (!result.head_threshold_reached()) {
    const std::string w = "head sample never reached the threshold mass; tail estimator used at every degree";
    note("warning: " + w);
    report["warnings"] = json::array({w});
  }
  if (result.nhat.trivial()) {
    note("warning: nothing was sampled; the estimate is empty");
  }
  note("d_thr=" + std::to_string(result.d_thr) + " |S_h|=" + std::to_string(size.head) +
       " |S_t|=" + std::to_string(size.tail) + " wall_time_ms=" + headtail::format_number(wall_ms));
  with_output(o.output, [&](std::ostream& out) { headtail::write_ccdh_tsv(out, result.nhat); });
  write_json(o.report, report);
  return report;
}

// -------------------------------------------------------------- headtail sweep

struct SweepOptions {
  std::string input;
  std::string truth;
  std::vector<double> ph_grid = {0.005, 0.01, 0.025, 0.05, 0.1};
  std::vector<double> pt_grid = {0.01, 0.04, 0.08};
  std::uint64_t runs = 5;
  unsigned threads = 0;
  bool no_extra_cell = false;
  double threshold_constant = 50.0;
  std::string csv = "-";
  std::string scatter;
  std::string lines;
};

json cmd_headtail_sweep(const SweepOptions& o) {
  const EdgeStream stream = open_replayable(o.input);
  const Ccdh truth = load_or_compute_truth(o.truth, stream);
  headtail::SweepSpec spec{o.ph_grid, o.pt_grid, o.runs, g.seed, o.threads};
  std::vector<headtail::ExtraCell> extra;
  if (!o.no_extra_cell) extra.push_back({0.005, 0.01, 10});
  headtail::EstimateConfig config;
  config.threshold_constant = o.threshold_constant;

  note("running " + std::to_string(o.ph_grid.size() * o.pt_grid.size()) + " cells x " + std::to_string(o.runs) +
       " runs" + (extra.empty() ? "" : " plus 1 extra cell"));
  const auto records = headtail::sweep(stream, truth, spec, extra, config);
  const auto cells = headtail::summarize_cells(records);

  with_output(o.csv, [&](std::ostream& out) { headtail::write_records_csv(out, records, g.timing); });
  if (!o.scatter.empty()) with_output(o.scatter, [&](std::ostream& out) { headtail::write_scatter_tsv(out, records); });
  if (!o.lines.empty()) with_output(o.lines, [&](std::ostream& out) { headtail::write_lines_tsv(out, cells); });

  json report = {{"command", "headtail sweep"}, {"seed", g.seed}, {"runs", records.size()}};
  json jcells = json::array();
  std::vector<double> storage, rh;
  for (const auto& c : cells) {
    jcells.push_back({{"ph", c.ph},
                      {"pt", c.pt},
                      {"runs", c.runs},
                      {"median_storage", c.median_storage},
                      {"median_rh", number_or_null(c.median_rh)}});
    storage.push_back(c.median_storage);
    rh.push_back(c.median_rh);
  }
  report["cells"] = jcells;
  if (cells.size() >= 2) report["spearman_storage_rh"] = headtail::spearman(storage, rh);
  return report;
}

// ------------------------------------------------------------------ rh compare

struct CompareOptions {
  std::string a;
  std::string b;
  double tolerance = 1e-4;
  std::optional<double> profile_eps;
  std::string profile_out = "-";
  bool ks = false;
};

json cmd_rh_compare(const CompareOptions& o) {
  const Ccdh a = headtail::read_ccdh_tsv(o.a);
  const Ccdh b = headtail::read_ccdh_tsv(o.b);
  const auto r = headtail::rh_distance(a, b, o.tolerance);
  json report = {{"command", "rh compare"}, {"distance", r.distance}, {"tolerance", r.tolerance}};
  report["ks"] = nullptr;
  report["profile_path"] = nullptr;
  std::cout << "distance\t" << headtail::format_number(r.distance) << '\n';
  if (o.ks) {
    const double ks = headtail::ks_statistic(a, b);
    report["ks"] = ks;
    std::cout << "ks\t" << headtail::format_number(ks) << '\n';
  }
  if (o.profile_eps) {
    const auto p = headtail::delta_profile(a, b, *o.profile_eps);
    with_output(o.profile_out, [&](std::ostream& out) { headtail::write_profile_tsv(out, p); });
    report["profile_path"] = o.profile_out;
    report["profile_eps"] = *o.profile_eps;
  }
  return report;
}

// ---------------------------------------------------------------- baseline run

struct BaselineOptions {
  std::string kind;
  std::uint64_t capacity = 0;
  std::optional<double> ph;
  std::string input;
  std::string output = "-";
};

json cmd_baseline_run(const BaselineOptions& o) {
  json report = {{"command", "baseline run"}, {"kind", o.kind}};
  Ccdh estimate;
  if (o.kind == "head") {
    if (!o.ph) throw headtail::ConfigError("--kind head needs --ph");
    const auto h = headtail::head_estimate(open_input(o.input), *o.ph, g.seed);
    estimate = h.nhat;
    report["ph"] = *o.ph;
    report["seed"] = g.seed;
    report["storage"] = h.storage;
  } else {
    const auto kind = headtail::parse_heavy_hitter_kind(o.kind);
    if (!kind) throw headtail::ConfigError("unknown --kind " + o.kind);
    if (o.capacity == 0) throw headtail::ConfigError("--kind " + o.kind + " needs --capacity >= 1");
    const auto summary = headtail::run_heavy_hitters(open_input(o.input), *kind, o.capacity);
    estimate = headtail::hh_to_tail_ccdh(summary);
    report["capacity"] = o.capacity;
    report["storage"] = summary.size();
    report["items"] = summary.items_processed();
  }
  if (estimate.trivial()) note("warning: the estimate is empty");
  with_output(o.output, [&](std::ostream& out) { headtail::write_ccdh_tsv(out, estimate); });
  return report;
}

// ------------------------------------------------------------- baseline hybrid

struct HybridOptions {
  std::string head;
  std::string tail;
  std::string truth;
  std::string output = "-";
  double tolerance = 1e-4;
};

json cmd_baseline_hybrid(const HybridOptions& o) {
  const auto h = headtail::hybrid_estimate(headtail::read_ccdh_tsv(o.head), headtail::read_ccdh_tsv(o.tail),
                                           headtail::read_ccdh_tsv(o.truth), o.tolerance);
  note("hybrid uses the ground truth to pick d_thr; it is an evaluation device, not a streaming estimate");
  with_output(o.output, [&](std::ostream& out) { headtail::write_ccdh_tsv(out, h.nhat); });
  note("d_thr=" + std::to_string(h.d_thr) + " rh=" + headtail::format_number(h.rh));
  return {{"command", "baseline hybrid"}, {"d_thr", h.d_thr}, {"rh", h.rh}, {"tolerance", o.tolerance}};
}

// ------------------------------------------------------------------ stream gen

struct GenOptions {
  std::string family;
  std::uint64_t n = 0;
  std::uint64_t edges = 0;
  double exponent = 2.5;
  double avg_degree = 20.0;
  std::string out = "-";
};

json cmd_stream_gen(const GenOptions& o) {
  headtail::SyntheticSpec spec;
  json params;
  if (o.family == "clique") {
    spec = headtail::Clique{o.n};
    params = {{"n", o.n}};
  } else if (o.family == "star") {
    spec = headtail::Star{o.edges};
    params = {{"edges", o.edges}};
  } else if (o.family == "matching") {
    spec = headtail::Matching{o.edges};
    params = {{"edges", o.edges}};
  } else {
    spec = headtail::ChungLu{o.n, o.exponent, o.avg_degree, g.seed};
    params = {{"n", o.n}, {"exponent", o.exponent}, {"avg_degree", o.avg_degree}, {"seed", g.seed}};
  }
  const auto edges = headtail::generate(spec);
  with_output(o.out, [&](std::ostream& out) { headtail::write_edgelist(out, edges); });
  return {{"command", "stream gen"}, {"family", o.family}, {"parameters", params}, {"edges", edges.size()}};
}

// -------------------------------------------------------------- stream reorder

struct ReorderOptions {
  std::string order;
  std::string in;
  std::string out = "-";
};

json cmd_stream_reorder(const ReorderOptions& o) {
  const auto ordering = headtail::parse_ordering(o.order);
  if (!ordering) throw headtail::ConfigError("unknown --order " + o.order);
  const auto reordered = headtail::reorder(open_input(o.in), *ordering, g.seed).materialize();
  with_output(o.out, [&](std::ostream& out) { headtail::write_edgelist(out, reordered); });
  return {{"command", "stream reorder"}, {"order", o.order}, {"seed", g.seed}, {"edges", reordered.size()}};
}

// --------------------------------------------------------------------- profile

struct ProfileOptions {
  std::string estimate;
  std::string truth;
  double eps = 0.1;
  std::string output = "-";
};

json cmd_profile(const ProfileOptions& o) {
  const auto p = headtail::profile(headtail::read_ccdh_tsv(o.estimate), headtail::read_ccdh_tsv(o.truth), o.eps);
  with_output(o.output, [&](std::ostream& out) { headtail::write_profile_tsv(out, p); });
  double worst = 0.0;
  for (const auto& [d, delta] : p) worst = std::max(worst, delta);
  return {{"command", "profile"}, {"eps", o.eps}, {"degrees", p.size()}, {"max_delta", worst}};
}

// -------------------------------------------------------------- ordering-study

struct OrderingOptions {
  std::string input;
  std::string truth;
  double ph = 0.01;
  double pt = 0.04;
  std::string output = "-";
};

json cmd_ordering_study(const OrderingOptions& o) {
  const EdgeStream stream = open_replayable(o.input);
  const Ccdh truth = load_or_compute_truth(o.truth, stream);
  const auto study = headtail::ordering_study(stream, truth, o.ph, o.pt, g.seed);
  with_output(o.output, [&](std::ostream& out) { headtail::write_ordering_tsv(out, study); });
  json rows = json::array();
  for (const auto& r : study.rows) {
    rows.push_back({{"ordering", r.name}, {"seed", r.ordering_seed}, {"storage", r.storage}, {"rh", r.rh_distance}});
  }
  return {{"command", "ordering-study"}, {"ph", o.ph},       {"pt", o.pt},
          {"seed", g.seed},             {"rows", rows},      {"mean", study.mean},
          {"stddev", study.stddev}};
}

// ------------------------------------------------------------------- step-plot

struct StepOptions {
  std::vector<double> k = {5, 10, 100};
  std::optional<double> pt;
  std::optional<double> x_min;
  std::optional<double> x_max;
  std::uint64_t points = 1000;
  std::string output = "-";
};

json cmd_step_plot(const StepOptions& o) {
  json crossings = json::array();
  with_output(o.output, [&](std::ostream& out) {
    out << "k\tx\tx_over_k\tvalue" << (o.pt ? "\texact" : "") << '\n';
    for (double k : o.k) {
      const double x0 = std::max(headtail::step_transition(k), 0.0);
      const double lo = std::max(o.x_min.value_or(x0), x0);
      const double hi = o.x_max.value_or(std::max(2.0 * k, x0 + 10.0));
      if (!(hi > lo)) throw headtail::ConfigError("--x-max must exceed the transition point");
      const double x10 = headtail::step_crossing(k, 0.1);
      const double x90 = headtail::step_crossing(k, 0.9);
      crossings.push_back({{"k", k}, {"x_at_0.1", x10}, {"x_at_0.9", x90}, {"width", x90 - x10}});
      out << "# k=" << headtail::format_number(k) << " x_at_0.1=" << headtail::format_number(x10)
          << " x_at_0.9=" << headtail::format_number(x90) << '\n';
      for (std::uint64_t i = 0; i < o.points; ++i) {
        const double t = o.points == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(o.points - 1);
        const double x = std::max(lo + t * (hi - lo), x0 > 0.0 ? x0 : 1e-12);
        out << headtail::format_number(k) << '\t' << headtail::format_number(x) << '\t'
            << headtail::format_number(x / k) << '\t' << headtail::format_number(headtail::step_cdf_approx(k, x));
        if (o.pt) {
          // C_{p_t,r}(r - red(d)) at d = round(k/p_t), r = round(x/p_t).
          const auto d = static_cast<std::uint64_t>(std::llround(k / *o.pt));
          const auto r = static_cast<std::uint64_t>(std::llround(x / *o.pt));
          const std::int64_t red = d >= 1 ? headtail::reduced_degree(*o.pt, d) : 0;
          const std::int64_t j = static_cast<std::int64_t>(r) - red;
          double exact = 0.0;
          if (r >= 1 && j >= 0) exact = j >= static_cast<std::int64_t>(r) ? 1.0 : headtail::tg_cdf({*o.pt, r}, j);
          out << '\t' << headtail::format_number(exact);
        }
        out << '\n';
      }
    }
  });
  json report = {{"command", "step-plot"}, {"crossings", crossings}, {"points", o.points}};
  if (o.pt) report["pt"] = *o.pt;
  return report;
}

// ----------------------------------------------------------------------- exact

struct ExactOptions {
  std::string input;
  std::string output = "-";
};

json cmd_exact(const ExactOptions& o) {
  const Ccdh truth = headtail::dh_to_ccdh(headtail::exact_dh(open_input(o.input)));
  with_output(o.output, [&](std::ostream& out) { headtail::write_ccdh_tsv(out, truth); });
  return {{"command", "exact"}, {"max_degree", truth.max_degree()}, {"vertices", truth(1)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Small-space ccdh estimation for edge streams"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_flag("--quiet", g.quiet, "Suppress progress and warnings on stderr");
  app.add_option("--json-report", g.json_report, "Write a JSON report to this path");
  app.add_flag("--timing", g.timing, "Include wall times in reports (makes them non-reproducible)");

  std::function<json()> action;

  // headtail
  auto* headtail_cmd = app.add_subcommand("headtail", "Head/tail sketch");
  headtail_cmd->require_subcommand(1);
  RunOptions run;
  auto* run_cmd = headtail_cmd->add_subcommand("run", "Estimate the ccdh of one edge stream");
  run_cmd->add_option("--ph", run.ph, "Head sampling probability")->required()->check(kProbability);
  run_cmd->add_option("--pt", run.pt, "Tail sampling probability")->required()->check(kProbability);
  run_cmd->add_option("--threshold-constant", run.threshold_constant, "Head threshold mass")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  run_cmd->add_option("--input", run.input, "Edge list path, or - for standard input")->required();
  run_cmd->add_option("--output", run.output, "ccdh TSV (default: standard output)");
  run_cmd->add_option("--report", run.report, "JSON report path");
  run_cmd->add_flag("--monotone-clamp", run.clamp, "Clamp the estimate to be non-increasing");
  run_cmd->add_option("--rounding", run.rounding, "Loss correction rounding")
      ->check(CLI::IsMember({"ceil", "floor"}))
      ->capture_default_str();
  run_cmd->callback([&] { action = [&] { return cmd_headtail_run(run); }; });

  SweepOptions sw;
  auto* sweep_cmd = headtail_cmd->add_subcommand("sweep", "Grid of (ph, pt) runs scored against the exact ccdh");
  sweep_cmd->add_option("--input", sw.input, "Edge list path, or -")->required();
  sweep_cmd->add_option("--truth", sw.truth, "Exact ccdh TSV (computed from the input when absent)");
  sweep_cmd->add_option("--ph-grid", sw.ph_grid, "Head probabilities")->delimiter(',')->capture_default_str()->check(kProbability);
  sweep_cmd->add_option("--pt-grid", sw.pt_grid, "Tail probabilities")->delimiter(',')->capture_default_str()->check(kProbability);
  sweep_cmd->add_option("--runs", sw.runs, "Runs per cell")->capture_default_str()->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--threads", sw.threads, "Worker threads (0: all cores)")->capture_default_str();
  sweep_cmd->add_flag("--no-extra-cell", sw.no_extra_cell, "Skip the extra (0.005, 0.01) cell with 10 runs");
  sweep_cmd->add_option("--threshold-constant", sw.threshold_constant)->capture_default_str()->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--csv", sw.csv, "Per-run records CSV (default: standard output)");
  sweep_cmd->add_option("--scatter", sw.scatter, "storage vs RH TSV");
  sweep_cmd->add_option("--lines", sw.lines, "Per-cell median TSV");
  sweep_cmd->callback([&] { action = [&] { return cmd_headtail_sweep(sw); }; });

  // rh
  auto* rh_cmd = app.add_subcommand("rh", "Relative Hausdorff distance");
  rh_cmd->require_subcommand(1);
  CompareOptions cmp;
  auto* cmp_cmd = rh_cmd->add_subcommand("compare", "Distance between two ccdh TSVs");
  cmp_cmd->add_option("--a", cmp.a)->required();
  cmp_cmd->add_option("--b", cmp.b)->required();
  cmp_cmd->add_option("--tolerance", cmp.tolerance)->capture_default_str()->check(CLI::PositiveNumber);
  cmp_cmd->add_option("--profile-eps", cmp.profile_eps, "Also emit the per-degree delta profile at this eps")
      ->check(CLI::NonNegativeNumber);
  cmp_cmd->add_option("--profile-out", cmp.profile_out, "Profile TSV path (default: standard output)");
  cmp_cmd->add_flag("--ks", cmp.ks, "Also compute the KS statistic");
  cmp_cmd->callback([&] { action = [&] { return cmd_rh_compare(cmp); }; });

  // baseline
  auto* base_cmd = app.add_subcommand("baseline", "Heavy-hitter and head-only baselines");
  base_cmd->require_subcommand(1);
  BaselineOptions base;
  auto* brun_cmd = base_cmd->add_subcommand("run", "Run one baseline over an edge stream");
  brun_cmd->add_option("--kind", base.kind)->required()->check(CLI::IsMember({"frequent", "lossy", "spacesaving", "head"}));
  brun_cmd->add_option("--capacity", base.capacity, "Counters for the heavy-hitter kinds");
  brun_cmd->add_option("--ph", base.ph, "Head probability for --kind head")->check(kProbability);
  brun_cmd->add_option("--input", base.input)->required();
  brun_cmd->add_option("--output", base.output);
  brun_cmd->callback([&] { action = [&] { return cmd_baseline_run(base); }; });

  HybridOptions hyb;
  auto* hyb_cmd = base_cmd->add_subcommand("hybrid", "Best head/tail splice against the truth (not streaming)");
  hyb_cmd->add_option("--head", hyb.head)->required();
  hyb_cmd->add_option("--tail", hyb.tail)->required();
  hyb_cmd->add_option("--truth", hyb.truth)->required();
  hyb_cmd->add_option("--output", hyb.output);
  hyb_cmd->add_option("--tolerance", hyb.tolerance)->capture_default_str()->check(CLI::PositiveNumber);
  hyb_cmd->callback([&] { action = [&] { return cmd_baseline_hybrid(hyb); }; });

  // stream
  auto* stream_cmd = app.add_subcommand("stream", "Edge list generation and reordering");
  stream_cmd->require_subcommand(1);
  GenOptions gen;
  auto* gen_cmd = stream_cmd->add_subcommand("gen", "Generate a synthetic edge list");
  gen_cmd->add_option("--family", gen.family)->required()->check(CLI::IsMember({"clique", "star", "matching", "chung-lu"}));
  gen_cmd->add_option("--n", gen.n, "Vertices (clique, chung-lu)");
  gen_cmd->add_option("--edges", gen.edges, "Edges (star, matching)");
  gen_cmd->add_option("--exponent", gen.exponent)->capture_default_str();
  gen_cmd->add_option("--avg-degree", gen.avg_degree)->capture_default_str();
  gen_cmd->add_option("--out", gen.out);
  gen_cmd->callback([&] { action = [&] { return cmd_stream_gen(gen); }; });

  ReorderOptions ro;
  auto* ro_cmd = stream_cmd->add_subcommand("reorder", "Reorder an edge list");
  ro_cmd->add_option("--order", ro.order)
      ->required()
      ->check(CLI::IsMember({"asis", "random", "deg-desc", "deg-asc", "node-random"}));
  ro_cmd->add_option("--in", ro.in)->required();
  ro_cmd->add_option("--out", ro.out);
  ro_cmd->callback([&] { action = [&] { return cmd_stream_reorder(ro); }; });

  ProfileOptions prof;
  auto* prof_cmd = app.add_subcommand("profile", "Per-degree delta profile of an estimate");
  prof_cmd->add_option("--estimate", prof.estimate)->required();
  prof_cmd->add_option("--truth", prof.truth)->required();
  prof_cmd->add_option("--eps", prof.eps)->capture_default_str()->check(CLI::NonNegativeNumber);
  prof_cmd->add_option("--output", prof.output);
  prof_cmd->callback([&] { action = [&] { return cmd_profile(prof); }; });

  OrderingOptions ord;
  auto* ord_cmd = app.add_subcommand("ordering-study", "RH across six stream orderings");
  ord_cmd->add_option("--input", ord.input)->required();
  ord_cmd->add_option("--truth", ord.truth);
  ord_cmd->add_option("--ph", ord.ph)->capture_default_str()->check(kProbability);
  ord_cmd->add_option("--pt", ord.pt)->capture_default_str()->check(kProbability);
  ord_cmd->add_option("--output", ord.output);
  ord_cmd->callback([&] { action = [&] { return cmd_ordering_study(ord); }; });

  StepOptions step;
  auto* step_cmd = app.add_subcommand("step-plot", "Step-function approximation data");
  step_cmd->add_option("--k", step.k)->delimiter(',')->capture_default_str()->check(CLI::PositiveNumber);
  step_cmd->add_option("--pt", step.pt, "Also emit the exact coefficient at this p_t")->check(kProbability);
  step_cmd->add_option("--x-min", step.x_min);
  step_cmd->add_option("--x-max", step.x_max);
  step_cmd->add_option("--points", step.points)->capture_default_str()->check(CLI::PositiveNumber);
  step_cmd->add_option("--output", step.output);
  step_cmd->callback([&] { action = [&] { return cmd_step_plot(step); }; });

  ExactOptions ex;
  auto* ex_cmd = app.add_subcommand("exact", "Exact ccdh of an edge list");
  ex_cmd->add_option("--input", ex.input)->required();
  ex_cmd->add_option("--output", ex.output);
  ex_cmd->callback([&] { action = [&] { return cmd_exact(ex); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    const json report = action();
    write_json(g.json_report, report);
  } catch (const headtail::ConfigError& e) {
    std::cerr << "ccdh: error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const headtail::Error& e) {
    std::cerr << "ccdh: error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "ccdh: error: " << e.what() << '\n';
    return kExitIo;
  }
  return 0;
}
