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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "headtail/baselines.hpp"
#include "headtail/histogram.hpp"
#include "headtail/rh.hpp"
#include "headtail/sketch.hpp"
#include "headtail/stream.hpp"

namespace headtail {

/// One headtail run scored against the exact ccdh.
struct RunRecord {
  double ph = 0.0;
  double pt = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t head_size = 0;
  std::uint64_t tail_size = 0;
  std::uint64_t storage = 0;
  double rh_distance = 0.0;
  double ks = 0.0;
  std::uint64_t d_thr = 0;
  double wall_time_ms = 0.0;
};

struct RunOutcome {
  RunRecord record;
  EstimateResult estimate;
};

/// Runs the sketch over one pass of `stream`. Only the sketch pass is timed.
HeadTailSketch run_sketch(const EdgeStream& stream, double ph, double pt, std::uint64_t seed,
                          double* wall_time_ms = nullptr);

/// Sketch pass plus scoring against `truth`, which the caller computes in a
/// separate pass (see exact_dh) so the two never share state.
RunOutcome run_once(const EdgeStream& stream, const Ccdh& truth, double ph, double pt, std::uint64_t seed,
                    const EstimateConfig& config = {}, double tolerance = 1e-4);

struct SweepSpec {
  std::vector<double> ph_grid;
  std::vector<double> pt_grid;
  std::uint64_t runs_per_cell = 5;
  std::uint64_t seed_base = 0;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

/// Seed of run `run` in cell (ph_index, pt_index).
std::uint64_t sweep_seed(std::uint64_t seed_base, std::size_t ph_index, std::size_t pt_index, std::uint64_t run);

/// Every cell runs_per_cell times. Records are ordered by (ph index, pt index, run)
/// regardless of thread scheduling. Extra cells are appended after the grid.
struct ExtraCell {
  double ph;
  double pt;
  std::uint64_t runs;
};
std::vector<RunRecord> sweep(const EdgeStream& stream, const Ccdh& truth, const SweepSpec& spec,
                             const std::vector<ExtraCell>& extra = {}, const EstimateConfig& config = {});

/// Per-(ph, pt) summary of a sweep.
struct CellSummary {
  double ph = 0.0;
  double pt = 0.0;
  double median_storage = 0.0;
  double median_rh = 0.0;
  std::uint64_t runs = 0;
};
std::vector<CellSummary> summarize_cells(const std::vector<RunRecord>& records);

/// wall_time_ms is the only column that varies between identical runs; leave
/// it out for reproducible output.
void write_records_csv(std::ostream& out, const std::vector<RunRecord>& records, bool include_wall_time = true);
/// "storage\trh_distance" per run.
void write_scatter_tsv(std::ostream& out, const std::vector<RunRecord>& records);
/// "ph\tpt\tmedian_storage\tmedian_rh" per cell, grouped by ph, sorted by pt.
void write_lines_tsv(std::ostream& out, const std::vector<CellSummary>& cells);

/// Per-degree delta profile of an estimate against the truth at `eps`.
DeltaProfile profile(const Ccdh& estimate, const Ccdh& truth, double eps = 0.1);
void write_profile_tsv(std::ostream& out, const DeltaProfile& profile);

struct OrderingRow {
  std::string name;
  Ordering ordering;
  std::uint64_t ordering_seed = 0;
  double rh_distance = 0.0;
  std::uint64_t storage = 0;
};

struct OrderingStudy {
  std::vector<OrderingRow> rows;
  double mean = 0.0;
  /// Sample standard deviation (n - 1 denominator).
  double stddev = 0.0;
};

/// Three seeded random orderings, then node-grouped orderings by decreasing
/// degree, increasing degree and random node order. The sketch seed is the
/// same for every ordering.
OrderingStudy ordering_study(const EdgeStream& stream, const Ccdh& truth, double ph, double pt, std::uint64_t seed,
                             const EstimateConfig& config = {});
void write_ordering_tsv(std::ostream& out, const OrderingStudy& study);

double median(std::vector<double> values);
/// Spearman rank correlation with average ranks for ties.
double spearman(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace headtail
