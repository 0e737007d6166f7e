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

#include "headtail/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>
#include <thread>

#include "headtail/error.hpp"
#include "headtail/hash.hpp"

namespace headtail {

HeadTailSketch run_sketch(const EdgeStream& stream, double ph, double pt, std::uint64_t seed, double* wall_time_ms) {
  const auto start = std::chrono::steady_clock::now();
  HeadTailSketch sketch(ph, pt, seed);
  stream.for_each([&](std::string_view u, std::string_view v) { sketch.update(u, v); });
  if (wall_time_ms) {
    *wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return sketch;
}

RunOutcome run_once(const EdgeStream& stream, const Ccdh& truth, double ph, double pt, std::uint64_t seed,
                    const EstimateConfig& config, double tolerance) {
  require_nontrivial(truth, "truth");
  RunOutcome out;
  RunRecord& rec = out.record;
  const HeadTailSketch sketch = run_sketch(stream, ph, pt, seed, &rec.wall_time_ms);
  out.estimate = sketch.estimate(config);
  const StorageSize size = sketch.storage();
  rec.ph = ph;
  rec.pt = pt;
  rec.seed = seed;
  rec.head_size = size.head;
  rec.tail_size = size.tail;
  rec.storage = size.total();
  rec.d_thr = out.estimate.d_thr;
  if (out.estimate.nhat.trivial()) {
    // Nothing sampled: no point of the truth can be matched at any finite slack.
    rec.rh_distance = std::numeric_limits<double>::infinity();
    rec.ks = 1.0;
  } else {
    rec.rh_distance = rh_distance(out.estimate.nhat, truth, tolerance).distance;
    rec.ks = ks_statistic(out.estimate.nhat, truth);
  }
  return out;
}

std::uint64_t sweep_seed(std::uint64_t seed_base, std::size_t ph_index, std::size_t pt_index, std::uint64_t run) {
  return derive_seed(seed_base, ph_index, pt_index, run);
}

std::vector<RunRecord> sweep(const EdgeStream& stream, const Ccdh& truth, const SweepSpec& spec,
                             const std::vector<ExtraCell>& extra, const EstimateConfig& config) {
  if (spec.ph_grid.empty() || spec.pt_grid.empty()) throw ConfigError("sweep grids must be non-empty");
  if (spec.runs_per_cell < 1) throw ConfigError("runs_per_cell must be >= 1");
  for (double p : spec.ph_grid) require_probability(p, "p_h");
  for (double p : spec.pt_grid) require_probability(p, "p_t");

  struct Job {
    double ph, pt;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < spec.ph_grid.size(); ++i) {
    for (std::size_t j = 0; j < spec.pt_grid.size(); ++j) {
      for (std::uint64_t r = 0; r < spec.runs_per_cell; ++r) {
        jobs.push_back({spec.ph_grid[i], spec.pt_grid[j], sweep_seed(spec.seed_base, i, j, r)});
      }
    }
  }
  // Extra cells take indices past the grid so their seeds never collide with it.
  for (std::size_t e = 0; e < extra.size(); ++e) {
    require_probability(extra[e].ph, "p_h");
    require_probability(extra[e].pt, "p_t");
    for (std::uint64_t r = 0; r < extra[e].runs; ++r) {
      jobs.push_back({extra[e].ph, extra[e].pt, sweep_seed(spec.seed_base, spec.ph_grid.size() + e, 0, r)});
    }
  }

  std::vector<RunRecord> records(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) {
      records[k] = run_once(stream, truth, jobs[k].ph, jobs[k].pt, jobs[k].seed, config).record;
    }
  };
  unsigned threads = spec.threads ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, jobs.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return records;
}

double median(std::vector<double> values) {
  if (values.empty()) throw DomainError("median of an empty set");
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

std::vector<CellSummary> summarize_cells(const std::vector<RunRecord>& records) {
  std::map<std::pair<double, double>, std::pair<std::vector<double>, std::vector<double>>> cells;
  std::vector<std::pair<double, double>> order;
  for (const auto& r : records) {
    auto [it, fresh] = cells.try_emplace({r.ph, r.pt});
    if (fresh) order.push_back({r.ph, r.pt});
    it->second.first.push_back(static_cast<double>(r.storage));
    it->second.second.push_back(r.rh_distance);
  }
  std::vector<CellSummary> out;
  for (const auto& key : order) {
    const auto& [storage, rh] = cells.at(key);
    out.push_back({key.first, key.second, median(storage), median(rh), storage.size()});
  }
  return out;
}

void write_records_csv(std::ostream& out, const std::vector<RunRecord>& records, bool include_wall_time) {
  out << "ph,pt,seed,head_size,tail_size,storage,rh_distance,ks,d_thr" << (include_wall_time ? ",wall_time_ms\n" : "\n");
  for (const auto& r : records) {
    out << format_number(r.ph) << ',' << format_number(r.pt) << ',' << r.seed << ',' << r.head_size << ','
        << r.tail_size << ',' << r.storage << ',' << format_number(r.rh_distance) << ',' << format_number(r.ks) << ','
        << r.d_thr;
    if (include_wall_time) out << ',' << format_number(r.wall_time_ms);
    out << '\n';
  }
}

void write_scatter_tsv(std::ostream& out, const std::vector<RunRecord>& records) {
  out << "storage\trh_distance\n";
  for (const auto& r : records) out << r.storage << '\t' << format_number(r.rh_distance) << '\n';
}

void write_lines_tsv(std::ostream& out, const std::vector<CellSummary>& cells) {
  std::vector<CellSummary> sorted = cells;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.ph != b.ph ? a.ph < b.ph : a.pt < b.pt; });
  out << "ph\tpt\tmedian_storage\tmedian_rh\n";
  for (const auto& c : sorted) {
    out << format_number(c.ph) << '\t' << format_number(c.pt) << '\t' << format_number(c.median_storage) << '\t'
        << format_number(c.median_rh) << '\n';
  }
}

DeltaProfile profile(const Ccdh& estimate, const Ccdh& truth, double eps) {
  return delta_profile(estimate, truth, eps);
}

void write_profile_tsv(std::ostream& out, const DeltaProfile& profile) {
  out << "degree\tdelta\n";
  for (const auto& [d, delta] : profile) out << d << '\t' << format_number(delta) << '\n';
}

OrderingStudy ordering_study(const EdgeStream& stream, const Ccdh& truth, double ph, double pt, std::uint64_t seed,
                             const EstimateConfig& config) {
  const std::vector<std::pair<std::string, Ordering>> plan = {
      {"random-1", Ordering::kRandom},        {"random-2", Ordering::kRandom},
      {"random-3", Ordering::kRandom},        {"edgelist-deg-desc", Ordering::kDegreeDesc},
      {"edgelist-deg-asc", Ordering::kDegreeAsc}, {"edgelist-node-random", Ordering::kNodeRandom},
  };
  OrderingStudy study;
  std::vector<double> rh;
  for (std::size_t i = 0; i < plan.size(); ++i) {
    const std::uint64_t order_seed = derive_seed(seed, 0x6f72646572ULL, i);
    const EdgeStream ordered = reorder(stream, plan[i].second, order_seed);
    const RunRecord rec = run_once(ordered, truth, ph, pt, seed, config).record;
    study.rows.push_back({plan[i].first, plan[i].second, order_seed, rec.rh_distance, rec.storage});
    rh.push_back(rec.rh_distance);
  }
  study.mean = std::accumulate(rh.begin(), rh.end(), 0.0) / static_cast<double>(rh.size());
  double ss = 0.0;
  for (double x : rh) ss += (x - study.mean) * (x - study.mean);
  study.stddev = std::sqrt(ss / static_cast<double>(rh.size() - 1));
  return study;
}

void write_ordering_tsv(std::ostream& out, const OrderingStudy& study) {
  out << "ordering\tseed\tstorage\trh_distance\n";
  for (const auto& r : study.rows) {
    out << r.name << '\t' << r.ordering_seed << '\t' << r.storage << '\t' << format_number(r.rh_distance) << '\n';
  }
  out << "# mean\t" << format_number(study.mean) << "\n# stddev\t" << format_number(study.stddev) << '\n';
}

namespace {

std::vector<double> average_ranks(const std::vector<double>& x) {
  std::vector<std::size_t> idx(x.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> ranks(x.size());
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i;
    while (j + 1 < idx.size() && x[idx[j + 1]] == x[idx[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[idx[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw DomainError("spearman needs two equal-length samples of size >= 2");
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace headtail
