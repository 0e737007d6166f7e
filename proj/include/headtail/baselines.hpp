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
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "headtail/histogram.hpp"
#include "headtail/sketch.hpp"

namespace headtail {

class EdgeStream;

enum class HeavyHitterKind { kFrequent, kLossyCounting, kSpaceSaving };

/// CLI spelling: frequent, lossy, spacesaving.
std::string_view to_string(HeavyHitterKind kind);
std::optional<HeavyHitterKind> parse_heavy_hitter_kind(std::string_view name);

struct HeavyHitterEntry {
  std::uint64_t count = 0;
  /// Space saving: overestimation bound. Lossy counting: the bucket delta.
  /// Frequent: 0 (its bound is global, items_processed / (capacity + 1)).
  std::uint64_t error = 0;
};

/// Counter-based heavy-hitter summary over a stream of vertex labels.
///
/// - frequent: Misra-Gries. A new item when all `capacity` counters are busy
///   decrements every counter and is itself dropped.
/// - lossy counting: Manku-Motwani with window width `capacity`
///   (eps = 1/capacity); entries with count + delta <= bucket are pruned at
///   every window boundary.
/// - space saving: Metwally et al. A new item when full replaces the
///   minimum counter m and starts at m + 1 with error m.
class HeavyHitterSummary {
 public:
  HeavyHitterSummary(HeavyHitterKind kind, std::uint64_t capacity);

  void update(std::string_view item);

  HeavyHitterKind kind() const noexcept { return kind_; }
  std::uint64_t capacity() const noexcept { return capacity_; }
  std::uint64_t items_processed() const noexcept { return processed_; }
  std::size_t size() const noexcept { return entries_.size(); }

  std::optional<HeavyHitterEntry> find(std::string_view item) const;
  /// Entries sorted by label.
  std::vector<std::pair<std::string, HeavyHitterEntry>> entries() const;

 private:
  void update_frequent(std::string_view item);
  void update_lossy(std::string_view item);
  void update_space_saving(std::string_view item);
  HeavyHitterEntry stored_to_public(const HeavyHitterEntry& e) const noexcept;

  using EntryMap = std::unordered_map<std::string, HeavyHitterEntry, LabelHash, std::equal_to<>>;

  HeavyHitterKind kind_;
  std::uint64_t capacity_;
  std::uint64_t processed_ = 0;
  EntryMap entries_;
  // Frequent: number of decrement-all steps so far; stored counts include it.
  std::uint64_t offset_ = 0;
  // Frequent and space saving: (stored count, label) ordered so the minimum is first.
  std::set<std::pair<std::uint64_t, std::string>> by_count_;
};

/// Feeds both endpoints of every edge, u then v.
HeavyHitterSummary run_heavy_hitters(const EdgeStream& stream, HeavyHitterKind kind, std::uint64_t capacity);

/// Head sampler on its own: sum_{r>=d} C_h(r)/p_h for every d, no threshold.
/// Returns the sample size alongside.
struct HeadEstimate {
  Ccdh nhat;
  std::uint64_t storage = 0;
};
HeadEstimate head_estimate(const EdgeStream& stream, double p_h, std::uint64_t seed);

/// Unscaled ccdh of the tracked entries' count estimates, read as degrees.
/// Throws DomainError("trivial ccdh") for an empty summary.
Ccdh hh_to_tail_ccdh(const HeavyHitterSummary& summary);

struct HybridEstimate {
  Ccdh nhat;
  std::uint64_t d_thr = 0;
  double rh = 0.0;
  std::uint64_t head_storage = 0;
  std::uint64_t hh_storage = 0;
};

/// Splices head(d) for d <= d_thr with tail(d) above and keeps the d_thr in
/// [1, max degree] whose splice is closest to `truth` in RH distance.
/// Uses ground truth, so it is an evaluation device, not a streaming algorithm.
HybridEstimate hybrid_estimate(const Ccdh& head, const Ccdh& tail, const Ccdh& truth, double tolerance = 1e-4);

/// Splice used by hybrid_estimate: head below and at d_thr, tail above.
Ccdh splice(const Ccdh& head, const Ccdh& tail, std::uint64_t d_thr);

}  // namespace headtail
