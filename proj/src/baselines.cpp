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

#include "headtail/baselines.hpp"

#include <algorithm>
#include <limits>

#include "headtail/error.hpp"
#include "headtail/rh.hpp"
#include "headtail/stream.hpp"

namespace headtail {

std::string_view to_string(HeavyHitterKind kind) {
  switch (kind) {
    case HeavyHitterKind::kFrequent: return "frequent";
    case HeavyHitterKind::kLossyCounting: return "lossy";
    case HeavyHitterKind::kSpaceSaving: return "spacesaving";
  }
  return "?";
}

std::optional<HeavyHitterKind> parse_heavy_hitter_kind(std::string_view name) {
  for (auto k : {HeavyHitterKind::kFrequent, HeavyHitterKind::kLossyCounting, HeavyHitterKind::kSpaceSaving}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

HeavyHitterSummary::HeavyHitterSummary(HeavyHitterKind kind, std::uint64_t capacity)
    : kind_(kind), capacity_(capacity) {
  if (capacity < 1) throw ConfigError("heavy-hitter capacity must be >= 1");
}

void HeavyHitterSummary::update(std::string_view item) {
  ++processed_;
  switch (kind_) {
    case HeavyHitterKind::kFrequent: update_frequent(item); break;
    case HeavyHitterKind::kLossyCounting: update_lossy(item); break;
    case HeavyHitterKind::kSpaceSaving: update_space_saving(item); break;
  }
}

// Counters are stored as count + offset_, so decrement-all is ++offset_ plus
// dropping the entries that reach zero, which sit at the front of by_count_.
void HeavyHitterSummary::update_frequent(std::string_view item) {
  if (auto it = entries_.find(item); it != entries_.end()) {
    by_count_.erase({it->second.count, it->first});
    ++it->second.count;
    by_count_.emplace(it->second.count, it->first);
    return;
  }
  if (entries_.size() < capacity_) {
    entries_.emplace(std::string(item), HeavyHitterEntry{offset_ + 1, 0});
    by_count_.emplace(offset_ + 1, std::string(item));
    return;
  }
  ++offset_;
  while (!by_count_.empty() && by_count_.begin()->first <= offset_) {
    entries_.erase(entries_.find(by_count_.begin()->second));
    by_count_.erase(by_count_.begin());
  }
}

void HeavyHitterSummary::update_lossy(std::string_view item) {
  const std::uint64_t bucket = (processed_ + capacity_ - 1) / capacity_;
  if (auto it = entries_.find(item); it != entries_.end()) {
    ++it->second.count;
  } else {
    entries_.emplace(std::string(item), HeavyHitterEntry{1, bucket - 1});
  }
  if (processed_ % capacity_ == 0) {
    std::erase_if(entries_, [bucket](const auto& kv) { return kv.second.count + kv.second.error <= bucket; });
  }
}

void HeavyHitterSummary::update_space_saving(std::string_view item) {
  if (auto it = entries_.find(item); it != entries_.end()) {
    by_count_.erase({it->second.count, it->first});
    ++it->second.count;
    by_count_.emplace(it->second.count, it->first);
    return;
  }
  if (entries_.size() < capacity_) {
    entries_.emplace(std::string(item), HeavyHitterEntry{1, 0});
    by_count_.emplace(1, std::string(item));
    return;
  }
  auto victim = by_count_.begin();
  const std::uint64_t floor = victim->first;
  entries_.erase(entries_.find(victim->second));
  by_count_.erase(victim);
  entries_.emplace(std::string(item), HeavyHitterEntry{floor + 1, floor});
  by_count_.emplace(floor + 1, std::string(item));
}

HeavyHitterEntry HeavyHitterSummary::stored_to_public(const HeavyHitterEntry& e) const noexcept {
  if (kind_ != HeavyHitterKind::kFrequent) return e;
  return {e.count - offset_, 0};
}

std::optional<HeavyHitterEntry> HeavyHitterSummary::find(std::string_view item) const {
  const auto it = entries_.find(item);
  if (it == entries_.end()) return std::nullopt;
  return stored_to_public(it->second);
}

std::vector<std::pair<std::string, HeavyHitterEntry>> HeavyHitterSummary::entries() const {
  std::vector<std::pair<std::string, HeavyHitterEntry>> out;
  out.reserve(entries_.size());
  for (const auto& [label, e] : entries_) out.emplace_back(label, stored_to_public(e));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

HeavyHitterSummary run_heavy_hitters(const EdgeStream& stream, HeavyHitterKind kind, std::uint64_t capacity) {
  HeavyHitterSummary summary(kind, capacity);
  stream.for_each([&](std::string_view u, std::string_view v) {
    summary.update(u);
    summary.update(v);
  });
  return summary;
}

HeadEstimate head_estimate(const EdgeStream& stream, double p_h, std::uint64_t seed) {
  MemoryMeter meter;
  HeadSampler head(p_h, seed, &meter);
  stream.for_each([&](std::string_view u, std::string_view v) {
    head.observe(u);
    head.observe(v);
  });
  const CountHistogram buckets = bucket_counters(head.counters());
  const std::uint64_t top = buckets.empty() ? 0 : buckets.rbegin()->first;
  std::vector<double> values(top, 0.0);
  std::uint64_t suffix = 0;
  auto it = buckets.rbegin();
  for (std::uint64_t d = top; d >= 1; --d) {
    if (it != buckets.rend() && it->first == d) suffix += (it++)->second;
    values[d - 1] = static_cast<double>(suffix) / p_h;
  }
  return {Ccdh(std::move(values)), head.counters().size()};
}

Ccdh hh_to_tail_ccdh(const HeavyHitterSummary& summary) {
  if (summary.size() == 0) throw DomainError("trivial ccdh: empty heavy-hitter summary");
  DegreeHistogram dh;
  for (const auto& [label, entry] : summary.entries()) dh.add(entry.count);
  return dh_to_ccdh(dh);
}

Ccdh splice(const Ccdh& head, const Ccdh& tail, std::uint64_t d_thr) {
  const std::uint64_t top = std::max(head.max_degree(), tail.max_degree());
  std::vector<double> values(top, 0.0);
  for (std::uint64_t d = 1; d <= top; ++d) values[d - 1] = d <= d_thr ? head(d) : tail(d);
  return Ccdh(std::move(values));
}

HybridEstimate hybrid_estimate(const Ccdh& head, const Ccdh& tail, const Ccdh& truth, double tolerance) {
  require_nontrivial(head, "head");
  require_nontrivial(tail, "tail");
  require_nontrivial(truth, "truth");
  const SpliceChoice choice = RhReference(truth).best_splice(head, tail, tolerance);
  HybridEstimate best;
  best.d_thr = choice.t;
  best.rh = choice.distance;
  best.nhat = splice(head, tail, choice.t);
  return best;
}

}  // namespace headtail
