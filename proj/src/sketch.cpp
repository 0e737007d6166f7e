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

#include "headtail/sketch.hpp"

#include <algorithm>

#include "headtail/error.hpp"
#include "headtail/hash.hpp"

namespace headtail {

namespace {

constexpr std::uint64_t kTailSalt = 0x7461696c636f696eULL;

CounterMap make_counter_map(MemoryMeter* meter) {
  using Alloc = CounterMap::allocator_type;
  return CounterMap(0, LabelHash{}, std::equal_to<>{}, Alloc(meter));
}

void increment_or_insert(CounterMap& counters, std::string_view w) {
  if (auto it = counters.find(w); it != counters.end()) {
    ++it->second;
  } else {
    counters.emplace(std::string(w), 1);
  }
}

}  // namespace

HeadSampler::HeadSampler(double p_h, std::uint64_t seed, MemoryMeter* meter)
    : p_h_(p_h), seed_(seed), counters_(make_counter_map(meter)) {
  require_probability(p_h, "p_h");
}

bool HeadSampler::selects(std::string_view w) const noexcept {
  return to_unit_interval(hash_label(w, seed_)) < p_h_;
}

void HeadSampler::observe(std::string_view w) {
  // Membership is a function of the label, so unselected labels never need a lookup.
  if (selects(w)) increment_or_insert(counters_, w);
}

TailSampler::TailSampler(double p_t, std::uint64_t seed, MemoryMeter* meter)
    : p_t_(p_t), coin_key_(mix64(seed ^ kTailSalt)), counters_(make_counter_map(meter)) {
  require_probability(p_t, "p_t");
}

void TailSampler::observe(std::string_view w, std::uint64_t position, unsigned slot) {
  if (auto it = counters_.find(w); it != counters_.end()) {
    ++it->second;
    return;
  }
  const double coin = to_unit_interval(mix64(coin_key_ + mix64(2 * position + slot)));
  if (coin < p_t_) counters_.emplace(std::string(w), 1);
}

HeadTailSketch::HeadTailSketch(double p_h, double p_t, std::uint64_t seed)
    : seed_(seed), meter_(std::make_unique<MemoryMeter>()) {
  head_ = std::make_unique<HeadSampler>(p_h, seed, meter_.get());
  tail_ = std::make_unique<TailSampler>(p_t, seed, meter_.get());
}

void HeadTailSketch::update(std::string_view u, std::string_view v) {
  head_->observe(u);
  tail_->observe(u, position_, 0);
  head_->observe(v);
  tail_->observe(v, position_, 1);
  ++position_;
}

CountHistogram bucket_counters(const CounterMap& counters) {
  CountHistogram buckets;
  for (const auto& [label, count] : counters) ++buckets[count];
  return buckets;
}

ObservedCounts HeadTailSketch::observed_counts() const {
  return {bucket_counters(head_->counters()), bucket_counters(tail_->counters())};
}

StorageSize HeadTailSketch::storage() const noexcept {
  return {head_->counters().size(), tail_->counters().size()};
}

EstimateResult HeadTailSketch::estimate(const EstimateConfig& config) const {
  EstimateResult result = estimate_from_counts(observed_counts(), p_h(), p_t(), config);
  result.storage_used = storage().total();
  return result;
}

EstimateResult estimate_from_counts(const ObservedCounts& counts, double p_h, double p_t,
                                    const EstimateConfig& config) {
  require_probability(p_h, "p_h");
  require_probability(p_t, "p_t");
  if (!(config.threshold_constant > 0.0)) throw ConfigError("threshold_constant must be > 0");

  EstimateResult result;
  for (const auto& [r, c] : counts.head) result.storage_used += c;
  for (const auto& [r, c] : counts.tail) result.storage_used += c;

  // Head: g_h(r) = C_h(r)/p_h. Suffix sums are kept as integer counts; the
  // threshold test sum g_h >= c/p_h is then the exact test sum C_h >= c.
  const std::uint64_t max_head = counts.head.empty() ? 0 : counts.head.rbegin()->first;
  result.g_head.assign(max_head + 1, 0.0);
  std::vector<std::uint64_t> head_suffix(max_head + 2, 0);
  for (const auto& [r, c] : counts.head) result.g_head[r] = static_cast<double>(c) / p_h;
  for (std::uint64_t d = max_head; d >= 1; --d) {
    const auto it = counts.head.find(d);
    head_suffix[d] = head_suffix[d + 1] + (it == counts.head.end() ? 0 : it->second);
  }
  for (std::uint64_t d = max_head; d >= 1; --d) {
    if (static_cast<double>(head_suffix[d]) >= config.threshold_constant) {
      result.d_thr = d;
      break;
    }
  }

  // Tail: ~C_t(r) reads bucket r - l(r), then g_t(r) = ~C_t(r) / [1 - (1-p_t)^r].
  // r - l(r) is non-decreasing with steps of 0 or 1, so the loop stops once it
  // passes the largest observed count.
  const std::uint64_t max_tail = counts.tail.empty() ? 0 : counts.tail.rbegin()->first;
  result.shifted_tail.assign(1, 0.0);
  result.g_tail.assign(1, 0.0);
  if (max_tail > 0) {
    std::uint64_t loss = loss_correction(p_t, 1, config.rounding);
    for (std::uint64_t r = 1;; ++r) {
      const std::uint64_t bucket = r - loss;  // loss <= r - 1
      if (bucket > max_tail) break;
      const std::uint64_t next_loss = loss_correction(p_t, r + 1, config.rounding);
      const std::uint64_t next_bucket = r + 1 - next_loss;
      double shifted = 0.0;
      if (bucket >= 1 && (config.tail_shift == TailShift::kIndexRead || next_bucket != bucket)) {
        const auto it = counts.tail.find(bucket);
        shifted = it == counts.tail.end() ? 0.0 : static_cast<double>(it->second);
      }
      result.shifted_tail.push_back(shifted);
      result.g_tail.push_back(shifted / inclusion_probability(p_t, r));
      loss = next_loss;
    }
  }
  const std::uint64_t max_shifted = result.g_tail.size() - 1;
  std::vector<double> tail_suffix(max_shifted + 2, 0.0);
  for (std::uint64_t r = max_shifted; r >= 1; --r) tail_suffix[r] = tail_suffix[r + 1] + result.g_tail[r];

  const std::uint64_t span = std::max(result.d_thr, max_shifted);
  std::vector<double> nhat(span, 0.0);
  for (std::uint64_t d = 1; d <= span; ++d) {
    if (d <= result.d_thr) {
      nhat[d - 1] = static_cast<double>(head_suffix[d]) / p_h;
    } else if (d <= max_shifted) {
      nhat[d - 1] = tail_suffix[d];
    }
  }
  result.nhat = Ccdh(std::move(nhat));
  if (config.monotone_clamp) result.nhat = monotone_clamp(result.nhat);
  return result;
}

}  // namespace headtail
