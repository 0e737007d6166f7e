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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "headtail/histogram.hpp"
#include "headtail/tgmath.hpp"

namespace headtail {

/// Bytes currently and at most held by the containers that share it.
struct MemoryMeter {
  std::size_t current = 0;
  std::size_t peak = 0;
};

/// std::allocator wrapper that books every allocation on a MemoryMeter.
template <class T>
class CountingAllocator {
 public:
  using value_type = T;

  explicit CountingAllocator(MemoryMeter* meter) noexcept : meter_(meter) {}
  template <class U>
  CountingAllocator(const CountingAllocator<U>& other) noexcept : meter_(other.meter()) {}

  T* allocate(std::size_t n) {
    T* p = std::allocator<T>{}.allocate(n);
    meter_->current += n * sizeof(T);
    if (meter_->current > meter_->peak) meter_->peak = meter_->current;
    return p;
  }
  void deallocate(T* p, std::size_t n) noexcept {
    meter_->current -= n * sizeof(T);
    std::allocator<T>{}.deallocate(p, n);
  }

  MemoryMeter* meter() const noexcept { return meter_; }

  template <class U>
  bool operator==(const CountingAllocator<U>& other) const noexcept {
    return meter_ == other.meter();
  }

 private:
  MemoryMeter* meter_;
};

struct LabelHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept { return std::hash<std::string_view>{}(s); }
};

/// VertexLabel -> counter, with transparent string_view lookup.
using CounterMap = std::unordered_map<std::string, std::uint64_t, LabelHash, std::equal_to<>,
                                      CountingAllocator<std::pair<const std::string, std::uint64_t>>>;

/// Uniform vertex sample: w is kept iff hash(seed, w) < p_h, and its counter
/// then equals its degree. Membership depends only on the label, so the
/// sample and its counters do not depend on stream order.
class HeadSampler {
 public:
  HeadSampler(double p_h, std::uint64_t seed, MemoryMeter* meter);

  void observe(std::string_view w);
  bool selects(std::string_view w) const noexcept;

  double p_h() const noexcept { return p_h_; }
  const CounterMap& counters() const noexcept { return counters_; }

 private:
  double p_h_;
  std::uint64_t seed_;
  CounterMap counters_;
};

/// Per-occurrence sampling: an absent vertex joins with probability p_t at
/// each occurrence and is counted from then on. Coins come from a
/// counter-based generator keyed by (seed, edge position, endpoint slot).
class TailSampler {
 public:
  TailSampler(double p_t, std::uint64_t seed, MemoryMeter* meter);

  void observe(std::string_view w, std::uint64_t position, unsigned slot);

  double p_t() const noexcept { return p_t_; }
  const CounterMap& counters() const noexcept { return counters_; }

 private:
  double p_t_;
  std::uint64_t coin_key_;
  CounterMap counters_;
};

/// C(r): number of sampled vertices whose counter equals r.
using CountHistogram = std::map<std::uint64_t, std::uint64_t>;

struct ObservedCounts {
  CountHistogram head;
  CountHistogram tail;
};

/// How corrected tail counts ~C_t(r) read the observed buckets C_t(b) with
/// b = r - l(r). Because l steps by 0 or 1, r -> r - l(r) hits every b >= 1
/// and hits some b twice.
enum class TailShift {
  /// ~C_t(r) = C_t(r - l(r)) for every r; a bucket hit twice is counted twice.
  kIndexRead,
  /// Each bucket b is assigned to the largest r with r - l(r) = b, and the
  /// other preimage reads 0. Every sampled vertex is counted exactly once, so
  /// sum_{r>=d} ~C_t(r) = #{v in S_t : ct_t(v) >= red(d)}.
  kOncePerBucket,
};

struct EstimateConfig {
  /// Head-mass threshold c/eps^2: d_thr is the largest d with
  /// sum_{r>=d} g_h(r) >= threshold_constant / p_h.
  double threshold_constant = 50.0;
  /// Replace the output by its running max from the right.
  bool monotone_clamp = false;
  LossRounding rounding = LossRounding::kCeil;
  TailShift tail_shift = TailShift::kOncePerBucket;
};

struct EstimateResult {
  Ccdh nhat;
  /// 0 when the head sample never reaches the threshold mass; the tail
  /// estimator is then used at every degree.
  std::uint64_t d_thr = 0;
  /// g_h[r] = C_h(r)/p_h, indexed by r (index 0 unused).
  std::vector<double> g_head;
  /// ~C_t[r], indexed by r (index 0 unused).
  std::vector<double> shifted_tail;
  /// g_t[r] = ~C_t(r) / [1 - (1-p_t)^r], indexed by r (index 0 unused).
  std::vector<double> g_tail;
  std::uint64_t storage_used = 0;

  bool head_threshold_reached() const noexcept { return d_thr > 0; }
};

struct StorageSize {
  std::uint64_t head = 0;
  std::uint64_t tail = 0;
  std::uint64_t total() const noexcept { return head + tail; }
};

/// The head/tail streaming sketch. Single writer: updates must be applied in
/// stream order from one thread. estimate() only reads.
class HeadTailSketch {
 public:
  /// Throws ConfigError unless both probabilities lie in (0, 1].
  HeadTailSketch(double p_h, double p_t, std::uint64_t seed);

  HeadTailSketch(HeadTailSketch&&) noexcept = default;
  HeadTailSketch& operator=(HeadTailSketch&&) noexcept = default;

  void update(std::string_view u, std::string_view v);

  ObservedCounts observed_counts() const;
  EstimateResult estimate(const EstimateConfig& config = {}) const;
  StorageSize storage() const noexcept;

  double p_h() const noexcept { return head_->p_h(); }
  double p_t() const noexcept { return tail_->p_t(); }
  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t edges_seen() const noexcept { return position_; }

  const CounterMap& head_counters() const noexcept { return head_->counters(); }
  const CounterMap& tail_counters() const noexcept { return tail_->counters(); }

  /// Bytes held by the S_h and S_t tables (labels stored inline count; long
  /// labels' external buffers do not).
  const MemoryMeter& memory() const noexcept { return *meter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t position_ = 0;
  std::unique_ptr<MemoryMeter> meter_;
  std::unique_ptr<HeadSampler> head_;
  std::unique_ptr<TailSampler> tail_;
};

/// Buckets counter values: result[r] = number of entries with counter r.
CountHistogram bucket_counters(const CounterMap& counters);

/// Algorithm body of estimate(), exposed so it can be driven by hand-built counts.
EstimateResult estimate_from_counts(const ObservedCounts& counts, double p_h, double p_t,
                                    const EstimateConfig& config = {});

}  // namespace headtail
