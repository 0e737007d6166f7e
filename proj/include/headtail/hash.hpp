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

#include <bit>
#include <cstdint>
#include <cstring>
#include <string_view>

namespace headtail {

/// splitmix64 finalizer; a bijection on 64-bit words with full avalanche.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

/// Seeded 64-bit hash of a vertex token. Stable across platforms of the
/// same endianness, so sketches are reproducible from (seed, stream bytes).
inline std::uint64_t hash_label(std::string_view token, std::uint64_t seed) noexcept {
  constexpr std::uint64_t kMul = 0x9e3779b97f4a7c15ULL;
  std::uint64_t h = mix64(seed ^ (kMul * (token.size() + 1)));
  const char* p = token.data();
  std::size_t n = token.size();
  while (n >= 8) {
    std::uint64_t w;
    std::memcpy(&w, p, 8);
    h = std::rotl(h ^ mix64(w + kMul), 27) * 0xff51afd7ed558ccdULL + 0x52dce729ULL;
    p += 8;
    n -= 8;
  }
  if (n > 0) {
    std::uint64_t w = 0;
    std::memcpy(&w, p, n);
    h = std::rotl(h ^ mix64(w + kMul + n), 27) * 0xff51afd7ed558ccdULL + 0x52dce729ULL;
  }
  return mix64(h);
}

/// Maps a 64-bit word to [0, 1) using its top 53 bits.
constexpr double to_unit_interval(std::uint64_t h) noexcept {
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

/// Derives an independent seed from a base seed and a list of indices.
template <class... Ix>
constexpr std::uint64_t derive_seed(std::uint64_t base, Ix... ix) noexcept {
  std::uint64_t h = mix64(base ^ 0x6a09e667f3bcc909ULL);
  ((h = mix64(h ^ (static_cast<std::uint64_t>(ix) + 0x9e3779b97f4a7c15ULL))), ...);
  return h;
}

/// Small deterministic generator used by shuffles and generators. Output is
/// identical on every standard library, unlike std::uniform_*_distribution.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
  }

  constexpr double uniform() noexcept { return to_unit_interval(next()); }

  /// Uniform integer in [0, bound), bound > 0 (Lemire's multiply-shift with rejection).
  std::uint64_t below(std::uint64_t bound) noexcept {
    unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        m = static_cast<unsigned __int128>(next()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

 private:
  std::uint64_t state_;
};

}  // namespace headtail
