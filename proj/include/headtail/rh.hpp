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
#include <map>
#include <memory>
#include <vector>

#include "headtail/histogram.hpp"

namespace headtail {

/// Degree slack epsilon and value slack delta, both relative.
struct ClosenessParams {
  double epsilon = 0.0;
  double delta = 0.0;
};

/// Minimal delta per degree at a fixed epsilon, combined over both directions.
using DeltaProfile = std::map<std::uint64_t, double>;

struct RhReport {
  /// Upper end of the final bisection bracket: is_close holds at
  /// (distance, distance) and fails at (distance - tolerance, distance - tolerance).
  double distance = 0.0;
  double tolerance = 0.0;
};

/// (eps, delta)-closeness by Relative Hausdorff distance.
///
/// For every d with F(d) > 0 there must be an integer d' >= 1 in
/// [(1-eps)d, (1+eps)d] with |F(d) - G(d')| <= delta F(d), and the same with
/// F and G swapped. G(d') reads 0 beyond G's support. Throws DomainError on
/// a trivial ccdh or negative slack.
bool is_close(const Ccdh& f, const Ccdh& g, double eps, double delta);
bool is_close(const Ccdh& f, const Ccdh& g, const ClosenessParams& params);

/// inf { eps : F and G are (eps, eps)-close }, by bisection to `tolerance`.
RhReport rh_distance(const Ccdh& f, const Ccdh& g, double tolerance = 1e-4);

/// For each degree in either support, the smallest delta that satisfies the
/// closeness condition at that degree, in both directions. Its maximum is the
/// smallest delta for which is_close(f, g, eps, delta) holds.
DeltaProfile delta_profile(const Ccdh& f, const Ccdh& g, double eps);

struct SpliceChoice {
  std::uint64_t t = 0;
  double distance = 0.0;
  double tolerance = 0.0;
};

/// A fixed ccdh with its range-query index built once, for scoring many
/// candidates against the same reference. Same semantics as the free functions.
class RhReference {
 public:
  explicit RhReference(Ccdh reference);
  ~RhReference();
  RhReference(RhReference&&) noexcept;
  RhReference& operator=(RhReference&&) noexcept;

  const Ccdh& ccdh() const noexcept;
  bool is_close(const Ccdh& f, double eps, double delta) const;
  RhReport distance(const Ccdh& f, double tolerance = 1e-4) const;

  /// Among the splices S_t(d) = head(d) for d <= t and tail(d) for d > t,
  /// t = 1..max(head, tail max degree), finds by bisection the smallest eps at
  /// which some splice is (eps, eps)-close to the reference, and the smallest
  /// such t. No splice is close at distance - tolerance.
  SpliceChoice best_splice(const Ccdh& head, const Ccdh& tail, double tolerance = 1e-4) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// max_x |F(x)/F(1) - G(x)/G(1)| over x = 1..max(d_max).
double ks_statistic(const Ccdh& f, const Ccdh& g);

}  // namespace headtail
