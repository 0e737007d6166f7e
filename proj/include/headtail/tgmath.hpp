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

namespace headtail {

/// Truncated geometric distribution TG_{p,s} on {0, ..., s-1}:
/// Pr[X = k] = p (1-p)^k / [1 - (1-p)^s].
///
/// It is the law of the number of occurrences a vertex of degree s misses
/// before the tail sampler picks it up, conditioned on being picked up.
struct TruncGeomParams {
  double p;
  std::uint64_t s;
};

/// Throws ConfigError unless 0 < p <= 1 and s >= 1.
void validate(const TruncGeomParams& params);

/// Throws DomainError for k >= s.
double tg_pdf(const TruncGeomParams& params, std::uint64_t k);
/// Pr[X <= k] = [1 - (1-p)^{k+1}] / [1 - (1-p)^s]. Throws DomainError for k >= s.
double tg_cdf(const TruncGeomParams& params, std::uint64_t k);
/// E[X] = [1 - p - (1-p)^{s+1} - s p (1-p)^s] / [p (1 - (1-p)^s)].
double tg_expectation(const TruncGeomParams& params);

enum class LossRounding { kCeil, kFloor };

/// l(r): E[TG_{p_t, r}] rounded up (default) or down. The rounding is exact:
/// the comparison against each candidate integer is done on a rearranged
/// form whose sign is computed without cancellation, so values that sit just
/// below an integer (E[TG] approaches (1-p)/p from below) round correctly.
std::uint64_t loss_correction(double p_t, std::uint64_t r, LossRounding rounding = LossRounding::kCeil);

/// red(d) = d - l(d).
std::int64_t reduced_degree(double p_t, std::uint64_t d, LossRounding rounding = LossRounding::kCeil);

/// 1 - (1-p)^r, evaluated as -expm1(r log1p(-p)).
double inclusion_probability(double p, std::uint64_t r);

/// Smallest admissible x for step_cdf_approx: k - 1 + k e^{-k}.
double step_transition(double k);

/// Continuous approximation of C_{p_t,r}(r - red(d)) with d = k/p_t, r = x/p_t:
/// [1 - exp(-(x - k + 1 - k e^{-k}))] / [1 - exp(-x)].
/// Throws DomainError for x <= 0 or x below step_transition(k).
double step_cdf_approx(double k, double x);

/// The x at which step_cdf_approx(k, .) reaches `level` in (0, 1), by bisection.
double step_crossing(double k, double level);

}  // namespace headtail
