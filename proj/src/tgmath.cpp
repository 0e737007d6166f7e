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

#include "headtail/tgmath.hpp"

#include <cmath>
#include <string>

#include "headtail/error.hpp"

namespace headtail {

namespace {

// -log(1 - p) > 0, so (1-p)^x = exp(-x t). Infinite for p = 1.
double rate(double p) { return -std::log1p(-p); }

void require_in_support(const TruncGeomParams& params, std::uint64_t k) {
  validate(params);
  if (k >= params.s) {
    throw DomainError("k = " + std::to_string(k) + " is outside the support {0.." + std::to_string(params.s - 1) + "}");
  }
}

// r (1-p)^r / [1 - (1-p)^r]: the amount truncation takes off the untruncated mean.
double truncation_deficit(double t, std::uint64_t r) {
  return static_cast<double>(r) / std::expm1(static_cast<double>(r) * t);
}

// A value with the sign of E[TG_{p,r}] - m. With q = 1-p,
//   E - m = (q/p - m) - r q^r / (1 - q^r) = (1 - (m+1) p) / p - deficit,
// and fma gives 1 - (m+1) p with a single rounding, so values just below an
// integer are not pushed across it. The two terms are compared in logs
// because the deficit underflows long before it stops mattering.
double expectation_minus(double p, double t, std::uint64_t r, std::uint64_t m) {
  const double head = std::fma(-static_cast<double>(m + 1), p, 1.0) / p;
  if (head <= 0.0) return -1.0;
  const double rt = static_cast<double>(r) * t;
  const double log_deficit = std::log(static_cast<double>(r)) - rt - std::log(-std::expm1(-rt));
  return std::log(head) - log_deficit;
}

}  // namespace

void validate(const TruncGeomParams& params) {
  require_probability(params.p, "p");
  if (params.s < 1) throw ConfigError("support bound s must be >= 1");
}

double tg_pdf(const TruncGeomParams& params, std::uint64_t k) {
  require_in_support(params, k);
  if (params.p == 1.0) return k == 0 ? 1.0 : 0.0;
  const double t = rate(params.p);
  return params.p * std::exp(-static_cast<double>(k) * t) / -std::expm1(-static_cast<double>(params.s) * t);
}

double tg_cdf(const TruncGeomParams& params, std::uint64_t k) {
  require_in_support(params, k);
  if (params.p == 1.0 || k + 1 == params.s) return 1.0;
  const double t = rate(params.p);
  return std::expm1(-static_cast<double>(k + 1) * t) / std::expm1(-static_cast<double>(params.s) * t);
}

double tg_expectation(const TruncGeomParams& params) {
  validate(params);
  if (params.p == 1.0 || params.s == 1) return 0.0;
  // Same closed form rearranged: q/p - s q^s/(1 - q^s), with q/p = 1/expm1(t).
  const double t = rate(params.p);
  return 1.0 / std::expm1(t) - truncation_deficit(t, params.s);
}

std::uint64_t loss_correction(double p_t, std::uint64_t r, LossRounding rounding) {
  require_probability(p_t, "p_t");
  if (r < 1) throw ConfigError("loss_correction needs r >= 1");
  if (p_t == 1.0 || r == 1) return 0;
  const double t = rate(p_t);
  const double e = tg_expectation({p_t, r});
  if (rounding == LossRounding::kCeil) {
    auto m = static_cast<std::uint64_t>(std::max(0.0, std::ceil(e)));
    while (m > 0 && expectation_minus(p_t, t, r, m - 1) <= 0.0) --m;
    while (expectation_minus(p_t, t, r, m) > 0.0) ++m;
    return m;
  }
  auto m = static_cast<std::uint64_t>(std::max(0.0, std::floor(e)));
  while (m > 0 && expectation_minus(p_t, t, r, m) < 0.0) --m;
  while (expectation_minus(p_t, t, r, m + 1) >= 0.0) ++m;
  return m;
}

std::int64_t reduced_degree(double p_t, std::uint64_t d, LossRounding rounding) {
  return static_cast<std::int64_t>(d) - static_cast<std::int64_t>(loss_correction(p_t, d, rounding));
}

double inclusion_probability(double p, std::uint64_t r) {
  require_probability(p, "p");
  if (p == 1.0) return r == 0 ? 0.0 : 1.0;
  return -std::expm1(-static_cast<double>(r) * rate(p));
}

double step_transition(double k) { return k - 1.0 + k * std::exp(-k); }

double step_cdf_approx(double k, double x) {
  if (!(k > 0.0)) throw DomainError("step_cdf_approx needs k > 0");
  const double x0 = step_transition(k);
  if (!(x > 0.0) || x < x0) {
    throw DomainError("x = " + std::to_string(x) + " is below the minimum " + std::to_string(std::max(x0, 0.0)));
  }
  return std::expm1(-(x - x0)) / std::expm1(-x);
}

double step_crossing(double k, double level) {
  if (!(level > 0.0 && level < 1.0)) throw DomainError("crossing level must lie in (0, 1)");
  double lo = std::max(step_transition(k), 0.0);
  double hi = lo + 1.0;
  while (step_cdf_approx(k, hi) < level) hi = lo + 2.0 * (hi - lo);
  // 200 halvings reach adjacent doubles from any bracket.
  for (int i = 0; i < 200 && lo < hi; ++i) {
    const double mid = lo + (hi - lo) / 2.0;
    if (mid <= lo || mid >= hi) break;
    if (mid > 0.0 && step_cdf_approx(k, mid) < level) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

}  // namespace headtail
