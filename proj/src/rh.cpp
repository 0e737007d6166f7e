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

#include "headtail/rh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "headtail/error.hpp"

namespace headtail {

namespace {

// Slack so that an epsilon or delta sitting exactly on a breakpoint counts as
// inclusive despite rounding in (1 +- eps) d and (1 +- delta) F(d).
constexpr double kDegreeSlack = 1e-9;
constexpr double kValueSlack = 1e-12;

struct DegreeWindow {
  std::uint64_t lo;
  std::uint64_t hi;
};

DegreeWindow window(std::uint64_t d, double eps) {
  const double dd = static_cast<double>(d);
  const double lo = std::ceil((1.0 - eps) * dd - kDegreeSlack);
  const double hi = std::floor((1.0 + eps) * dd + kDegreeSlack);
  return {lo < 1.0 ? 1 : static_cast<std::uint64_t>(lo), static_cast<std::uint64_t>(hi)};
}

// Range queries over a ccdh split into maximal non-increasing pieces. Each
// query walks the pieces overlapping the window and binary-searches inside
// them, so a monotone ccdh costs O(log d_max) per query.
class ValueIndex {
 public:
  explicit ValueIndex(const Ccdh& g) : values_(g.values()) {
    const std::uint64_t n = values_.size();
    std::uint64_t first = 1;
    for (std::uint64_t d = 2; d <= n + 1; ++d) {
      if (d == n + 1 || at(d) > at(d - 1)) {
        pieces_.push_back({first, d - 1});
        first = d;
      }
    }
  }

  // Is there a d' in [lo, hi] with a <= G(d') <= b?
  bool any_within(std::uint64_t lo, std::uint64_t hi, double a, double b) const {
    if (lo > hi) return false;
    if (hi > values_.size() && a <= 0.0 && 0.0 <= b) return true;
    for (auto p = first_piece(lo); p != pieces_.end() && p->first <= hi; ++p) {
      const std::uint64_t x = std::max(lo, p->first);
      const std::uint64_t y = std::min(hi, p->last);
      const std::uint64_t i = first_at_most(x, y, b);
      if (i <= y && at(i) >= a) return true;
    }
    return false;
  }

  // Smallest d' in [lo, hi] with a <= G(d') <= b, or 0.
  std::uint64_t first_within(std::uint64_t lo, std::uint64_t hi, double a, double b) const {
    if (lo > hi) return 0;
    for (auto p = first_piece(lo); p != pieces_.end() && p->first <= hi; ++p) {
      const std::uint64_t x = std::max(lo, p->first);
      const std::uint64_t y = std::min(hi, p->last);
      const std::uint64_t i = first_at_most(x, y, b);
      if (i <= y && at(i) >= a) return i;
    }
    if (hi > values_.size() && a <= 0.0 && 0.0 <= b) return std::max<std::uint64_t>(lo, values_.size() + 1);
    return 0;
  }

  // Largest d' in [lo, hi] with a <= G(d') <= b, or 0.
  std::uint64_t last_within(std::uint64_t lo, std::uint64_t hi, double a, double b) const {
    if (lo > hi) return 0;
    if (hi > values_.size() && a <= 0.0 && 0.0 <= b) return hi;
    auto p = std::partition_point(pieces_.begin(), pieces_.end(), [hi](const Piece& q) { return q.first <= hi; });
    while (p != pieces_.begin()) {
      --p;
      if (p->last < lo) break;
      const std::uint64_t x = std::max(lo, p->first);
      const std::uint64_t y = std::min(hi, p->last);
      // Last index in [x, y] with value >= a; values are non-increasing.
      const std::uint64_t j = first_below(x, y, a);
      if (j > x && at(j - 1) <= b) return j - 1;
    }
    return 0;
  }

  // min |G(d') - target| over d' in [lo, hi]; infinity for an empty window.
  double nearest_gap(std::uint64_t lo, std::uint64_t hi, double target) const {
    double best = std::numeric_limits<double>::infinity();
    if (lo > hi) return best;
    if (hi > values_.size()) best = std::fabs(target);
    for (auto p = first_piece(lo); p != pieces_.end() && p->first <= hi; ++p) {
      const std::uint64_t x = std::max(lo, p->first);
      const std::uint64_t y = std::min(hi, p->last);
      const std::uint64_t i = first_at_most(x, y, target);
      if (i <= y) best = std::min(best, target - at(i));
      if (i > x) best = std::min(best, at(i - 1) - target);
    }
    return best;
  }

 private:
  struct Piece {
    std::uint64_t first;
    std::uint64_t last;
  };

  double at(std::uint64_t d) const { return values_[d - 1]; }

  std::vector<Piece>::const_iterator first_piece(std::uint64_t lo) const {
    return std::partition_point(pieces_.begin(), pieces_.end(), [lo](const Piece& p) { return p.last < lo; });
  }

  // First degree in [x, y] whose value is <= bound, or y + 1. Values are
  // non-increasing on [x, y].
  std::uint64_t first_at_most(std::uint64_t x, std::uint64_t y, double bound) const {
    std::uint64_t lo = x;
    std::uint64_t hi = y + 1;
    while (lo < hi) {
      const std::uint64_t mid = lo + (hi - lo) / 2;
      if (at(mid) > bound) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    return lo;
  }

  // First degree in [x, y] whose value is < bound, or y + 1.
  std::uint64_t first_below(std::uint64_t x, std::uint64_t y, double bound) const {
    std::uint64_t lo = x;
    std::uint64_t hi = y + 1;
    while (lo < hi) {
      const std::uint64_t mid = lo + (hi - lo) / 2;
      if (at(mid) >= bound) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    return lo;
  }

  std::span<const double> values_;
  std::vector<Piece> pieces_;
};

bool one_way_close(const Ccdh& f, const ValueIndex& g_index, double eps, double delta) {
  const auto values = f.values();
  for (std::uint64_t d = 1; d <= values.size(); ++d) {
    const double fd = values[d - 1];
    if (fd == 0.0) continue;
    const auto [lo, hi] = window(d, eps);
    const double slack = delta * fd + kValueSlack * fd;
    if (!g_index.any_within(lo, hi, fd - slack, fd + slack)) return false;
  }
  return true;
}

void require_slack(double eps, double delta) {
  if (!(eps >= 0.0) || !(delta >= 0.0)) throw DomainError("epsilon and delta must be non-negative");
}

// F -> G first: it needs no index on F, so a failing candidate costs no build.
bool close_with(const Ccdh& f, const Ccdh& g, const ValueIndex& g_index, double eps, double delta) {
  if (!one_way_close(f, g_index, eps, delta)) return false;
  const ValueIndex f_index(f);
  return one_way_close(g, f_index, eps, delta);
}

RhReport distance_with(const Ccdh& f, const Ccdh& g, const ValueIndex& g_index, double tolerance) {
  if (!(tolerance > 0.0)) throw ConfigError("tolerance must be > 0");
  const ValueIndex f_index(f);
  auto close = [&](double eps) { return one_way_close(f, g_index, eps, eps) && one_way_close(g, f_index, eps, eps); };

  if (close(0.0)) return {0.0, tolerance};
  double lo = 0.0;
  double hi = 1.0;
  while (!close(hi)) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e15) throw DomainError("rh_distance did not converge");
  }
  while (hi - lo > tolerance) {
    const double mid = lo + (hi - lo) / 2.0;
    if (close(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return {hi, tolerance};
}

}  // namespace

bool is_close(const Ccdh& f, const Ccdh& g, double eps, double delta) {
  require_nontrivial(f, "F");
  require_nontrivial(g, "G");
  require_slack(eps, delta);
  return close_with(f, g, ValueIndex(g), eps, delta);
}

bool is_close(const Ccdh& f, const Ccdh& g, const ClosenessParams& params) {
  return is_close(f, g, params.epsilon, params.delta);
}

RhReport rh_distance(const Ccdh& f, const Ccdh& g, double tolerance) {
  require_nontrivial(f, "F");
  require_nontrivial(g, "G");
  return distance_with(f, g, ValueIndex(g), tolerance);
}

struct RhReference::Impl {
  explicit Impl(Ccdh c) : ref(std::move(c)), index(ref) {}
  Ccdh ref;
  ValueIndex index;
};

RhReference::RhReference(Ccdh reference) {
  require_nontrivial(reference, "reference");
  impl_ = std::make_unique<Impl>(std::move(reference));
}
RhReference::~RhReference() = default;
RhReference::RhReference(RhReference&&) noexcept = default;
RhReference& RhReference::operator=(RhReference&&) noexcept = default;

const Ccdh& RhReference::ccdh() const noexcept { return impl_->ref; }

bool RhReference::is_close(const Ccdh& f, double eps, double delta) const {
  require_nontrivial(f, "F");
  require_slack(eps, delta);
  return close_with(f, impl_->ref, impl_->index, eps, delta);
}

RhReport RhReference::distance(const Ccdh& f, double tolerance) const {
  require_nontrivial(f, "F");
  return distance_with(f, impl_->ref, impl_->index, tolerance);
}

DeltaProfile delta_profile(const Ccdh& f, const Ccdh& g, double eps) {
  require_nontrivial(f, "F");
  require_nontrivial(g, "G");
  require_slack(eps, 0.0);
  const ValueIndex f_index(f);
  const ValueIndex g_index(g);
  DeltaProfile profile;
  const std::uint64_t top = std::max(f.max_degree(), g.max_degree());
  for (std::uint64_t d = 1; d <= top; ++d) {
    const auto [lo, hi] = window(d, eps);
    double delta = -1.0;
    if (const double fd = f(d); fd > 0.0) delta = std::max(delta, g_index.nearest_gap(lo, hi, fd) / fd);
    if (const double gd = g(d); gd > 0.0) delta = std::max(delta, f_index.nearest_gap(lo, hi, gd) / gd);
    if (delta >= 0.0) profile.emplace(d, delta);
  }
  return profile;
}

double ks_statistic(const Ccdh& f, const Ccdh& g) {
  require_nontrivial(f, "F");
  require_nontrivial(g, "G");
  const double f1 = f(1);
  const double g1 = g(1);
  if (f1 == 0.0 || g1 == 0.0) throw DomainError("KS statistic needs N(1) > 0 to normalize");
  const std::uint64_t top = std::max(f.max_degree(), g.max_degree());
  double ks = 0.0;
  for (std::uint64_t x = 1; x <= top; ++x) ks = std::max(ks, std::fabs(f(x) / f1 - g(x) / g1));
  return ks;
}

namespace {

// feasible[t] for t = 1..top: is the splice at t (eps, eps)-close to the reference?
std::vector<char> feasible_splices(const Ccdh& head, const ValueIndex& head_index, const Ccdh& tail,
                                   const ValueIndex& tail_index, const Ccdh& ref, const ValueIndex& ref_index,
                                   std::uint64_t top, double eps) {
  auto band = [eps](double v) { return eps * v + kValueSlack * v; };
  // Head points sit at d <= t, so the first failing one caps t from above.
  std::uint64_t t_max = top;
  for (std::uint64_t d = 1; d <= head.max_degree() && d <= t_max; ++d) {
    const double v = head(d);
    if (v == 0.0) continue;
    const auto [lo, hi] = window(d, eps);
    if (!ref_index.any_within(lo, hi, v - band(v), v + band(v))) t_max = d - 1;
  }
  // Tail points sit at d > t, so the last failing one bounds t from below.
  std::uint64_t t_min = 1;
  for (std::uint64_t d = tail.max_degree(); d >= t_min && d >= 1; --d) {
    const double v = tail(d);
    if (v == 0.0) continue;
    const auto [lo, hi] = window(d, eps);
    if (!ref_index.any_within(lo, hi, v - band(v), v + band(v))) t_min = d;
  }
  std::vector<char> ok(top + 1, 0);
  if (t_min > t_max) return ok;

  // A reference point is matched by the head part iff t >= first head match in
  // its window, and by the tail part iff t < last tail match. It rules out
  // t in [last tail match, first head match - 1].
  std::vector<std::int64_t> cover(top + 2, 0);
  for (std::uint64_t d = 1; d <= ref.max_degree(); ++d) {
    const double v = ref(d);
    if (v == 0.0) continue;
    const auto [lo, hi] = window(d, eps);
    const std::uint64_t h = head_index.first_within(lo, hi, v - band(v), v + band(v));
    const std::uint64_t g = tail_index.last_within(lo, hi, v - band(v), v + band(v));
    const std::uint64_t bad_lo = std::max<std::uint64_t>(g, 1);
    const std::uint64_t bad_hi = h == 0 ? top : std::min(h - 1, top);
    if (bad_lo <= bad_hi) {
      ++cover[bad_lo];
      --cover[bad_hi + 1];
    }
  }
  // Splices with no positive value are not ccdhs.
  std::uint64_t first_head = 0;
  for (std::uint64_t d = 1; d <= head.max_degree() && first_head == 0; ++d) first_head = head(d) > 0.0 ? d : 0;
  std::uint64_t last_tail = 0;
  for (std::uint64_t d = tail.max_degree(); d >= 1 && last_tail == 0; --d) last_tail = tail(d) > 0.0 ? d : 0;

  std::int64_t running = 0;
  for (std::uint64_t t = 1; t <= top; ++t) {
    running += cover[t];
    const bool trivial = (first_head == 0 || t < first_head) && t >= last_tail;
    ok[t] = running == 0 && t >= t_min && t <= t_max && !trivial;
  }
  return ok;
}

std::uint64_t first_feasible(const std::vector<char>& ok) {
  for (std::uint64_t t = 1; t < ok.size(); ++t) {
    if (ok[t]) return t;
  }
  return 0;
}

}  // namespace

SpliceChoice RhReference::best_splice(const Ccdh& head, const Ccdh& tail, double tolerance) const {
  require_nontrivial(head, "head");
  require_nontrivial(tail, "tail");
  if (!(tolerance > 0.0)) throw ConfigError("tolerance must be > 0");
  const std::uint64_t top = std::max(head.max_degree(), tail.max_degree());
  const ValueIndex head_index(head);
  const ValueIndex tail_index(tail);
  auto search = [&](double eps) {
    return first_feasible(feasible_splices(head, head_index, tail, tail_index, impl_->ref, impl_->index, top, eps));
  };

  if (const std::uint64_t t = search(0.0)) return {t, 0.0, tolerance};
  double lo = 0.0;
  double hi = 1.0;
  std::uint64_t best = search(hi);
  while (best == 0) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e15) throw DomainError("splice search did not converge");
    best = search(hi);
  }
  while (hi - lo > tolerance) {
    const double mid = lo + (hi - lo) / 2.0;
    if (const std::uint64_t t = search(mid)) {
      hi = mid;
      best = t;
    } else {
      lo = mid;
    }
  }
  return {best, hi, tolerance};
}

}  // namespace headtail
