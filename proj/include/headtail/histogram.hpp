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
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace headtail {

class EdgeStream;

/// n(d): number of vertices with degree exactly d. Zero counts are never stored.
class DegreeHistogram {
 public:
  DegreeHistogram() = default;

  /// Adds `count` vertices of degree `degree` (degree >= 1).
  void add(std::uint64_t degree, std::uint64_t count = 1);

  std::uint64_t count(std::uint64_t degree) const;
  std::uint64_t vertex_count() const noexcept { return vertices_; }
  std::uint64_t max_degree() const noexcept;
  bool empty() const noexcept { return counts_.empty(); }
  const std::map<std::uint64_t, std::uint64_t>& counts() const noexcept { return counts_; }

  friend bool operator==(const DegreeHistogram&, const DegreeHistogram&) = default;

 private:
  std::map<std::uint64_t, std::uint64_t> counts_;
  std::uint64_t vertices_ = 0;
};

/// N(d) for d = 1..max_degree(), stored densely; N(d) = 0 beyond max_degree().
///
/// Values are real because estimates are scaled counts. Trailing zeros are
/// trimmed on construction, so a non-empty Ccdh always has N(max_degree()) > 0.
/// Monotonicity is not enforced: raw estimates may be non-monotone, and
/// `is_monotone()` / `monotone_clamp()` are there for callers that need it.
class Ccdh {
 public:
  Ccdh() = default;
  /// values[i] is N(i + 1). Throws DomainError on negative or non-finite values.
  explicit Ccdh(std::vector<double> values);

  double operator()(std::uint64_t degree) const noexcept {
    return degree >= 1 && degree <= values_.size() ? values_[degree - 1] : 0.0;
  }

  std::uint64_t max_degree() const noexcept { return values_.size(); }
  /// A ccdh is trivial when it has no non-zero point.
  bool trivial() const noexcept { return values_.empty(); }
  bool is_monotone() const noexcept;
  std::span<const double> values() const noexcept { return values_; }

  friend bool operator==(const Ccdh&, const Ccdh&) = default;

 private:
  std::vector<double> values_;
};

/// Exact degree histogram of a stream. Every endpoint occurrence counts, so
/// parallel edges are counted as given and a self-loop (u,u) adds 2 to d_u.
DegreeHistogram exact_dh(const EdgeStream& stream);

/// N(d) = sum_{r >= d} n(r). Throws DomainError("trivial histogram") on empty input.
Ccdh dh_to_ccdh(const DegreeHistogram& dh);

/// n(d) = N(d) - N(d+1). Requires a monotone ccdh with integral values.
DegreeHistogram ccdh_to_dh(const Ccdh& ccdh);

/// Running max from the right: the smallest monotone ccdh dominating the input.
Ccdh monotone_clamp(const Ccdh& ccdh);

/// Throws DomainError if the ccdh is trivial; `what` names the argument.
void require_nontrivial(const Ccdh& ccdh, const char* what);

/// TSV with a "degree\tcount" header and one row per degree 1..max_degree().
void write_ccdh_tsv(std::ostream& out, const Ccdh& ccdh);
void write_ccdh_tsv(const std::string& path, const Ccdh& ccdh);
/// Reads the format written by write_ccdh_tsv. Degrees must be consecutive from 1.
Ccdh read_ccdh_tsv(std::istream& in, const std::string& source_name = "<stream>");
Ccdh read_ccdh_tsv(const std::string& path);

/// Shortest decimal text that round-trips; integral values print without a fraction.
std::string format_number(double value);

}  // namespace headtail
