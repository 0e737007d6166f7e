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
#include <filesystem>
#include <fstream>
#include <istream>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "headtail/error.hpp"

namespace headtail {

using Edge = std::pair<std::string, std::string>;
using EdgeList = std::vector<Edge>;

/// Reads whitespace-separated edge lines from `in` and calls fn(u, v) once per
/// edge, front to back. Lines starting with '#' or '%' and blank lines are
/// skipped; tokens after the second are ignored (weights, timestamps). A line
/// with a single token is a ParseError carrying its line number.
template <class Fn>
void scan_edges(std::istream& in, const std::string& source_name, Fn&& fn) {
  std::string line;
  std::size_t lineno = 0;
  constexpr std::string_view kSpace = " \t\r\v\f";
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view rest(line);
    const auto first = rest.find_first_not_of(kSpace);
    if (first == std::string_view::npos) continue;
    rest.remove_prefix(first);
    if (rest.front() == '#' || rest.front() == '%') continue;
    const auto u_end = std::min(rest.find_first_of(kSpace), rest.size());
    const std::string_view u = rest.substr(0, u_end);
    rest.remove_prefix(u_end);
    const auto v_begin = rest.find_first_not_of(kSpace);
    if (v_begin == std::string_view::npos) {
      throw ParseError(source_name, lineno, "expected two vertex tokens");
    }
    rest.remove_prefix(v_begin);
    const std::string_view v = rest.substr(0, std::min(rest.find_first_of(kSpace), rest.size()));
    fn(u, v);
  }
  if (in.bad()) throw IoError("read failed: " + source_name);
}

/// A replayable sequence of undirected edges.
///
/// File-backed streams re-open and parse the file on every `for_each`, so a
/// pass touches the input once, front to back, holding one line at a time.
/// Stream-backed sources (standard input) can be consumed only once.
class EdgeStream {
 public:
  explicit EdgeStream(EdgeList edges);
  static EdgeStream from_file(std::filesystem::path path);
  /// Single-pass source; `in` must outlive the EdgeStream.
  static EdgeStream from_istream(std::istream& in, std::string name = "<stdin>");

  template <class Fn>
  void for_each(Fn&& fn) const {
    if (const auto* list = std::get_if<std::shared_ptr<const EdgeList>>(&source_)) {
      for (const auto& [u, v] : **list) fn(std::string_view(u), std::string_view(v));
    } else if (const auto* path = std::get_if<std::filesystem::path>(&source_)) {
      std::ifstream in(*path);
      if (!in) throw IoError("cannot open " + path->string());
      scan_edges(in, path->string(), fn);
    } else {
      auto& single = std::get<SinglePass>(source_);
      if (*single.consumed) throw IoError(single.name + " can only be read once");
      *single.consumed = true;
      scan_edges(*single.in, single.name, fn);
    }
  }

  /// Copies the whole stream into memory.
  EdgeList materialize() const;

  /// Non-null when the stream is held in memory.
  const EdgeList* in_memory() const noexcept;

  std::string describe() const;

 private:
  struct SinglePass {
    std::istream* in;
    std::string name;
    std::shared_ptr<bool> consumed;
  };
  using Source = std::variant<std::shared_ptr<const EdgeList>, std::filesystem::path, SinglePass>;

  explicit EdgeStream(Source source) : source_(std::move(source)) {}

  Source source_;
};

enum class Ordering { kAsIs, kRandom, kDegreeDesc, kDegreeAsc, kNodeRandom };

/// CLI spelling: asis, random, deg-desc, deg-asc, node-random.
std::string_view to_string(Ordering ordering);
std::optional<Ordering> parse_ordering(std::string_view name);

/// Re-orders a stream. Materializes the edge list, so it sits outside the
/// streaming memory contract and is meant for experiments.
///
/// kRandom is a seeded uniform shuffle. The node orderings emit every edge in
/// the block of whichever endpoint comes first in the node order; nodes are
/// ranked by degree (ties broken by label) or by a seeded shuffle.
EdgeStream reorder(const EdgeStream& stream, Ordering ordering, std::uint64_t seed);

struct Clique {
  std::uint64_t n;
};
struct Star {
  std::uint64_t edges;
};
struct Matching {
  std::uint64_t edges;
};
/// Chung-Lu graph with power-law expected degrees w_i ∝ i^{-1/(exponent-1)},
/// scaled so the mean weight equals avg_degree.
struct ChungLu {
  std::uint64_t n;
  double exponent;
  double avg_degree;
  std::uint64_t seed;
};
using SyntheticSpec = std::variant<Clique, Star, Matching, ChungLu>;

/// Deterministic families use labels "0".."n-1"; the star's center is "0".
EdgeList generate(const SyntheticSpec& spec);

void write_edgelist(std::ostream& out, const EdgeList& edges);
void write_edgelist(const std::string& path, const EdgeList& edges);

}  // namespace headtail
