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

#include "headtail/stream.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <unordered_map>

#include "headtail/hash.hpp"
#include "headtail/sketch.hpp"

namespace headtail {

EdgeStream::EdgeStream(EdgeList edges)
    : source_(std::make_shared<const EdgeList>(std::move(edges))) {}

EdgeStream EdgeStream::from_file(std::filesystem::path path) {
  if (!std::filesystem::exists(path)) throw IoError("no such file: " + path.string());
  return EdgeStream(Source(std::move(path)));
}

EdgeStream EdgeStream::from_istream(std::istream& in, std::string name) {
  return EdgeStream(Source(SinglePass{&in, std::move(name), std::make_shared<bool>(false)}));
}

EdgeList EdgeStream::materialize() const {
  if (const auto* list = in_memory()) return *list;
  EdgeList edges;
  for_each([&](std::string_view u, std::string_view v) { edges.emplace_back(std::string(u), std::string(v)); });
  return edges;
}

const EdgeList* EdgeStream::in_memory() const noexcept {
  const auto* list = std::get_if<std::shared_ptr<const EdgeList>>(&source_);
  return list ? list->get() : nullptr;
}

std::string EdgeStream::describe() const {
  if (const auto* list = in_memory()) return "<memory: " + std::to_string(list->size()) + " edges>";
  if (const auto* path = std::get_if<std::filesystem::path>(&source_)) return path->string();
  return std::get<SinglePass>(source_).name;
}

std::string_view to_string(Ordering ordering) {
  switch (ordering) {
    case Ordering::kAsIs: return "asis";
    case Ordering::kRandom: return "random";
    case Ordering::kDegreeDesc: return "deg-desc";
    case Ordering::kDegreeAsc: return "deg-asc";
    case Ordering::kNodeRandom: return "node-random";
  }
  return "?";
}

std::optional<Ordering> parse_ordering(std::string_view name) {
  for (auto o : {Ordering::kAsIs, Ordering::kRandom, Ordering::kDegreeDesc, Ordering::kDegreeAsc,
                 Ordering::kNodeRandom}) {
    if (to_string(o) == name) return o;
  }
  return std::nullopt;
}

namespace {

template <class T>
void shuffle(std::vector<T>& items, std::uint64_t seed) {
  SplitMix64 rng(seed);
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = rng.below(i);
    std::swap(items[i - 1], items[j]);
  }
}

// Node-grouped ordering: rank nodes, then emit each edge in its lower-ranked
// endpoint's block, keeping input order inside a block.
EdgeList group_by_node(EdgeList edges, Ordering ordering, std::uint64_t seed) {
  std::unordered_map<std::string_view, std::uint64_t> degree;
  for (const auto& [u, v] : edges) {
    ++degree[u];
    ++degree[v];
  }
  std::vector<std::pair<std::string_view, std::uint64_t>> nodes(degree.begin(), degree.end());
  std::sort(nodes.begin(), nodes.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  if (ordering == Ordering::kDegreeDesc) {
    std::stable_sort(nodes.begin(), nodes.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  } else if (ordering == Ordering::kDegreeAsc) {
    std::stable_sort(nodes.begin(), nodes.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  } else {
    shuffle(nodes, seed);
  }
  std::unordered_map<std::string_view, std::size_t> rank;
  rank.reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) rank.emplace(nodes[i].first, i);

  std::vector<std::size_t> owner(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) owner[i] = std::min(rank[edges[i].first], rank[edges[i].second]);
  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return owner[a] < owner[b]; });

  EdgeList out;
  out.reserve(edges.size());
  for (std::size_t i : order) out.push_back(std::move(edges[i]));
  return out;
}

}  // namespace

EdgeStream reorder(const EdgeStream& stream, Ordering ordering, std::uint64_t seed) {
  EdgeList edges = stream.materialize();
  switch (ordering) {
    case Ordering::kAsIs:
      break;
    case Ordering::kRandom:
      shuffle(edges, seed);
      break;
    case Ordering::kDegreeDesc:
    case Ordering::kDegreeAsc:
    case Ordering::kNodeRandom:
      edges = group_by_node(std::move(edges), ordering, seed);
      break;
  }
  return EdgeStream(std::move(edges));
}

namespace {

EdgeList chung_lu(const ChungLu& spec) {
  if (spec.n < 2) throw ConfigError("chung_lu needs n >= 2");
  if (!(spec.exponent > 2.0)) throw ConfigError("chung_lu exponent must be > 2");
  if (!(spec.avg_degree > 0.0)) throw ConfigError("chung_lu avg_degree must be > 0");

  // Non-increasing weights w_i = c (i+1)^{-1/(exponent-1)} with mean avg_degree.
  const std::uint64_t n = spec.n;
  std::vector<double> w(n);
  const double gamma = 1.0 / (spec.exponent - 1.0);
  for (std::uint64_t i = 0; i < n; ++i) w[i] = std::pow(static_cast<double>(i + 1), -gamma);
  const double raw_mean = std::accumulate(w.begin(), w.end(), 0.0) / static_cast<double>(n);
  for (double& x : w) x *= spec.avg_degree / raw_mean;
  const double total = spec.avg_degree * static_cast<double>(n);

  // Miller-Hagberg: for each u, skip geometrically over v > u using the
  // current (upper bound) probability, then accept with the true/bound ratio.
  SplitMix64 rng(spec.seed);
  EdgeList edges;
  edges.reserve(static_cast<std::size_t>(total / 2.0 * 1.05));
  for (std::uint64_t u = 0; u + 1 < n; ++u) {
    std::uint64_t v = u + 1;
    double p = std::min(w[u] * w[v] / total, 1.0);
    while (v < n && p > 0.0) {
      if (p != 1.0) {
        const double r = 1.0 - rng.uniform();  // (0, 1]
        const double skip = std::floor(std::log(r) / std::log1p(-p));
        if (skip >= static_cast<double>(n - v)) break;
        v += static_cast<std::uint64_t>(skip);
      }
      if (v >= n) break;
      const double q = std::min(w[u] * w[v] / total, 1.0);
      if (rng.uniform() < q / p) edges.emplace_back(std::to_string(u), std::to_string(v));
      p = q;
      ++v;
    }
  }
  return edges;
}

}  // namespace

EdgeList generate(const SyntheticSpec& spec) {
  EdgeList edges;
  if (const auto* c = std::get_if<Clique>(&spec)) {
    if (c->n < 2) throw ConfigError("clique needs n >= 2");
    for (std::uint64_t i = 0; i < c->n; ++i) {
      for (std::uint64_t j = i + 1; j < c->n; ++j) edges.emplace_back(std::to_string(i), std::to_string(j));
    }
  } else if (const auto* s = std::get_if<Star>(&spec)) {
    if (s->edges < 1) throw ConfigError("star needs at least one edge");
    for (std::uint64_t i = 1; i <= s->edges; ++i) edges.emplace_back("0", std::to_string(i));
  } else if (const auto* m = std::get_if<Matching>(&spec)) {
    if (m->edges < 1) throw ConfigError("matching needs at least one edge");
    for (std::uint64_t i = 0; i < m->edges; ++i) edges.emplace_back(std::to_string(2 * i), std::to_string(2 * i + 1));
  } else {
    edges = chung_lu(std::get<ChungLu>(spec));
  }
  return edges;
}

void write_edgelist(std::ostream& out, const EdgeList& edges) {
  for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
}

void write_edgelist(const std::string& path, const EdgeList& edges) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  write_edgelist(out, edges);
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace headtail
