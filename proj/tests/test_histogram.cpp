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

#include <doctest.h>

#include <sstream>

#include "headtail/error.hpp"
#include "headtail/histogram.hpp"
#include "headtail/stream.hpp"
#include "oracles.hpp"

using namespace headtail;

namespace {

std::map<std::uint64_t, std::uint64_t> as_map(const DegreeHistogram& dh) { return dh.counts(); }

}  // namespace

TEST_CASE("exact_dh on small graphs") {
  CHECK(as_map(exact_dh(EdgeStream(generate(Clique{4})))) == std::map<std::uint64_t, std::uint64_t>{{3, 4}});
  CHECK(as_map(exact_dh(EdgeStream(generate(Star{5})))) == std::map<std::uint64_t, std::uint64_t>{{1, 5}, {5, 1}});

  // Parallel edges count as given.
  const EdgeList parallel = {{"a", "b"}, {"a", "b"}};
  const auto deg = oracle::endpoint_degrees(parallel);
  CHECK(deg.at("a") == 2);
  CHECK(as_map(exact_dh(EdgeStream(parallel))) == std::map<std::uint64_t, std::uint64_t>{{2, 2}});

  // A self-loop contributes two endpoint occurrences.
  const EdgeList loop = {{"a", "a"}, {"a", "b"}};
  CHECK(as_map(exact_dh(EdgeStream(loop))) == std::map<std::uint64_t, std::uint64_t>{{1, 1}, {3, 1}});
}

TEST_CASE("exact_dh reports the line of a malformed edge") {
  std::istringstream in("# header\na b\nlonely\n");
  const auto stream = EdgeStream::from_istream(in, "mem");
  try {
    exact_dh(stream);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("dh_to_ccdh partial sums") {
  DegreeHistogram clique;
  clique.add(3, 4);
  CHECK(dh_to_ccdh(clique) == Ccdh({4, 4, 4}));

  DegreeHistogram star;
  star.add(1, 5);
  star.add(5, 1);
  CHECK(dh_to_ccdh(star) == Ccdh({6, 1, 1, 1, 1}));

  DegreeHistogram pair;
  pair.add(2, 2);
  CHECK(dh_to_ccdh(pair) == Ccdh({2, 2}));

  CHECK_THROWS_AS(dh_to_ccdh(DegreeHistogram{}), DomainError);
}

TEST_CASE("ccdh_to_dh inverts dh_to_ccdh") {
  CHECK(as_map(ccdh_to_dh(Ccdh({4, 4, 4}))) == std::map<std::uint64_t, std::uint64_t>{{3, 4}});
  CHECK(as_map(ccdh_to_dh(Ccdh({6, 1, 1, 1, 1}))) == std::map<std::uint64_t, std::uint64_t>{{1, 5}, {5, 1}});
  CHECK(as_map(ccdh_to_dh(Ccdh({2, 2}))) == std::map<std::uint64_t, std::uint64_t>{{2, 2}});
  CHECK_THROWS_AS(ccdh_to_dh(Ccdh({1, 2})), DomainError);
  CHECK_THROWS_AS(ccdh_to_dh(Ccdh({2.5, 1})), DomainError);
}

TEST_CASE("round trip and mass conservation on random histograms") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    DegreeHistogram dh;
    const auto classes = 1 + rng.below(12);
    for (std::uint64_t i = 0; i < classes; ++i) dh.add(1 + rng.below(60), 1 + rng.below(40));
    const Ccdh ccdh = dh_to_ccdh(dh);
    CHECK(ccdh.is_monotone());
    CHECK(ccdh(1) == static_cast<double>(dh.vertex_count()));
    CHECK(ccdh_to_dh(ccdh) == dh);
  }
}

TEST_CASE("exact_dh is order independent") {
  const EdgeList edges = generate(ChungLu{500, 2.5, 6, 3});
  const auto base = exact_dh(EdgeStream(edges));
  CHECK(dh_to_ccdh(base) == Ccdh(oracle::ccdh_by_counting(edges)));
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    for (auto o : {Ordering::kRandom, Ordering::kDegreeDesc, Ordering::kDegreeAsc, Ordering::kNodeRandom}) {
      CHECK(exact_dh(reorder(EdgeStream(edges), o, seed)) == base);
    }
  }
}

TEST_CASE("Ccdh trims trailing zeros and reads zero beyond support") {
  const Ccdh c({3, 2, 0, 0});
  CHECK(c.max_degree() == 2);
  CHECK(c(0) == 0.0);
  CHECK(c(2) == 2.0);
  CHECK(c(99) == 0.0);
  CHECK(Ccdh({0, 0}).trivial());
  CHECK_THROWS_AS(Ccdh({1, -1}), DomainError);
}

TEST_CASE("monotone_clamp is a running max from the right") {
  const Ccdh raw({5, 2, 4, 1, 3});
  CHECK(monotone_clamp(raw) == Ccdh({5, 4, 4, 3, 3}));
  CHECK(monotone_clamp(raw).is_monotone());
  CHECK_FALSE(raw.is_monotone());
}

TEST_CASE("ccdh TSV") {
  const Ccdh c({6, 1.5, 0.25});
  std::ostringstream out;
  write_ccdh_tsv(out, c);
  CHECK(out.str() == "degree\tcount\n1\t6\n2\t1.5\n3\t0.25\n");
  std::istringstream in(out.str());
  CHECK(read_ccdh_tsv(in) == c);

  std::istringstream gap("degree\tcount\n1\t3\n3\t1\n");
  CHECK_THROWS_AS(read_ccdh_tsv(gap), ParseError);
  std::istringstream junk("degree\tcount\n1\tx\n");
  CHECK_THROWS_AS(read_ccdh_tsv(junk), ParseError);

  // Real-valued estimates survive the text round trip bit for bit.
  SplitMix64 rng(5);
  std::vector<double> values;
  for (int i = 0; i < 50; ++i) values.push_back(rng.uniform() * 1e6);
  std::sort(values.begin(), values.end(), std::greater<>());
  const Ccdh est(values);
  std::ostringstream out2;
  write_ccdh_tsv(out2, est);
  std::istringstream in2(out2.str());
  CHECK(read_ccdh_tsv(in2) == est);
}
