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

#include "headtail/histogram.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <unordered_map>

#include "headtail/error.hpp"
#include "headtail/sketch.hpp"
#include "headtail/stream.hpp"

namespace headtail {

void DegreeHistogram::add(std::uint64_t degree, std::uint64_t count) {
  if (degree == 0) throw DomainError("degree histogram entries need degree >= 1");
  if (count == 0) return;
  counts_[degree] += count;
  vertices_ += count;
}

std::uint64_t DegreeHistogram::count(std::uint64_t degree) const {
  const auto it = counts_.find(degree);
  return it == counts_.end() ? 0 : it->second;
}

std::uint64_t DegreeHistogram::max_degree() const noexcept {
  return counts_.empty() ? 0 : counts_.rbegin()->first;
}

Ccdh::Ccdh(std::vector<double> values) : values_(std::move(values)) {
  for (double v : values_) {
    if (!std::isfinite(v) || v < 0.0) throw DomainError("ccdh values must be finite and non-negative");
  }
  while (!values_.empty() && values_.back() == 0.0) values_.pop_back();
}

bool Ccdh::is_monotone() const noexcept {
  return std::is_sorted(values_.rbegin(), values_.rend());
}

DegreeHistogram exact_dh(const EdgeStream& stream) {
  std::unordered_map<std::string, std::uint64_t, LabelHash, std::equal_to<>> degree;
  auto bump = [&](std::string_view w) {
    if (auto it = degree.find(w); it != degree.end()) {
      ++it->second;
    } else {
      degree.emplace(std::string(w), 1);
    }
  };
  stream.for_each([&](std::string_view u, std::string_view v) {
    bump(u);
    bump(v);
  });
  DegreeHistogram dh;
  for (const auto& [label, d] : degree) dh.add(d);
  return dh;
}

void require_nontrivial(const Ccdh& ccdh, const char* what) {
  if (ccdh.trivial()) throw DomainError(std::string("trivial ccdh: ") + what);
}

Ccdh dh_to_ccdh(const DegreeHistogram& dh) {
  if (dh.empty()) throw DomainError("trivial histogram");
  std::vector<double> values(dh.max_degree(), 0.0);
  std::uint64_t running = 0;
  auto it = dh.counts().rbegin();
  for (std::uint64_t d = dh.max_degree(); d >= 1; --d) {
    if (it != dh.counts().rend() && it->first == d) {
      running += it->second;
      ++it;
    }
    values[d - 1] = static_cast<double>(running);
  }
  return Ccdh(std::move(values));
}

DegreeHistogram ccdh_to_dh(const Ccdh& ccdh) {
  if (!ccdh.is_monotone()) throw DomainError("ccdh is not monotone non-increasing");
  DegreeHistogram dh;
  const auto values = ccdh.values();
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] != std::floor(values[i])) throw DomainError("ccdh has non-integral values");
    const double next = i + 1 < values.size() ? values[i + 1] : 0.0;
    dh.add(i + 1, static_cast<std::uint64_t>(values[i] - next));
  }
  return dh;
}

Ccdh monotone_clamp(const Ccdh& ccdh) {
  std::vector<double> values(ccdh.values().begin(), ccdh.values().end());
  for (std::size_t i = values.size(); i-- > 1;) values[i - 1] = std::max(values[i - 1], values[i]);
  return Ccdh(std::move(values));
}

std::string format_number(double value) {
  if (value == std::floor(value) && std::fabs(value) < 9.0e15) {
    return std::to_string(static_cast<long long>(value));
  }
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

void write_ccdh_tsv(std::ostream& out, const Ccdh& ccdh) {
  out << "degree\tcount\n";
  const auto values = ccdh.values();
  for (std::size_t i = 0; i < values.size(); ++i) out << (i + 1) << '\t' << format_number(values[i]) << '\n';
}

void write_ccdh_tsv(const std::string& path, const Ccdh& ccdh) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  write_ccdh_tsv(out, ccdh);
  if (!out) throw IoError("write failed: " + path);
}

namespace {

template <class T>
bool parse_full(std::string_view text, T& value) {
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  return res.ec == std::errc() && res.ptr == text.data() + text.size();
}

}  // namespace

Ccdh read_ccdh_tsv(std::istream& in, const std::string& source_name) {
  std::string line;
  std::size_t lineno = 0;
  std::vector<double> values;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw ParseError(source_name, lineno, "expected degree<TAB>count");
    const std::string_view key(line.data(), tab);
    const std::string_view val(line.data() + tab + 1, line.size() - tab - 1);
    if (!header_seen) {
      header_seen = true;
      if (key == "degree") continue;
    }
    std::uint64_t degree = 0;
    double count = 0.0;
    if (!parse_full(key, degree) || !parse_full(val, count)) {
      throw ParseError(source_name, lineno, "expected degree<TAB>count");
    }
    if (degree != values.size() + 1) {
      throw ParseError(source_name, lineno, "degrees must be consecutive starting at 1");
    }
    if (!std::isfinite(count) || count < 0.0) throw ParseError(source_name, lineno, "count must be non-negative");
    values.push_back(count);
  }
  if (in.bad()) throw IoError("read failed: " + source_name);
  return Ccdh(std::move(values));
}

Ccdh read_ccdh_tsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return read_ccdh_tsv(in, path);
}

}  // namespace headtail
