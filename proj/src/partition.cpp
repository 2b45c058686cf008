// Copyright 2026 The genpos Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "genpos/partition.hpp"

#include <cmath>
#include <stdexcept>

#include "genpos/gf16.hpp"

namespace genpos {

bool is_valid_coloring(const EdgeColoring& c) {
  if (c.n < 2) throw std::invalid_argument("EdgeColoring: n must be >= 2");
  if (c.m < 1) throw std::invalid_argument("EdgeColoring: m must be >= 1");
  const std::size_t expected = static_cast<std::size_t>(c.n) * (c.n - 1) / 2;
  if (c.color.size() != expected)
    throw std::invalid_argument("EdgeColoring: coloring must be total on K_n");
  for (const auto& [e, col] : c.color) {
    if (e.j() > c.n) throw std::invalid_argument("EdgeColoring: edge outside K_n");
    if (col < 1 || col > c.m)
      throw std::invalid_argument("EdgeColoring: color outside 1..m");
  }
  for (int i = 1; i <= c.n; ++i)
    for (int j = i + 1; j <= c.n; ++j)
      for (int k = j + 1; k <= c.n; ++k) {
        const int cij = c.color.at(PairIndex(i, j));
        if (cij == c.color.at(PairIndex(j, k)) && cij == c.color.at(PairIndex(i, k)))
          return false;
      }
  return true;
}

std::vector<EdgeSubset> color_classes(const EdgeColoring& c) {
  std::vector<std::vector<PairIndex>> buckets(c.m);
  for (const auto& [e, col] : c.color) buckets[col - 1].push_back(e);
  std::vector<EdgeSubset> classes;
  classes.reserve(c.m);
  for (auto& b : buckets) classes.emplace_back(std::move(b));
  return classes;
}

PartitionResult iterative_halving_partition(const EdgeSubset& p, std::uint64_t seed) {
  PartitionResult result;
  result.source_size = p.size();
  EdgeSubset remainder = p;
  for (std::uint64_t round = 0; !remainder.empty(); ++round) {
    EdgeSubset cls = extract_general_position(remainder, seed + round);
    remainder = remainder.minus(cls);
    result.classes.push_back(std::move(cls));
  }
  return result;
}

namespace {

// Backtracking feasibility search for a triangle-free m-coloring of K_n.
// Edges are colored in lexicographic order; when edge (i,j) is colored only
// triangles {v,i,j} with v < i are fully colored, so those are the only
// checks needed.
class ColoringSearch {
 public:
  ColoringSearch(int n, int m) : n_(n), m_(m), edges_(complete_graph_edges(n)) {}

  std::optional<EdgeColoring> run() {
    colors_.assign(edges_.size(), 0);
    if (!descend(0, 0)) return std::nullopt;
    EdgeColoring c{n_, m_, {}};
    for (std::size_t k = 0; k < edges_.size(); ++k) c.color.emplace(edges_[k], colors_[k]);
    return c;
  }

  std::uint64_t nodes_explored() const { return nodes_; }

 private:
  bool descend(std::size_t idx, int used) {
    if (idx == edges_.size()) return true;
    const int i = edges_[idx].i(), j = edges_[idx].j();
    const int limit = std::min(used + 1, m_);
    for (int c = 1; c <= limit; ++c) {
      bool mono = false;
      for (int v = 1; v < i && !mono; ++v)
        mono = color_of(v, i) == c && color_of(v, j) == c;
      if (mono) continue;
      colors_[idx] = c;
      ++nodes_;
      if (descend(idx + 1, std::max(used, c))) return true;
      colors_[idx] = 0;
    }
    return false;
  }

  // Edge (a,b) with a < b sits at index (a-1)*(2n-a)/2 + (b-a-1).
  int color_of(int a, int b) const {
    const std::size_t idx =
        static_cast<std::size_t>(a - 1) * (2 * n_ - a) / 2 + (b - a - 1);
    return colors_[idx];
  }

  int n_, m_;
  std::vector<PairIndex> edges_;
  std::vector<int> colors_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

MinColorsResult min_colors(int n, int budget) {
  if (n < 2) throw std::invalid_argument("min_colors: n must be >= 2");
  if (budget < 1) throw std::invalid_argument("min_colors: budget must be >= 1");
  MinColorsResult result;
  result.budget = budget;
  for (int m = 1; m <= budget; ++m) {
    ColoringSearch search(n, m);
    if (auto witness = search.run()) {
      result.value = m;
      result.witness = std::move(witness);
      return result;
    }
    result.exhausted.push_back({m, search.nodes_explored()});
  }
  return result;
}

EdgeColoring greenwood_gleason_coloring() {
  EdgeColoring c{16, 3, {}};
  for (int u = 1; u <= 16; ++u)
    for (int v = u + 1; v <= 16; ++v) {
      const GF16 difference = GF16(u - 1) + GF16(v - 1);
      c.color.emplace(PairIndex(u, v), difference.log() % 3 + 1);
    }
  return c;
}

namespace {

// Largest n with n(n-1)/2 <= k.
int largest_complete_prefix(std::uint64_t k) {
  auto fits = [k](std::uint64_t n) {
    return static_cast<unsigned __int128>(n) * (n - 1) / 2 <= k;
  };
  std::uint64_t n = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(k))) / 2.0);
  while (!fits(n)) --n;
  while (fits(n + 1)) ++n;
  return static_cast<int>(n);
}

const std::vector<RamseyFact>& ramsey_table() {
  static const std::vector<RamseyFact> table = {
      {"R(3)=3", 3, "verified-in-repo"},
      {"R(3,3)=6", 6, "verified-in-repo"},
      {"R(3,3,3)=17", 17, "cited"},
  };
  return table;
}

}  // namespace

CertificateReport lower_bound_certificate(std::uint64_t k) {
  if (k < 1) throw std::invalid_argument("lower_bound_certificate: k must be >= 1");
  CertificateReport report;
  report.k = k;
  report.forced_classes = 1;
  const int n = largest_complete_prefix(k);
  for (const RamseyFact& fact : ramsey_table()) {
    if (fact.threshold <= n) {
      ++report.forced_classes;
      report.facts_used.push_back(fact);
    }
  }
  return report;
}

nlohmann::json coloring_to_json(const EdgeColoring& c) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [e, col] : c.color) edges.push_back({e.i(), e.j(), col});
  return {{"n", c.n}, {"m", c.m}, {"edges", edges}};
}

EdgeColoring coloring_from_json(const nlohmann::json& j) {
  EdgeColoring c{j.at("n").get<int>(), j.at("m").get<int>(), {}};
  for (const auto& e : j.at("edges"))
    c.color.emplace(PairIndex(e.at(0).get<int>(), e.at(1).get<int>()), e.at(2).get<int>());
  return c;
}

nlohmann::json certificate_to_json(const CertificateReport& r) {
  nlohmann::json facts = nlohmann::json::array();
  for (const auto& f : r.facts_used)
    facts.push_back({{"ramsey", f.statement}, {"provenance", f.provenance}});
  return {{"k", r.k}, {"forced_classes", r.forced_classes}, {"facts_used", facts}};
}

nlohmann::json partition_result_to_json(const PartitionResult& r) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& cls : r.classes) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : cls.edges()) edges.push_back({e.i(), e.j()});
    classes.push_back(edges);
  }
  return {{"source_size", r.source_size},
          {"class_count", r.classes.size()},
          {"classes", classes}};
}

}  // namespace genpos
