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

#include "genpos/extraction.hpp"

#include <algorithm>
#include <random>

#include "genpos/collinearity.hpp"

namespace genpos {

EdgeSubset::EdgeSubset(std::vector<PairIndex> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

std::vector<int> EdgeSubset::vertex_set() const {
  std::vector<int> vs;
  vs.reserve(edges_.size() * 2);
  for (const auto& e : edges_) {
    vs.push_back(e.i());
    vs.push_back(e.j());
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

bool EdgeSubset::contains(const PairIndex& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

EdgeSubset EdgeSubset::minus(const EdgeSubset& o) const {
  EdgeSubset r;
  std::set_difference(edges_.begin(), edges_.end(), o.edges_.begin(), o.edges_.end(),
                      std::back_inserter(r.edges_));
  return r;
}

Cut local_search_cut(const EdgeSubset& p, std::uint64_t seed) {
  const std::vector<int> vertices = p.vertex_set();
  const std::size_t nv = vertices.size();

  // Compact vertex ids for the adjacency structure.
  std::map<int, std::size_t> id;
  for (std::size_t k = 0; k < nv; ++k) id[vertices[k]] = k;
  std::vector<std::vector<std::size_t>> adjacent(nv);
  for (const auto& e : p.edges()) {
    const std::size_t a = id[e.i()], b = id[e.j()];
    adjacent[a].push_back(b);
    adjacent[b].push_back(a);
  }

  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> right(nv);
  for (std::size_t k = 0; k < nv; ++k) right[k] = static_cast<std::uint8_t>(rng() & 1);

  Cut cut;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v = 0; v < nv; ++v) {
      int same = 0;
      for (std::size_t u : adjacent[v]) same += (right[u] == right[v]);
      const int cross = static_cast<int>(adjacent[v].size()) - same;
      if (same > cross) {
        right[v] ^= 1;
        ++cut.flips;
        changed = true;
      }
    }
  }

  for (std::size_t k = 0; k < nv; ++k)
    cut.side_assignment[vertices[k]] = right[k] ? Side::kRight : Side::kLeft;
  for (const auto& e : p.edges())
    if (right[id[e.i()]] != right[id[e.j()]]) cut.cross_edges.push_back(e);
  return cut;
}

EdgeSubset extract_general_position(const EdgeSubset& p, std::uint64_t seed) {
  return EdgeSubset(local_search_cut(p, seed).cross_edges);
}

bool verify_general_position(const EdgeSubset& p) {
  const auto& e = p.edges();
  const std::size_t m = e.size();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      for (std::size_t c = b + 1; c < m; ++c)
        if (is_collinear_fast(e[a], e[b], e[c])) return false;
  return true;
}

std::size_t spot_check_symbolic(const EdgeSubset& p, std::size_t samples,
                                std::uint64_t seed) {
  const auto& e = p.edges();
  const std::size_t m = e.size();
  if (m < 3) return 0;
  std::mt19937_64 rng(seed);
  std::size_t disagreements = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    std::size_t a = rng() % m, b = rng() % m, c = rng() % m;
    if (a == b || a == c || b == c) continue;
    if (is_collinear_fast(e[a], e[b], e[c]) != is_collinear_symbolic(e[a], e[b], e[c]))
      ++disagreements;
  }
  return disagreements;
}

}  // namespace genpos
