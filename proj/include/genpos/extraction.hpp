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

#ifndef GENPOS_EXTRACTION_HPP_
#define GENPOS_EXTRACTION_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "genpos/construction.hpp"

namespace genpos {

/// A set of points given by their pair indices, i.e. an edge set.
class EdgeSubset {
 public:
  EdgeSubset() = default;
  explicit EdgeSubset(std::vector<PairIndex> edges);  // sorts and dedups

  const std::vector<PairIndex>& edges() const { return edges_; }
  std::vector<int> vertex_set() const;
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  bool contains(const PairIndex& e) const;

  // Set difference, preserving canonical order.
  EdgeSubset minus(const EdgeSubset& o) const;

  bool operator==(const EdgeSubset&) const = default;

 private:
  std::vector<PairIndex> edges_;
};

enum class Side { kLeft, kRight };

/// A two-sided vertex assignment together with its cross edges.
struct Cut {
  std::map<int, Side> side_assignment;
  std::vector<PairIndex> cross_edges;
  std::uint64_t flips = 0;  // vertex flips performed by local search
};

// Seeded-random initial assignment, then repeatedly flips any vertex with
// strictly more same-side than cross incident edges (ascending vertex order,
// repeated passes) until none remains. Each flip raises the cut size, so at
// most |edges| flips happen; at the local optimum |cross_edges| >= |edges|/2.
// Deterministic given the seed.
Cut local_search_cut(const EdgeSubset& p, std::uint64_t seed);

// The cross edges of a locally optimal cut: at least half of p, and
// triangle-free (hence in general position as points).
EdgeSubset extract_general_position(const EdgeSubset& p, std::uint64_t seed);

// True iff no three of the points are collinear: sweeps all edge triples
// with the pattern predicate. Early-exits on the first triangle.
bool verify_general_position(const EdgeSubset& p);

// Spot-check hook: cross-checks the pattern predicate against the symbolic
// determinant on `samples` seeded-random triples of p (or on all triples if
// p has fewer). Returns the number of disagreements (0 expected).
std::size_t spot_check_symbolic(const EdgeSubset& p, std::size_t samples,
                                std::uint64_t seed);

}  // namespace genpos

#endif  // GENPOS_EXTRACTION_HPP_
