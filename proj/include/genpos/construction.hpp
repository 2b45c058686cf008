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

#ifndef GENPOS_CONSTRUCTION_HPP_
#define GENPOS_CONSTRUCTION_HPP_

#include <compare>
#include <cstddef>
#include <functional>
#include <vector>

#include <json.hpp>

#include "genpos/polynomial.hpp"

namespace genpos {

/// An unordered pair {i, j} of distinct positive indices, stored normalized
/// with i < j. Doubles as an edge of a complete graph and as the index of
/// one constructed point.
class PairIndex {
 public:
  // Accepts either orientation; throws std::invalid_argument if the two
  // indices are equal or not both >= 1.
  PairIndex(int a, int b);

  int i() const { return i_; }
  int j() const { return j_; }
  bool contains(int v) const { return v == i_ || v == j_; }
  // The endpoint other than v; v must be an endpoint.
  int other(int v) const;

  friend auto operator<=>(const PairIndex&, const PairIndex&) = default;

 private:
  int i_, j_;
};

/// The point indexed by {i, j}: x = t_i + t_j, y = t_i^2 + t_i t_j + t_j^2.
struct SymbolicPoint {
  PairIndex index;
  Polynomial x;
  Polynomial y;
};

SymbolicPoint make_point(PairIndex p);

/// All points with indices in [1..n], one per pair, sorted by index.
struct PointSet {
  int n = 0;
  std::vector<SymbolicPoint> points;
};

// The complete prefix: all n(n-1)/2 points on indices 1..n. Requires n >= 2.
PointSet full_prefix(int n);

// All edges of K_n in lexicographic order (1,2), (1,3), ..., (n-1,n).
std::vector<PairIndex> complete_graph_edges(int n);

// {"n": n, "points": [{"i", "j", "x", "y"}, ...]} with polynomial coordinates
// in the canonical term serialization.
nlohmann::json point_set_to_json(const PointSet& ps);
PointSet point_set_from_json(const nlohmann::json& j);

}  // namespace genpos

template <>
struct std::hash<genpos::PairIndex> {
  std::size_t operator()(const genpos::PairIndex& p) const noexcept {
    return std::hash<long long>{}((static_cast<long long>(p.i()) << 32) ^ p.j());
  }
};

#endif  // GENPOS_CONSTRUCTION_HPP_
