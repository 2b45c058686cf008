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

#ifndef GENPOS_PARTITION_HPP_
#define GENPOS_PARTITION_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "genpos/extraction.hpp"

namespace genpos {

/// A total coloring of the edges of K_n with colors 1..m. Valid iff no
/// triangle is monochromatic, which by the collinearity classification is
/// the same as every color class being a general-position point class.
struct EdgeColoring {
  int n = 0;
  int m = 0;
  std::map<PairIndex, int> color;
};

// Throws std::invalid_argument if the coloring is not total on K_n or uses a
// color outside 1..m; otherwise true iff no monochromatic triangle exists.
bool is_valid_coloring(const EdgeColoring& c);

// The m color classes as edge subsets (class k-1 holds color k's edges).
std::vector<EdgeSubset> color_classes(const EdgeColoring& c);

/// A partition of an edge subset into general-position classes.
struct PartitionResult {
  std::vector<EdgeSubset> classes;
  std::size_t source_size = 0;
};

// Repeatedly extracts a half-density general-position subset from the
// remainder until it is empty; round r uses seed + r. Produces at most
// floor(log2 k) + 1 classes for a k-edge input.
PartitionResult iterative_halving_partition(const EdgeSubset& p, std::uint64_t seed);

struct ColorSearchStat {
  int m = 0;
  std::uint64_t nodes_explored = 0;
};

struct MinColorsResult {
  // Smallest m <= budget admitting a valid coloring; empty if none does.
  std::optional<int> value;
  std::optional<EdgeColoring> witness;
  int budget = 0;
  // Exhausted-infeasible search stats, one entry per m that was ruled out.
  std::vector<ColorSearchStat> exhausted;
};

// Exact minimum by DFS backtracking over edges in lexicographic order with
// symmetry breaking: the first edge takes color 1 and color c is allowed
// only once colors 1..c-1 appear. Requires n >= 2 and budget >= 1.
MinColorsResult min_colors(int n, int budget);

// The classical 3-coloring of K_16: vertices are GF(16) elements and edge
// {u, v} is colored by the cubic-residue coset of u - v. Valid, with 40
// edges per color.
EdgeColoring greenwood_gleason_coloring();

struct RamseyFact {
  std::string statement;   // e.g. "R(3,3)=6"
  int threshold = 0;       // the Ramsey number itself
  std::string provenance;  // "verified-in-repo" | "cited"
};

/// Lower bound on the number of general-position classes needed for the
/// prefix of k points, derived from the Ramsey facts whose complete graph
/// fits inside it.
struct CertificateReport {
  std::uint64_t k = 0;
  int forced_classes = 0;
  std::vector<RamseyFact> facts_used;
};

// Requires k >= 1. The k-point prefix contains all edges of K_n for the
// largest n with n(n-1)/2 <= k; each table fact R(3,...,3) = N (m threes)
// with N <= n forces more than m classes.
CertificateReport lower_bound_certificate(std::uint64_t k);

// {"n", "m", "edges": [[i, j, color], ...]} in lexicographic edge order.
nlohmann::json coloring_to_json(const EdgeColoring& c);
EdgeColoring coloring_from_json(const nlohmann::json& j);

// {"k", "forced_classes", "facts_used": [{"ramsey", "provenance"}, ...]}.
nlohmann::json certificate_to_json(const CertificateReport& r);

nlohmann::json partition_result_to_json(const PartitionResult& r);

}  // namespace genpos

#endif  // GENPOS_PARTITION_HPP_
