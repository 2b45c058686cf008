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

#ifndef GENPOS_COLLINEARITY_HPP_
#define GENPOS_COLLINEARITY_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "genpos/construction.hpp"
#include "genpos/polynomial.hpp"

namespace genpos {

// The isomorphism type of three distinct edges, by intersection pattern:
//   Triangle        {ij, jk, ik}   3 vertices
//   Star            {ij, ik, il}   4 vertices, one common to all edges
//   Path            {ij, jk, kl}   4 vertices, chain
//   CherryPlusEdge  {ij, ik, lm}   5 vertices
//   Matching        {ij, kl, mn}   6 vertices
enum class PatternTag { kTriangle, kStar, kPath, kCherryPlusEdge, kMatching };

const char* pattern_name(PatternTag tag);

/// A classified edge triple with its role-labeled vertex indices.
///
/// roles, by tag:
///   Triangle:       {i, j, k}          ascending
///   Star:           {i, j, k, l}       center i, leaves ascending
///   Path:           {i, j, k, l}       in path order, i the smaller endpoint
///   CherryPlusEdge: {i, j, k, l, m}    center i, leaves j < k, lone edge l < m
///   Matching:       {i, j, k, l, m, n} edges ordered by smaller endpoint
struct TriplePattern {
  PatternTag tag;
  std::vector<int> roles;
};

// Classifies three pairwise-distinct edges; throws std::invalid_argument on a
// duplicate. The result is invariant under permutations of the inputs, and
// role assignment breaks ties by smallest index.
TriplePattern classify(PairIndex e1, PairIndex e2, PairIndex e3);

// Tag-only classification, allocation free. Same contract as classify.
PatternTag classify_tag(PairIndex e1, PairIndex e2, PairIndex e3);

// The three pair indices in determinant row order for this pattern:
//   Triangle P_ij,P_ik,P_jk; Star P_ij,P_ik,P_il; Path P_ij,P_jk,P_kl;
//   CherryPlusEdge P_ij,P_ik,P_lm; Matching P_ij,P_kl,P_mn.
std::array<PairIndex, 3> pattern_rows(const TriplePattern& p);

// True iff det3 of the rows (1, x_r, y_r) vanishes identically in the
// polynomial ring. Throws on duplicate edges.
bool is_collinear_symbolic(PairIndex e1, PairIndex e2, PairIndex e3);

// Pattern shortcut: collinear iff the triple is a Triangle. O(1).
bool is_collinear_fast(PairIndex e1, PairIndex e2, PairIndex e3);

// For a non-Triangle pattern, the designated witness monomial (t_l^2 t_k for
// Star/Path/CherryPlusEdge, t_m^2 t_i for Matching) and its coefficient in
// the row-ordered determinant. The coefficient is nonzero for every valid
// pattern instance. Throws std::invalid_argument for Triangle.
std::pair<Monomial, Int> witness_coefficient(const TriplePattern& p);

struct TripleViolation {
  std::array<PairIndex, 3> edges;
  std::string reason;
};

/// Outcome of the exhaustive sweep over all edge triples of K_n.
struct VerificationReport {
  int n = 0;
  std::uint64_t triples_checked = 0;
  // Indexed by PatternTag.
  std::array<std::uint64_t, 5> per_pattern_counts{};
  std::vector<TripleViolation> violations;
};

// Checks, for every triple of distinct edges of K_n, that the symbolic
// collinearity predicate agrees with the pattern shortcut and that every
// non-Triangle triple carries a nonzero witness coefficient. jobs > 1 splits
// the sweep across threads; the report is identical for any job count.
// Requires n >= 2.
VerificationReport verify_claim1(int n, int jobs = 1);

nlohmann::json verification_report_to_json(const VerificationReport& r);

}  // namespace genpos

#endif  // GENPOS_COLLINEARITY_HPP_
