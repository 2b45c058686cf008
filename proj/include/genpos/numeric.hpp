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

#ifndef GENPOS_NUMERIC_HPP_
#define GENPOS_NUMERIC_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "genpos/construction.hpp"
#include "genpos/numbers.hpp"

namespace genpos {

/// Concrete rational values for t_1..t_n, pairwise distinct and reproducible
/// from (n, seed, bit_size).
struct Instantiation {
  int n = 0;
  std::uint64_t seed = 0;
  int bit_size = 0;
  std::vector<Rational> values;  // values[v-1] is t_v
};

// Draws n distinct rationals whose numerator and denominator are below
// 2^bit_size from a seeded generator. Requires n >= 2 and bit_size >= 8.
Instantiation instantiate(int n, std::uint64_t seed, int bit_size);

struct NumericPoint {
  PairIndex index;
  Rational x;
  Rational y;
};

// The instantiated points, each coordinate obtained by evaluating the
// symbolic coordinate polynomials. Sorted by index.
std::vector<NumericPoint> numeric_points(const Instantiation& inst);

// det of ((1,x1,y1),(1,x2,y2),(1,x3,y3)), exact.
Rational numeric_collinearity_det(const NumericPoint& p1, const NumericPoint& p2,
                                  const NumericPoint& p3);

/// Successful certification: across all edge triples the evaluated
/// determinant vanished exactly on the Triangle triples.
struct CertificationReport {
  int n = 0;
  std::uint64_t seed = 0;
  int bit_size = 0;
  std::uint64_t triples_checked = 0;
  std::uint64_t triangle_triples = 0;
  std::uint64_t general_triples = 0;
  // Schwartz-Zippel bound 3 * general_triples / 2^(2 * bit_size): the
  // probability that a fresh instantiation would need resampling.
  Rational failure_bound;
};

/// A non-Triangle triple evaluated to zero; re-instantiate with a new seed.
struct ResampleNeeded {
  std::array<PairIndex, 3> offending;
};

using CertifyOutcome = std::variant<CertificationReport, ResampleNeeded>;

// Evaluates the collinearity determinant exactly for every edge triple of
// the instantiated prefix. Triangle triples must give exactly zero (a
// polynomial identity; a nonzero value throws std::logic_error as an
// implementation defect). The first non-Triangle zero, in lexicographic
// triple order, is returned as ResampleNeeded. jobs > 1 parallelizes with
// identical output.
CertifyOutcome certify(const Instantiation& inst, int jobs = 1);

/// An instantiation together with the report that certified it.
struct CertifiedInstantiation {
  Instantiation instantiation;
  CertificationReport report;
  int resamples_used = 0;
};

// Tries seeds seed, seed+1, ..., seed+max_resamples until certification
// succeeds; empty if every attempt needed resampling.
std::optional<CertifiedInstantiation> certify_with_resampling(int n, std::uint64_t seed,
                                                              int bit_size,
                                                              int max_resamples = 5,
                                                              int jobs = 1);

enum class ExportFormat { kCsv, kJson };

// Renders the certified point set. precision = 0 gives exact "p/q" fields;
// precision >= 1 gives fixed-point decimals with that many fractional
// digits (within 10^-precision of the exact value). CSV has header i,j,x,y
// and LF line endings; JSON is {"n", "seed", "bit_size", "points"}.
std::string export_numeric(const CertifiedInstantiation& cert, ExportFormat format,
                           int precision = 0);

nlohmann::json certification_report_to_json(const CertificationReport& r);
nlohmann::json resample_needed_to_json(const ResampleNeeded& r);

// Parsers for the two export formats (exact mode), for round-tripping.
std::vector<NumericPoint> parse_numeric_csv(const std::string& csv);
struct NumericExport {
  int n = 0;
  std::uint64_t seed = 0;
  int bit_size = 0;
  std::vector<NumericPoint> points;
};
NumericExport numeric_export_from_json(const nlohmann::json& j);

// Exact "p/q" rendering (always with the slash, q > 0) and its inverse.
std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);
// Fixed-point decimal with `digits` fractional digits, round half away
// from zero.
std::string rational_to_decimal(const Rational& r, int digits);

}  // namespace genpos

#endif  // GENPOS_NUMERIC_HPP_
