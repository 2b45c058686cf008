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

#include "genpos/numeric.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "genpos/collinearity.hpp"
#include "genpos/polynomial.hpp"

namespace genpos {

namespace {

// A uniform draw from [0, 2^bits), assembled from 64-bit engine words so the
// result is identical on every platform.
Int draw_bits(std::mt19937_64& rng, int bits) {
  Int value = 0;
  int produced = 0;
  while (produced < bits) {
    const int take = std::min(64, bits - produced);
    std::uint64_t word = rng();
    if (take < 64) word &= (std::uint64_t{1} << take) - 1;
    value |= Int(word) << produced;
    produced += take;
  }
  return value;
}

Rational draw_rational(std::mt19937_64& rng, int bits) {
  const Int numerator = draw_bits(rng, bits);
  Int denominator = draw_bits(rng, bits);
  while (denominator == 0) denominator = draw_bits(rng, bits);
  return Rational(numerator, denominator);
}

Int pow10(int digits) {
  Int p = 1;
  for (int k = 0; k < digits; ++k) p *= 10;
  return p;
}

}  // namespace

Instantiation instantiate(int n, std::uint64_t seed, int bit_size) {
  if (n < 2) throw std::invalid_argument("instantiate: n must be >= 2");
  if (bit_size < 8) throw std::invalid_argument("instantiate: bit_size must be >= 8");
  std::mt19937_64 rng(seed);
  Instantiation inst{n, seed, bit_size, {}};
  std::set<Rational> seen;
  while (static_cast<int>(inst.values.size()) < n) {
    Rational r = draw_rational(rng, bit_size);
    if (!seen.insert(r).second) continue;  // duplicate value: redraw
    inst.values.push_back(std::move(r));
  }
  return inst;
}

std::vector<NumericPoint> numeric_points(const Instantiation& inst) {
  std::map<int, Rational> assignment;
  for (int v = 1; v <= inst.n; ++v) assignment[v] = inst.values[v - 1];
  std::vector<NumericPoint> out;
  for (const SymbolicPoint& p : full_prefix(inst.n).points)
    out.push_back({p.index, evaluate(p.x, assignment), evaluate(p.y, assignment)});
  return out;
}

Rational numeric_collinearity_det(const NumericPoint& p1, const NumericPoint& p2,
                                  const NumericPoint& p3) {
  // Expansion along the all-ones column.
  return (p2.x - p1.x) * (p3.y - p1.y) - (p3.x - p1.x) * (p2.y - p1.y);
}

CertifyOutcome certify(const Instantiation& inst, int jobs) {
  if (jobs < 1) jobs = 1;
  const std::vector<NumericPoint> points = numeric_points(inst);
  const std::size_t m = points.size();

  struct Partial {
    std::uint64_t triangle = 0;
    std::uint64_t general = 0;
    // Lowest linear triple index whose non-Triangle determinant vanished.
    std::uint64_t offender = UINT64_MAX;
    std::array<PairIndex, 3> offending{PairIndex(1, 2), PairIndex(1, 2), PairIndex(1, 2)};
    bool triangle_defect = false;
  };
  std::vector<Partial> partials(jobs);

  auto worker = [&](int id) {
    Partial& out = partials[id];
    std::uint64_t counter = 0;
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b)
        for (std::size_t c = b + 1; c < m; ++c, ++counter) {
          if (static_cast<int>(counter % jobs) != id) continue;
          const bool triangle =
              classify_tag(points[a].index, points[b].index, points[c].index) ==
              PatternTag::kTriangle;
          const bool zero =
              numeric_collinearity_det(points[a], points[b], points[c]) == 0;
          if (triangle) {
            ++out.triangle;
            if (!zero) out.triangle_defect = true;
          } else {
            ++out.general;
            if (zero && counter < out.offender) {
              out.offender = counter;
              out.offending = {points[a].index, points[b].index, points[c].index};
            }
          }
        }
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (int id = 0; id < jobs; ++id) threads.emplace_back(worker, id);
    for (auto& t : threads) t.join();
  }

  CertificationReport report;
  report.n = inst.n;
  report.seed = inst.seed;
  report.bit_size = inst.bit_size;
  const Partial* worst = nullptr;
  for (const Partial& p : partials) {
    if (p.triangle_defect)
      throw std::logic_error(
          "certify: a Triangle determinant evaluated nonzero; the vanishing is a "
          "polynomial identity, so this is an implementation defect");
    report.triangle_triples += p.triangle;
    report.general_triples += p.general;
    if (p.offender != UINT64_MAX && (worst == nullptr || p.offender < worst->offender))
      worst = &p;
  }
  if (worst != nullptr) return ResampleNeeded{worst->offending};
  report.triples_checked = report.triangle_triples + report.general_triples;
  report.failure_bound =
      Rational(Int(3) * report.general_triples, Int(1) << (2 * inst.bit_size));
  return report;
}

std::optional<CertifiedInstantiation> certify_with_resampling(int n, std::uint64_t seed,
                                                              int bit_size,
                                                              int max_resamples, int jobs) {
  for (int attempt = 0; attempt <= max_resamples; ++attempt) {
    Instantiation inst = instantiate(n, seed + attempt, bit_size);
    CertifyOutcome outcome = certify(inst, jobs);
    if (auto* report = std::get_if<CertificationReport>(&outcome))
      return CertifiedInstantiation{std::move(inst), std::move(*report), attempt};
  }
  return std::nullopt;
}

std::string rational_to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational rational_from_string(const std::string& s) {
  const std::size_t slash = s.find('/');
  if (slash == std::string::npos) return Rational(Int(s));
  return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

std::string rational_to_decimal(const Rational& r, int digits) {
  if (digits < 1) throw std::invalid_argument("rational_to_decimal: digits must be >= 1");
  const bool negative = r < 0;
  const Int p = negative ? Int(-numerator(r)) : numerator(r);
  const Int q = denominator(r);
  const Int scale = pow10(digits);
  Int scaled = p * scale / q;
  const Int remainder = p * scale % q;
  if (2 * remainder >= q) ++scaled;  // round half away from zero
  std::string frac = Int(scaled % scale).str();
  frac.insert(frac.begin(), digits - frac.size(), '0');
  std::string out = Int(scaled / scale).str() + "." + frac;
  if (negative && scaled != 0) out.insert(out.begin(), '-');
  return out;
}

std::string export_numeric(const CertifiedInstantiation& cert, ExportFormat format,
                           int precision) {
  if (precision < 0)
    throw std::invalid_argument("export_numeric: precision must be >= 0");
  auto render = [precision](const Rational& r) {
    return precision == 0 ? rational_to_string(r) : rational_to_decimal(r, precision);
  };
  const std::vector<NumericPoint> points = numeric_points(cert.instantiation);

  if (format == ExportFormat::kCsv) {
    std::string out = "i,j,x,y\n";
    for (const NumericPoint& p : points) {
      out += std::to_string(p.index.i()) + "," + std::to_string(p.index.j()) + "," +
             render(p.x) + "," + render(p.y) + "\n";
    }
    return out;
  }

  nlohmann::json json_points = nlohmann::json::array();
  for (const NumericPoint& p : points)
    json_points.push_back(
        {{"i", p.index.i()}, {"j", p.index.j()}, {"x", render(p.x)}, {"y", render(p.y)}});
  nlohmann::json j = {{"n", cert.instantiation.n},
                      {"seed", cert.instantiation.seed},
                      {"bit_size", cert.instantiation.bit_size},
                      {"points", json_points}};
  return j.dump(2) + "\n";
}

nlohmann::json certification_report_to_json(const CertificationReport& r) {
  return {{"n", r.n},
          {"seed", r.seed},
          {"bit_size", r.bit_size},
          {"triples_checked", r.triples_checked},
          {"triangle_triples", r.triangle_triples},
          {"general_triples", r.general_triples},
          {"failure_bound", rational_to_string(r.failure_bound)}};
}

nlohmann::json resample_needed_to_json(const ResampleNeeded& r) {
  nlohmann::json edges = nlohmann::json::array();
  for (const PairIndex& e : r.offending) edges.push_back({e.i(), e.j()});
  return {{"resample_needed", true}, {"offending", edges}};
}

std::vector<NumericPoint> parse_numeric_csv(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line) || line != "i,j,x,y")
    throw std::invalid_argument("parse_numeric_csv: missing i,j,x,y header");
  std::vector<NumericPoint> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(row, field, ',')) fields.push_back(field);
    if (fields.size() != 4)
      throw std::invalid_argument("parse_numeric_csv: expected 4 fields, got line: " + line);
    out.push_back({PairIndex(std::stoi(fields[0]), std::stoi(fields[1])),
                   rational_from_string(fields[2]), rational_from_string(fields[3])});
  }
  return out;
}

NumericExport numeric_export_from_json(const nlohmann::json& j) {
  NumericExport out;
  out.n = j.at("n").get<int>();
  out.seed = j.at("seed").get<std::uint64_t>();
  out.bit_size = j.at("bit_size").get<int>();
  for (const auto& p : j.at("points"))
    out.points.push_back({PairIndex(p.at("i").get<int>(), p.at("j").get<int>()),
                          rational_from_string(p.at("x").get<std::string>()),
                          rational_from_string(p.at("y").get<std::string>())});
  return out;
}

}  // namespace genpos
