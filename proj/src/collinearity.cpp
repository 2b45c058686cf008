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

#include "genpos/collinearity.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace genpos {

namespace {

void require_distinct(const PairIndex& e1, const PairIndex& e2, const PairIndex& e3) {
  if (e1 == e2 || e1 == e3 || e2 == e3)
    throw std::invalid_argument("edge triple must consist of pairwise distinct edges");
}

PolyMatrix3 collinearity_matrix(const std::array<PairIndex, 3>& rows) {
  PolyMatrix3 m;
  for (int r = 0; r < 3; ++r) {
    SymbolicPoint p = make_point(rows[r]);
    m[r] = {Polynomial::constant(1), std::move(p.x), std::move(p.y)};
  }
  return m;
}

}  // namespace

const char* pattern_name(PatternTag tag) {
  switch (tag) {
    case PatternTag::kTriangle: return "triangle";
    case PatternTag::kStar: return "star";
    case PatternTag::kPath: return "path";
    case PatternTag::kCherryPlusEdge: return "cherry_plus_edge";
    case PatternTag::kMatching: return "matching";
  }
  return "?";
}

PatternTag classify_tag(PairIndex e1, PairIndex e2, PairIndex e3) {
  require_distinct(e1, e2, e3);
  int v[6] = {e1.i(), e1.j(), e2.i(), e2.j(), e3.i(), e3.j()};
  std::sort(v, v + 6);
  int distinct = 1;
  for (int k = 1; k < 6; ++k) distinct += (v[k] != v[k - 1]);
  switch (distinct) {
    case 3: return PatternTag::kTriangle;
    case 5: return PatternTag::kCherryPlusEdge;
    case 6: return PatternTag::kMatching;
    default: break;
  }
  // 4 vertices: star iff some vertex lies in all three edges.
  for (int u : {e1.i(), e1.j()})
    if (e2.contains(u) && e3.contains(u)) return PatternTag::kStar;
  return PatternTag::kPath;
}

TriplePattern classify(PairIndex e1, PairIndex e2, PairIndex e3) {
  const PatternTag tag = classify_tag(e1, e2, e3);
  std::array<PairIndex, 3> edges = {e1, e2, e3};
  std::sort(edges.begin(), edges.end());

  auto multiplicity = [&edges](int u) {
    return static_cast<int>(edges[0].contains(u)) + edges[1].contains(u) + edges[2].contains(u);
  };
  std::vector<int> vertices;
  for (const auto& e : edges) {
    vertices.push_back(e.i());
    vertices.push_back(e.j());
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

  TriplePattern p{tag, {}};
  switch (tag) {
    case PatternTag::kTriangle:
      p.roles = vertices;
      break;
    case PatternTag::kStar: {
      int center = 0;
      for (int u : vertices)
        if (multiplicity(u) == 3) center = u;
      p.roles.push_back(center);
      for (int u : vertices)
        if (u != center) p.roles.push_back(u);
      break;
    }
    case PatternTag::kPath: {
      // Endpoints have multiplicity 1; start at the smaller one and walk.
      int start = 0;
      for (int u : vertices)
        if (multiplicity(u) == 1) {
          start = u;
          break;
        }
      p.roles.push_back(start);
      int prev = start;
      PairIndex const* last = nullptr;
      for (int step = 0; step < 3; ++step) {
        for (const auto& e : edges) {
          if (&e != last && e.contains(prev)) {
            prev = e.other(prev);
            last = &e;
            p.roles.push_back(prev);
            break;
          }
        }
      }
      break;
    }
    case PatternTag::kCherryPlusEdge: {
      int center = 0;
      for (int u : vertices)
        if (multiplicity(u) == 2) center = u;
      p.roles.push_back(center);
      std::vector<int> leaves;
      const PairIndex* lone = nullptr;
      for (const auto& e : edges) {
        if (e.contains(center))
          leaves.push_back(e.other(center));
        else
          lone = &e;
      }
      std::sort(leaves.begin(), leaves.end());
      p.roles.insert(p.roles.end(), leaves.begin(), leaves.end());
      p.roles.push_back(lone->i());
      p.roles.push_back(lone->j());
      break;
    }
    case PatternTag::kMatching:
      for (const auto& e : edges) {
        p.roles.push_back(e.i());
        p.roles.push_back(e.j());
      }
      break;
  }
  return p;
}

std::array<PairIndex, 3> pattern_rows(const TriplePattern& p) {
  const auto& r = p.roles;
  switch (p.tag) {
    case PatternTag::kTriangle:
      return {PairIndex(r[0], r[1]), PairIndex(r[0], r[2]), PairIndex(r[1], r[2])};
    case PatternTag::kStar:
      return {PairIndex(r[0], r[1]), PairIndex(r[0], r[2]), PairIndex(r[0], r[3])};
    case PatternTag::kPath:
      return {PairIndex(r[0], r[1]), PairIndex(r[1], r[2]), PairIndex(r[2], r[3])};
    case PatternTag::kCherryPlusEdge:
      return {PairIndex(r[0], r[1]), PairIndex(r[0], r[2]), PairIndex(r[3], r[4])};
    case PatternTag::kMatching:
      return {PairIndex(r[0], r[1]), PairIndex(r[2], r[3]), PairIndex(r[4], r[5])};
  }
  throw std::logic_error("pattern_rows: bad tag");
}

bool is_collinear_symbolic(PairIndex e1, PairIndex e2, PairIndex e3) {
  require_distinct(e1, e2, e3);
  std::array<PairIndex, 3> rows = {e1, e2, e3};
  std::sort(rows.begin(), rows.end());
  return det3(collinearity_matrix(rows)).is_zero();
}

bool is_collinear_fast(PairIndex e1, PairIndex e2, PairIndex e3) {
  return classify_tag(e1, e2, e3) == PatternTag::kTriangle;
}

std::pair<Monomial, Int> witness_coefficient(const TriplePattern& p) {
  const auto& r = p.roles;
  Monomial m;
  switch (p.tag) {
    case PatternTag::kTriangle:
      throw std::invalid_argument(
          "witness_coefficient: Triangle determinant vanishes identically, no witness");
    case PatternTag::kStar:
    case PatternTag::kPath:
      // t_l^2 t_k with l, k the last two roles.
      m = Monomial({{r[3], 2}, {r[2], 1}});
      break;
    case PatternTag::kCherryPlusEdge:
      // t_l^2 t_k: l the smaller lone-edge endpoint, k the larger leaf.
      m = Monomial({{r[3], 2}, {r[2], 1}});
      break;
    case PatternTag::kMatching:
      // t_m^2 t_i.
      m = Monomial({{r[4], 2}, {r[0], 1}});
      break;
  }
  const Polynomial det = det3(collinearity_matrix(pattern_rows(p)));
  Int coeff = det.coefficient(m);
  return {std::move(m), std::move(coeff)};
}

VerificationReport verify_claim1(int n, int jobs) {
  if (n < 2) throw std::invalid_argument("verify_claim1: n must be >= 2");
  if (jobs < 1) jobs = 1;
  const std::vector<PairIndex> edges = complete_graph_edges(n);
  const std::size_t m = edges.size();

  struct Partial {
    std::array<std::uint64_t, 5> counts{};
    std::vector<std::pair<std::uint64_t, TripleViolation>> violations;
  };
  std::vector<Partial> partials(jobs);

  auto worker = [&](int id) {
    Partial& out = partials[id];
    std::uint64_t counter = 0;
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b)
        for (std::size_t c = b + 1; c < m; ++c, ++counter) {
          if (static_cast<int>(counter % jobs) != id) continue;
          const PairIndex &ea = edges[a], &eb = edges[b], &ec = edges[c];
          const TriplePattern pat = classify(ea, eb, ec);
          out.counts[static_cast<int>(pat.tag)]++;
          const bool collinear = is_collinear_symbolic(ea, eb, ec);
          if (collinear != (pat.tag == PatternTag::kTriangle)) {
            out.violations.push_back(
                {counter,
                 {{ea, eb, ec},
                  std::string("symbolic collinearity disagrees with pattern ") +
                      pattern_name(pat.tag)}});
            continue;
          }
          if (pat.tag != PatternTag::kTriangle) {
            auto [mono, coeff] = witness_coefficient(pat);
            if (coeff == 0)
              out.violations.push_back(
                  {counter,
                   {{ea, eb, ec}, std::string("witness monomial coefficient is zero for ") +
                                      pattern_name(pat.tag)}});
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

  VerificationReport report;
  report.n = n;
  std::vector<std::pair<std::uint64_t, TripleViolation>> merged;
  for (const Partial& p : partials) {
    for (int k = 0; k < 5; ++k) report.per_pattern_counts[k] += p.counts[k];
    merged.insert(merged.end(), p.violations.begin(), p.violations.end());
  }
  std::sort(merged.begin(), merged.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [idx, v] : merged) report.violations.push_back(std::move(v));
  for (std::uint64_t c : report.per_pattern_counts) report.triples_checked += c;
  return report;
}

nlohmann::json verification_report_to_json(const VerificationReport& r) {
  nlohmann::json counts;
  for (int k = 0; k < 5; ++k)
    counts[pattern_name(static_cast<PatternTag>(k))] = r.per_pattern_counts[k];
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : r.violations) {
    nlohmann::json triple = nlohmann::json::array();
    for (const auto& e : v.edges) triple.push_back({e.i(), e.j()});
    violations.push_back({{"edges", triple}, {"reason", v.reason}});
  }
  return {{"n", r.n},
          {"triples_checked", r.triples_checked},
          {"per_pattern_counts", counts},
          {"violations", violations}};
}

}  // namespace genpos
