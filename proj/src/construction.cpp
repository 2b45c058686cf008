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

#include "genpos/construction.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace genpos {

PairIndex::PairIndex(int a, int b) {
  if (a < 1 || b < 1)
    throw std::invalid_argument("PairIndex: indices must be >= 1");
  if (a == b)
    throw std::invalid_argument("PairIndex: indices must be distinct, got {" +
                                std::to_string(a) + "," + std::to_string(b) + "}");
  i_ = std::min(a, b);
  j_ = std::max(a, b);
}

int PairIndex::other(int v) const {
  if (v == i_) return j_;
  if (v == j_) return i_;
  throw std::invalid_argument("PairIndex::other: not an endpoint");
}

SymbolicPoint make_point(PairIndex p) {
  const Polynomial ti = Polynomial::variable(p.i());
  const Polynomial tj = Polynomial::variable(p.j());
  return SymbolicPoint{p, ti + tj, ti * ti + ti * tj + tj * tj};
}

std::vector<PairIndex> complete_graph_edges(int n) {
  std::vector<PairIndex> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
  return edges;
}

PointSet full_prefix(int n) {
  if (n < 2) throw std::invalid_argument("full_prefix: n must be >= 2");
  PointSet ps;
  ps.n = n;
  for (const PairIndex& e : complete_graph_edges(n)) ps.points.push_back(make_point(e));
  return ps;
}

nlohmann::json point_set_to_json(const PointSet& ps) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& p : ps.points)
    points.push_back({{"i", p.index.i()},
                      {"j", p.index.j()},
                      {"x", polynomial_to_json(p.x)},
                      {"y", polynomial_to_json(p.y)}});
  return {{"n", ps.n}, {"points", points}};
}

PointSet point_set_from_json(const nlohmann::json& j) {
  PointSet ps;
  ps.n = j.at("n").get<int>();
  for (const auto& p : j.at("points")) {
    ps.points.push_back(SymbolicPoint{PairIndex(p.at("i").get<int>(), p.at("j").get<int>()),
                                      polynomial_from_json(p.at("x")),
                                      polynomial_from_json(p.at("y"))});
  }
  return ps;
}

}  // namespace genpos
