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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "genpos/partition.hpp"

namespace genpos {
namespace {

EdgeColoring make_coloring(int n, int m, std::vector<std::pair<PairIndex, int>> entries) {
  EdgeColoring c{n, m, {}};
  for (auto& [e, col] : entries) c.color.emplace(e, col);
  return c;
}

// Interprets partition classes as colors 1..m; requires the classes to cover
// all of K_n.
EdgeColoring coloring_from_partition(int n, const PartitionResult& part) {
  EdgeColoring c{n, static_cast<int>(part.classes.size()), {}};
  for (std::size_t k = 0; k < part.classes.size(); ++k)
    for (const PairIndex& e : part.classes[k].edges())
      c.color.emplace(e, static_cast<int>(k + 1));
  return c;
}

void check_partitions(const PartitionResult& part, const EdgeSubset& source) {
  std::size_t total = 0;
  std::set<PairIndex> seen;
  for (const EdgeSubset& cls : part.classes) {
    CHECK(!cls.empty());
    CHECK(verify_general_position(cls));
    total += cls.size();
    for (const PairIndex& e : cls.edges()) {
      CHECK(source.contains(e));
      CHECK(seen.insert(e).second);  // disjointness
    }
  }
  CHECK(total == source.size());  // covering
}

TEST_CASE("coloring validity: monochromatic triangles and structural checks") {
  CHECK(!is_valid_coloring(make_coloring(3, 1, {{{1, 2}, 1}, {{1, 3}, 1}, {{2, 3}, 1}})));
  CHECK(is_valid_coloring(make_coloring(3, 2, {{{1, 2}, 1}, {{1, 3}, 1}, {{2, 3}, 2}})));

  // Structurally broken colorings are rejected, not judged.
  CHECK_THROWS_AS(is_valid_coloring(make_coloring(3, 1, {{{1, 2}, 1}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      is_valid_coloring(make_coloring(3, 1, {{{1, 2}, 1}, {{1, 3}, 2}, {{2, 3}, 1}})),
      std::invalid_argument);
  CHECK_THROWS_AS(is_valid_coloring(EdgeColoring{1, 1, {}}), std::invalid_argument);
}

TEST_CASE("two five-cycles two-color K5 without monochromatic triangles") {
  const EdgeColoring c = make_coloring(
      5, 2,
      {{{1, 2}, 1}, {{2, 3}, 1}, {{3, 4}, 1}, {{4, 5}, 1}, {{1, 5}, 1},
       {{1, 3}, 2}, {{2, 4}, 2}, {{3, 5}, 2}, {{1, 4}, 2}, {{2, 5}, 2}});
  CHECK(is_valid_coloring(c));
  const auto classes = color_classes(c);
  REQUIRE(classes.size() == 2);
  CHECK(classes[0].size() == 5);
  CHECK(classes[1].size() == 5);
  CHECK(verify_general_position(classes[0]));
  CHECK(verify_general_position(classes[1]));
}

TEST_CASE("iterative halving: small examples") {
  const PartitionResult one = iterative_halving_partition(EdgeSubset({{1, 2}}), 0);
  CHECK(one.classes.size() == 1);
  CHECK(one.source_size == 1);

  const EdgeSubset tri({{1, 2}, {2, 3}, {1, 3}});
  const PartitionResult two = iterative_halving_partition(tri, 0);
  CHECK(two.classes.size() == 2);
  check_partitions(two, tri);

  CHECK(iterative_halving_partition(EdgeSubset(), 0).classes.empty());
}

TEST_CASE("iterative halving: the 136-point prefix fits in 8 classes") {
  const EdgeSubset p(complete_graph_edges(17));
  REQUIRE(p.size() == 136);
  const PartitionResult part = iterative_halving_partition(p, 0);
  CHECK(part.source_size == 136);
  CHECK(part.classes.size() <= 8);  // floor(log2 136) + 1
  check_partitions(part, p);
}

TEST_CASE("iterative halving: class count is logarithmic on random subsets") {
  std::mt19937_64 rng(2026);
  const std::vector<PairIndex> all = complete_graph_edges(46);  // 1035 edges
  REQUIRE(all.size() >= 1000);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t size = 1 + rng() % 1000;
    std::vector<PairIndex> pool = all;
    for (std::size_t k = 0; k < size; ++k)
      std::swap(pool[k], pool[k + rng() % (pool.size() - k)]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(size), pool.end());
    const EdgeSubset p(pool);
    const PartitionResult part = iterative_halving_partition(p, rng());
    const std::size_t bound = std::bit_width(size);  // floor(log2 k) + 1
    REQUIRE(part.classes.size() <= bound);
    std::size_t total = 0;
    for (const EdgeSubset& cls : part.classes) total += cls.size();
    REQUIRE(total == size);
  }
}

TEST_CASE("partition classes form a valid coloring and vice versa") {
  for (int n = 3; n <= 8; ++n) {
    // Partition -> coloring.
    const EdgeSubset prefix(complete_graph_edges(n));
    const PartitionResult part = iterative_halving_partition(prefix, 1);
    check_partitions(part, prefix);
    CHECK(is_valid_coloring(coloring_from_partition(n, part)));

    // Coloring -> general-position classes.
    const MinColorsResult mc = min_colors(n, 4);
    REQUIRE(mc.value.has_value());
    REQUIRE(mc.witness.has_value());
    for (const EdgeSubset& cls : color_classes(*mc.witness))
      CHECK(verify_general_position(cls));
  }
}

TEST_CASE("min_colors: exact values for small complete graphs") {
  const int expected[] = {0, 0, 1, 2, 2, 2, 3, 3, 3};  // index = n
  for (int n = 2; n <= 8; ++n) {
    const MinColorsResult r = min_colors(n, 4);
    REQUIRE(r.value.has_value());
    CHECK(*r.value == expected[n]);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->n == n);
    CHECK(r.witness->m == *r.value);
    CHECK(is_valid_coloring(*r.witness));
  }
  // Every infeasible m below the answer is exhausted with work recorded.
  const MinColorsResult six = min_colors(6, 4);
  REQUIRE(six.exhausted.size() == 2);
  CHECK(six.exhausted[0].m == 1);
  CHECK(six.exhausted[1].m == 2);
  CHECK(six.exhausted[1].nodes_explored > 0);
}

TEST_CASE("min_colors is nondecreasing in n") {
  int prev = 1;
  for (int n = 2; n <= 8; ++n) {
    const MinColorsResult r = min_colors(n, 4);
    REQUIRE(r.value.has_value());
    CHECK(*r.value >= prev);
    prev = *r.value;
  }
}

TEST_CASE("min_colors: budget exhaustion reports unknown") {
  const MinColorsResult r = min_colors(6, 2);
  CHECK(!r.value.has_value());
  CHECK(!r.witness.has_value());
  CHECK(r.budget == 2);
  REQUIRE(r.exhausted.size() == 2);
  CHECK(r.exhausted[0].m == 1);
  CHECK(r.exhausted[1].m == 2);
  CHECK_THROWS_AS(min_colors(6, 0), std::invalid_argument);
  CHECK_THROWS_AS(min_colors(1, 2), std::invalid_argument);
}

TEST_CASE("brute force cross-check: valid 2-colorings of K5 and K6") {
  // K5: 10 edges; count monochromatic-triangle-free 2-colorings directly.
  const std::vector<PairIndex> e5 = complete_graph_edges(5);
  int valid5 = 0;
  for (unsigned mask = 0; mask < (1u << 10); ++mask) {
    EdgeColoring c{5, 2, {}};
    for (std::size_t k = 0; k < e5.size(); ++k)
      c.color.emplace(e5[k], (mask >> k & 1) + 1);
    valid5 += is_valid_coloring(c);
  }
  CHECK(valid5 == 12);  // the two-5-cycle witnesses: 5!/(5*2*2) orderings x 2 swaps

  // K6: 15 edges; no valid 2-coloring exists.
  const std::vector<PairIndex> e6 = complete_graph_edges(6);
  int valid6 = 0;
  for (unsigned mask = 0; mask < (1u << 15); ++mask) {
    EdgeColoring c{6, 2, {}};
    for (std::size_t k = 0; k < e6.size(); ++k)
      c.color.emplace(e6[k], (mask >> k & 1) + 1);
    valid6 += is_valid_coloring(c);
  }
  CHECK(valid6 == 0);
}

TEST_CASE("greenwood-gleason: a valid 3-coloring of K16 with balanced classes") {
  const EdgeColoring gg = greenwood_gleason_coloring();
  CHECK(gg.n == 16);
  CHECK(gg.m == 3);
  CHECK(gg.color.size() == 120);
  CHECK(is_valid_coloring(gg));
  const auto classes = color_classes(gg);
  REQUIRE(classes.size() == 3);
  for (const EdgeSubset& cls : classes) {
    CHECK(cls.size() == 40);
    CHECK(verify_general_position(cls));
  }
}

TEST_CASE("lower bound certificates from the ramsey table") {
  CHECK(lower_bound_certificate(1).forced_classes == 1);
  CHECK(lower_bound_certificate(2).forced_classes == 1);
  CHECK(lower_bound_certificate(3).forced_classes == 2);    // triangle exists
  CHECK(lower_bound_certificate(14).forced_classes == 2);
  CHECK(lower_bound_certificate(15).forced_classes == 3);   // K6 inside
  CHECK(lower_bound_certificate(135).forced_classes == 3);
  CHECK(lower_bound_certificate(136).forced_classes == 4);  // K17 inside
  CHECK_THROWS_AS(lower_bound_certificate(0), std::invalid_argument);

  const CertificateReport r = lower_bound_certificate(136);
  CHECK(r.k == 136);
  REQUIRE(r.facts_used.size() == 3);
  CHECK(r.facts_used[0].statement == "R(3)=3");
  CHECK(r.facts_used[0].provenance == "verified-in-repo");
  CHECK(r.facts_used[1].statement == "R(3,3)=6");
  CHECK(r.facts_used[1].provenance == "verified-in-repo");
  CHECK(r.facts_used[2].statement == "R(3,3,3)=17");
  CHECK(r.facts_used[2].provenance == "cited");
}

TEST_CASE("sandwich: lower bound <= exact <= halving upper bound") {
  for (int n = 3; n <= 8; ++n) {
    const std::uint64_t k = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    const int lower = lower_bound_certificate(k).forced_classes;
    const MinColorsResult exact = min_colors(n, 4);
    REQUIRE(exact.value.has_value());
    const PartitionResult upper =
        iterative_halving_partition(EdgeSubset(complete_graph_edges(n)), 0);
    CHECK(lower <= *exact.value);
    CHECK(*exact.value <= static_cast<int>(upper.classes.size()));
  }
}

TEST_CASE("coloring json round-trips") {
  const EdgeColoring gg = greenwood_gleason_coloring();
  const nlohmann::json j = coloring_to_json(gg);
  CHECK(j["n"] == 16);
  CHECK(j["m"] == 3);
  REQUIRE(j["edges"].size() == 120);
  // Lexicographic edge order with explicit colors.
  CHECK(j["edges"][0][0] == 1);
  CHECK(j["edges"][0][1] == 2);

  const EdgeColoring back = coloring_from_json(j);
  CHECK(back.n == gg.n);
  CHECK(back.m == gg.m);
  CHECK(back.color == gg.color);
  CHECK(coloring_to_json(back).dump(2) == j.dump(2));
}

TEST_CASE("certificate and partition reports serialize") {
  const nlohmann::json cert = certificate_to_json(lower_bound_certificate(15));
  CHECK(cert["k"] == 15);
  CHECK(cert["forced_classes"] == 3);
  REQUIRE(cert["facts_used"].size() == 2);
  CHECK(cert["facts_used"][1]["ramsey"] == "R(3,3)=6");
  CHECK(cert["facts_used"][1]["provenance"] == "verified-in-repo");

  const PartitionResult part =
      iterative_halving_partition(EdgeSubset(complete_graph_edges(5)), 0);
  const nlohmann::json j = partition_result_to_json(part);
  CHECK(j["source_size"] == 10);
  CHECK(j["class_count"] == part.classes.size());
  std::size_t total = 0;
  for (const auto& cls : j["classes"]) total += cls.size();
  CHECK(total == 10);
}

}  // namespace
}  // namespace genpos
