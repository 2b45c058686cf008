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
//
// Command-line front end. Machine-readable JSON goes to stdout; one-line
// human summaries go to stderr. Exit codes: 0 success/verified, 1 property
// violated or search inconclusive, 2 usage or I/O error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "genpos/collinearity.hpp"
#include "genpos/construction.hpp"
#include "genpos/extraction.hpp"
#include "genpos/numeric.hpp"
#include "genpos/partition.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kViolated = 1;
constexpr int kUsage = 2;

// Writes to the given path, or to stdout when the path is empty.
int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return kOk;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open " << out_path << " for writing\n";
    return kUsage;
  }
  f << text;
  return kOk;
}

int emit_json(const nlohmann::json& j, const std::string& out_path) {
  return emit(j.dump(2) + "\n", out_path);
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  f >> j;
  return j;
}

// Input subsets arrive as a JSON list of [i, j] pairs.
genpos::EdgeSubset subset_from_json(const nlohmann::json& j) {
  std::vector<genpos::PairIndex> edges;
  for (const auto& e : j)
    edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return genpos::EdgeSubset(std::move(edges));
}

nlohmann::json edges_to_json(const std::vector<genpos::PairIndex>& edges) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : edges) out.push_back({e.i(), e.j()});
  return out;
}

int run_gen(int n, const std::string& out_path) {
  const genpos::PointSet ps = genpos::full_prefix(n);
  std::cerr << "gen: " << ps.points.size() << " symbolic points over t_1..t_" << n << "\n";
  return emit_json(genpos::point_set_to_json(ps), out_path);
}

int run_verify_claim(int n, int jobs) {
  const genpos::VerificationReport report = genpos::verify_claim1(n, jobs);
  std::cerr << "verify-claim: " << report.triples_checked << " triples, "
            << report.violations.size() << " violations\n";
  std::cout << genpos::verification_report_to_json(report).dump(2) << "\n";
  return report.violations.empty() ? kOk : kViolated;
}

int run_extract(const std::string& in_path, std::uint64_t seed, const std::string& out_path) {
  const genpos::EdgeSubset input = subset_from_json(read_json_file(in_path));
  const genpos::Cut cut = genpos::local_search_cut(input, seed);
  const genpos::EdgeSubset output(cut.cross_edges);

  std::vector<int> left, right;
  for (const auto& [v, side] : cut.side_assignment)
    (side == genpos::Side::kLeft ? left : right).push_back(v);
  nlohmann::json j = {{"input_size", input.edges().size()},
                      {"output_size", output.edges().size()},
                      {"edges", edges_to_json(output.edges())},
                      {"cut", {{"left", left}, {"right", right}}}};
  std::cerr << "extract: kept " << output.edges().size() << " of " << input.edges().size()
            << " edges (" << cut.flips << " flips)\n";
  return emit_json(j, out_path);
}

int run_partition(const std::string& in_path, int full_prefix_n, std::uint64_t seed) {
  genpos::EdgeSubset input;
  bool from_prefix = full_prefix_n > 0;
  if (from_prefix)
    input = genpos::EdgeSubset(genpos::complete_graph_edges(full_prefix_n));
  else
    input = subset_from_json(read_json_file(in_path));

  const genpos::PartitionResult result = genpos::iterative_halving_partition(input, seed);
  nlohmann::json j = genpos::partition_result_to_json(result);
  if (from_prefix) {
    // For a complete prefix the Ramsey certificate applies; report it so the
    // class count can be read against its lower bound.
    const auto cert = genpos::lower_bound_certificate(input.edges().size());
    j["lower_bound_classes"] = cert.forced_classes;
  }
  std::cerr << "partition: " << result.classes.size() << " general-position classes for "
            << result.source_size << " points\n";
  return emit_json(j, "");
}

int run_min_colors(int n, int budget) {
  const genpos::MinColorsResult result = genpos::min_colors(n, budget);
  nlohmann::json j = {{"n", n}, {"budget", budget}};
  nlohmann::json stats = nlohmann::json::array();
  for (const auto& s : result.exhausted)
    stats.push_back({{"m", s.m}, {"nodes_explored", s.nodes_explored}});
  j["exhausted"] = stats;
  if (result.value) {
    j["min_colors"] = *result.value;
    j["witness"] = genpos::coloring_to_json(*result.witness);
    std::cerr << "min-colors: K_" << n << " needs " << *result.value << " classes\n";
  } else {
    j["min_colors"] = nullptr;
    std::cerr << "min-colors: unknown within budget " << budget << "\n";
  }
  std::cout << j.dump(2) << "\n";
  return result.value ? kOk : kViolated;
}

int run_certify(int n, std::uint64_t seed, int bits, int jobs) {
  const genpos::Instantiation inst = genpos::instantiate(n, seed, bits);
  const genpos::CertifyOutcome outcome = genpos::certify(inst, jobs);
  if (const auto* report = std::get_if<genpos::CertificationReport>(&outcome)) {
    std::cerr << "certify: " << report->triples_checked << " triples, failure bound "
              << genpos::rational_to_string(report->failure_bound) << "\n";
    std::cout << genpos::certification_report_to_json(*report).dump(2) << "\n";
    return kOk;
  }
  const auto& resample = std::get<genpos::ResampleNeeded>(outcome);
  std::cerr << "certify: non-Triangle determinant vanished; retry with a fresh seed\n";
  std::cout << genpos::resample_needed_to_json(resample).dump(2) << "\n";
  return kViolated;
}

int run_export(int n, std::uint64_t seed, int bits, const std::string& format_name,
               int precision, const std::string& out_path) {
  const auto cert = genpos::certify_with_resampling(n, seed, bits);
  if (!cert) {
    std::cerr << "export: no certifiable instantiation within 5 resamples\n";
    return kViolated;
  }
  const auto format =
      format_name == "csv" ? genpos::ExportFormat::kCsv : genpos::ExportFormat::kJson;
  std::cerr << "export: seed " << cert->instantiation.seed << " certified after "
            << cert->resamples_used << " resamples\n";
  return emit(genpos::export_numeric(*cert, format, precision), out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact general-position point constructions on complete-graph edge sets"};
  app.require_subcommand(1);

  int gen_n = 0;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Emit the symbolic point set for t_1..t_n");
  gen->add_option("--n", gen_n, "Number of indeterminates (>= 2)")->required();
  gen->add_option("--out", gen_out, "Output file (default: stdout)");

  int verify_n = 8, verify_jobs = 1;
  auto* verify = app.add_subcommand(
      "verify-claim", "Exhaustively check collinear <=> Triangle over all edge triples");
  verify->add_option("--n", verify_n, "Number of indeterminates (default 8)");
  verify->add_option("--jobs", verify_jobs, "Worker threads (default 1)");

  std::string extract_in, extract_out;
  std::uint64_t extract_seed = 0;
  auto* extract =
      app.add_subcommand("extract", "Extract a half-density general-position subset");
  extract->add_option("--in", extract_in, "Input JSON: list of [i,j] pairs")->required();
  extract->add_option("--seed", extract_seed, "Cut seed (default 0)");
  extract->add_option("--out", extract_out, "Output file (default: stdout)");

  std::string partition_in;
  int partition_prefix = 0;
  std::uint64_t partition_seed = 0;
  auto* partition = app.add_subcommand(
      "partition", "Partition a point set into general-position classes by halving");
  auto* partition_in_opt =
      partition->add_option("--in", partition_in, "Input JSON: list of [i,j] pairs");
  auto* partition_prefix_opt = partition->add_option(
      "--full-prefix", partition_prefix, "Use the first N indeterminates' complete prefix");
  partition_in_opt->excludes(partition_prefix_opt);
  partition_prefix_opt->excludes(partition_in_opt);
  partition->add_option("--seed", partition_seed, "Halving seed (default 0)");

  int mc_n = 0, mc_budget = 4;
  auto* mc = app.add_subcommand(
      "min-colors", "Minimum triangle-free-class count for the complete prefix on K_n");
  mc->add_option("--n", mc_n, "Complete graph order (>= 2)")->required();
  mc->add_option("--budget", mc_budget, "Largest class count to try (default 4)");

  int certify_n = 8, certify_bits = 64, certify_jobs = 1;
  std::uint64_t certify_seed = 0;
  auto* certify = app.add_subcommand(
      "certify", "Instantiate at seeded rationals and certify numeric collinearity");
  certify->add_option("--n", certify_n, "Number of indeterminates (default 8)");
  certify->add_option("--seed", certify_seed, "Instantiation seed (default 0)");
  certify->add_option("--bits", certify_bits, "Numerator/denominator bit size (default 64)");
  certify->add_option("--jobs", certify_jobs, "Worker threads (default 1)");

  int export_n = 8, export_bits = 64, export_precision = 0;
  std::uint64_t export_seed = 0;
  std::string export_format = "json", export_out;
  auto* exp = app.add_subcommand("export", "Export a certified numeric point set");
  exp->add_option("--n", export_n, "Number of indeterminates (default 8)");
  exp->add_option("--seed", export_seed, "Instantiation seed (default 0)");
  exp->add_option("--bits", export_bits, "Numerator/denominator bit size (default 64)");
  exp->add_option("--format", export_format, "csv or json (default json)")
      ->check(CLI::IsMember({"csv", "json"}));
  exp->add_option("--precision", export_precision,
                  "0 = exact p/q, k >= 1 = k decimal digits (default 0)");
  exp->add_option("--out", export_out, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen) return run_gen(gen_n, gen_out);
    if (*verify) return run_verify_claim(verify_n, verify_jobs);
    if (*extract) return run_extract(extract_in, extract_seed, extract_out);
    if (*partition) {
      if (partition_prefix <= 0 && partition_in.empty()) {
        std::cerr << "error: partition needs exactly one of --in or --full-prefix\n";
        return kUsage;
      }
      return run_partition(partition_in, partition_prefix, partition_seed);
    }
    if (*mc) return run_min_colors(mc_n, mc_budget);
    if (*certify) return run_certify(certify_n, certify_seed, certify_bits, certify_jobs);
    if (*exp)
      return run_export(export_n, export_seed, export_bits, export_format, export_precision,
                        export_out);
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
