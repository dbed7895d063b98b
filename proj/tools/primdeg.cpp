// Copyright 2026 The primdeg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <regex>
#include <string>

#include "CLI11.hpp"
#include "cli.hpp"

namespace {

bool parse_range(const std::string &s, std::size_t &lo, std::size_t &hi) {
  static const std::regex re(R"(^\s*(\d+)\s*(?:\.\.\s*(\d+))?\s*$)");
  std::smatch mm;
  if (!std::regex_match(s, mm, re)) return false;
  lo = std::stoul(mm[1]);
  hi = mm[2].matched ? std::stoul(mm[2]) : lo;
  return true;
}

} // namespace

int main(int argc, char **argv) {
  using namespace primdeg::cli;

  CLI::App app{"primdeg: primitivity and primitive degree of nonnegative tensors"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string out_path;
  bool pretty = false;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trace;
  bool include_wielandt = false;
  std::uint64_t max_entries = primdeg::kDefaultMaxEntries;
  app.add_option("--out", out_path, "Write output to this file instead of stdout");
  app.add_flag("--pretty", pretty, "Human-readable report instead of the machine format");
  app.add_option("--seed", seed, "Master seed for randomized commands (required by them)");
  app.add_option("--trace", trace, "analyze: append the fill trace of column j (1-based)");
  app.add_flag("--include-wielandt", include_wielandt,
               "experiment: add the lifted Wielandt tensor to every row");
  app.add_option("--max-entries", max_entries,
                 "Entry cap for materialized tensor powers")
      ->check(CLI::PositiveNumber);

  AnalyzeArgs an;
  auto *analyze_cmd = app.add_subcommand("analyze", "Decide primitivity and compute degrees");
  analyze_cmd->add_option("path", an.path, "TNS file")->required();

  GenerateArgs gen;
  auto *gen_cmd = app.add_subcommand("generate", "Write an instance in TNS format");
  gen_cmd->add_option("kind", gen.kind, "wielandt | random | random-primitive")
      ->required()
      ->check(CLI::IsMember({"wielandt", "random", "random-primitive"}));
  gen_cmd->add_option("--n", gen.n, "Dimension")->required();
  gen_cmd->add_option("--m", gen.m, "Order")->required();
  gen_cmd->add_option("--density", gen.density, "Entry probability in (0, 1]");
  gen_cmd->add_option("--max-tries", gen.max_tries, "random-primitive: rejection budget");
  gen_cmd->add_flag("--uniform-values", gen.uniform_values,
                    "Draw values uniform in (0, 1] instead of 1");

  OracleCheckArgs oc;
  std::optional<std::string> oc_path;
  auto *oc_cmd = app.add_subcommand("oracle-check", "Cross-check the engine against the oracles");
  oc_cmd->add_option("path", oc_path, "TNS file (otherwise generate with --kind)");
  oc_cmd->add_option("--kind", oc.kind, "wielandt | random | lift")
      ->check(CLI::IsMember({"wielandt", "random", "lift"}));
  oc_cmd->add_option("--n", oc.n, "Dimension");
  oc_cmd->add_option("--m", oc.m, "Order");
  oc_cmd->add_option("--density", oc.density, "Entry probability in (0, 1]");
  oc_cmd->add_option("--r-max", oc.power_rmax, "Largest power materialized by the power oracle");

  ExperimentArgs ex;
  std::string n_range = "2..5";
  std::string density_list = "0.5";
  auto *ex_cmd = app.add_subcommand("experiment", "Sweep random instances into a TSV table");
  ex_cmd->add_option("--n-range", n_range, "Dimensions, e.g. 2..6 or 4");
  ex_cmd->add_option("--m", ex.m, "Order")->required();
  ex_cmd->add_option("--density", density_list, "Comma-separated densities");
  ex_cmd->add_option("--trials", ex.trials, "Random instances per (n, density)");
  ex_cmd->add_option("--jobs", ex.jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return kInputError;
    }
  }
  std::ostream &out = out_path.empty() ? std::cout : file;

  if (*analyze_cmd) {
    an.pretty = pretty;
    an.trace_column = trace;
    return run_analyze(an, out, std::cerr);
  }
  if (*gen_cmd) {
    gen.seed = seed;
    return run_generate(gen, out, std::cerr);
  }
  if (*oc_cmd) {
    oc.path = oc_path;
    oc.seed = seed;
    oc.max_entries = max_entries;
    return run_oracle_check(oc, out, std::cerr);
  }
  if (*ex_cmd) {
    if (!parse_range(n_range, ex.n_min, ex.n_max)) {
      std::cerr << "error: bad --n-range '" << n_range << "'\n";
      return kInputError;
    }
    std::stringstream ss(density_list);
    for (std::string tok; std::getline(ss, tok, ',');) {
      try {
        ex.densities.push_back(std::stod(tok));
      } catch (const std::exception &) {
        std::cerr << "error: bad density '" << tok << "'\n";
        return kInputError;
      }
    }
    ex.seed = seed;
    ex.include_wielandt = include_wielandt;
    return run_experiment(ex, out, std::cerr);
  }
  return kInputError;
}
