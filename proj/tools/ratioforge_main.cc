// Copyright 2026 The RatioForge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// ratioforge solve --problem dsg --algo supergreedy --input g.txt ...
// ratioforge bench --suite suite.json --out results/

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "ratioforge/cli/bench.h"
#include "ratioforge/cli/run.h"
#include "ratioforge/setfn/text_format.h"

namespace {

using ratioforge::AlgoKind;
using ratioforge::ProblemKind;

template <typename Kind>
std::map<std::string, Kind> NameMap(const std::vector<Kind>& kinds,
                                    const char* (*name)(Kind)) {
  std::map<std::string, Kind> out;
  for (Kind k : kinds) out.emplace(name(k), k);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ratio and minimum-norm-point solvers over submodular and "
               "supermodular set functions"};
  app.require_subcommand(1);

  ratioforge::RunSpec spec;
  bool no_clock = false;
  std::string step_rule = "harmonic";
  [[maybe_unused]] unsigned seed = 0;
  CLI::App* solve = app.add_subcommand("solve", "Run one solver");
  solve->add_option("--problem", spec.problem, "Problem")
      ->required()
      ->transform(CLI::CheckedTransformer(
          NameMap(ratioforge::AllProblems(), ratioforge::ProblemName))
                     .description(""))
      ->option_text("dsg|pmean|hnsn|anchored|mincut|membership|mnp REQUIRED");
  solve->add_option("--algo", spec.algo, "Algorithm")
      ->required()
      ->transform(CLI::CheckedTransformer(
          NameMap(ratioforge::AllAlgos(), ratioforge::AlgoName))
                     .description(""))
      ->option_text("supergreedy|fw|mnp|flow|exact_flow_baseline|brute REQUIRED");
  solve->add_option("--input", spec.input, "Input file")->required();
  solve->add_option("--iters", spec.iters, "Iteration budget")
      ->check(CLI::PositiveNumber);
  solve->add_option("--eps", spec.eps, "Target: duality gap <= eps^2")
      ->check(CLI::NonNegativeNumber);
  solve->add_option("--trace", spec.trace_path, "Trace CSV output");
  solve->add_option("--summary", spec.summary_path,
                    "Summary CSV, appended to");
  solve->add_option("--p", spec.p, "Exponent for pmean");
  solve->add_option("--anchors", spec.anchors, "Anchor set file (anchored)");
  solve->add_option("--y", spec.y, "Query point file (membership)");
  solve->add_option("--seed", seed, "Reserved; every algorithm is deterministic");
  solve->add_option("--step-rule", step_rule, "SuperGreedy++ step size")
      ->check(CLI::IsMember({"harmonic", "standard"}));
  solve->add_option("--point", spec.point_path,
                    "Minimum-norm point output (mnp)");
  solve->add_option("--decomposition", spec.decomposition_path,
                    "Dense decomposition CSV output (mnp, exact algos)");
  solve->add_flag("--no-clock", no_clock, "Record 0 for all elapsed times");

  std::string suite_path;
  std::string out_dir;
  bool bench_no_clock = false;
  CLI::App* bench = app.add_subcommand("bench", "Run an experiment suite");
  bench->add_option("--suite", suite_path, "Suite JSON")->required();
  bench->add_option("--out", out_dir, "Output directory")->required();
  bench->add_flag("--no-clock", bench_no_clock,
                  "Record 0 for all elapsed times");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ratioforge::kExitOk : ratioforge::kExitUsage;
  }

  if (solve->parsed()) {
    spec.record_time = !no_clock;
    spec.step_rule = step_rule == "standard" ? ratioforge::StepRule::kStandard
                                             : ratioforge::StepRule::kHarmonic;
    return ratioforge::RunAndReport(spec, std::cout, std::cerr);
  }

  ratioforge::BenchSuite suite;
  try {
    suite = ratioforge::LoadBenchSuite(suite_path);
  } catch (const ratioforge::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return ratioforge::kExitParse;
  }
  ratioforge::BenchOptions options;
  options.record_time = !bench_no_clock;
  const auto records = ratioforge::RunBench(suite, out_dir, options);
  int failed = 0;
  for (const auto& rec : records) {
    if (rec.exit_code == ratioforge::kExitOk) continue;
    ++failed;
    std::cerr << ratioforge::BenchTraceName(rec.run) << ": exit "
              << rec.exit_code << ": " << rec.error << '\n';
  }
  std::cout << records.size() - failed << " of " << records.size()
            << " runs ok\n";
  return ratioforge::kExitOk;
}
