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


// Experiment harness: runs a suite of RunSpecs and writes one trace per
// (problem, algo, dataset) into an output directory.
//
// Suite file (JSON):
//
//   {"runs": [{"problem": "dsg", "algos": ["supergreedy", "fw"],
//              "input": "k5k3.txt", "dataset": "k5k3", "iters": 200}]}
//
// Each entry takes "algo" or "algos"; optional keys are "dataset" (default:
// input file stem), "iters", "eps", "p", "anchors", "y" and "step_rule"
// ("harmonic" or "standard"). Relative paths resolve against the suite
// file's directory. Outputs:
//
//   <problem>__<algo>__<dataset>.csv   trace of each run
//   summary.csv                        dataset,status plus the summary line
//   mincut__reference__<dataset>.csv   Edmonds-Karp cut value and time, for
//                                      every mincut dataset in the suite

#ifndef RATIOFORGE_CLI_BENCH_H_
#define RATIOFORGE_CLI_BENCH_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "ratioforge/cli/run.h"

namespace ratioforge {

struct BenchRun {
  RunSpec spec;  // trace_path and summary_path are filled in by RunBench
  std::string dataset;
};

struct BenchSuite {
  std::vector<BenchRun> runs;
};

// Throws ParseError for malformed JSON or unknown problem/algo names.
BenchSuite ParseBenchSuite(std::istream& in, const std::string& source,
                           const std::string& base_dir);
BenchSuite LoadBenchSuite(const std::string& path);

struct BenchRecord {
  BenchRun run;
  int exit_code = kExitOk;
  std::string error;  // empty on success
  RunSummary summary;
};

struct BenchOptions {
  bool record_time = true;
  // Worker threads; 0 means hardware concurrency capped by the
  // RATIOFORGE_THREADS environment variable.
  int threads = 0;
};

// Runs every entry, writing outputs under `out_dir` (created if missing).
// Failed runs are recorded and the suite continues.
std::vector<BenchRecord> RunBench(const BenchSuite& suite,
                                  const std::string& out_dir,
                                  const BenchOptions& options = {});

// Worker count for `jobs` runs under `options`.
int BenchThreads(const BenchOptions& options, int jobs);

std::string BenchTraceName(const BenchRun& run);

}  // namespace ratioforge

#endif  // RATIOFORGE_CLI_BENCH_H_
