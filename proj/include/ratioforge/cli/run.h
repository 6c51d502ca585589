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

// One solver run: load the input, dispatch to the requested algorithm, and
// report the trace and the summary line
//
//   problem,algo,best_obj,set_size,elapsed_s,iterations,certified
//
// best_obj is the ratio f(S)/|S| for dsg, pmean, hnsn and anchored, the
// s-t cut capacity for mincut, the largest h(S) = f(S) - y(S) found for
// membership, and |x|^2 of the returned point for mnp.

#ifndef RATIOFORGE_CLI_RUN_H_
#define RATIOFORGE_CLI_RUN_H_

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ratioforge/extract/decomposition.h"
#include "ratioforge/extract/membership_decide.h"
#include "ratioforge/extract/rounding.h"
#include "ratioforge/setfn/solver_config.h"
#include "ratioforge/universal/trace.h"

namespace ratioforge {

enum class ProblemKind { kDsg, kPMean, kHnsn, kAnchored, kMinCut, kMembership,
                         kMnp };
enum class AlgoKind { kSuperGreedy, kFw, kMnp, kFlow, kExactFlowBaseline,
                      kBrute };

const char* ProblemName(ProblemKind p);
const char* AlgoName(AlgoKind a);
std::optional<ProblemKind> ParseProblem(std::string_view name);
std::optional<AlgoKind> ParseAlgo(std::string_view name);
const std::vector<ProblemKind>& AllProblems();
const std::vector<AlgoKind>& AllAlgos();

// Algorithms with an implementation for `p`. brute is listed everywhere but
// additionally limited by n at run time.
std::vector<AlgoKind> ValidAlgos(ProblemKind p);

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitIncompatible = 3;
inline constexpr int kExitUncertified = 4;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IncompatibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunSpec {
  ProblemKind problem = ProblemKind::kDsg;
  AlgoKind algo = AlgoKind::kSuperGreedy;
  std::string input;
  std::string anchors;  // anchored
  std::string y;        // membership
  double p = 1.0;       // pmean
  int iters = 100;
  double eps = 0.0;
  StepRule step_rule = StepRule::kHarmonic;
  bool record_time = true;
  std::string trace_path;
  std::string summary_path;
  std::string point_path;          // minimum-norm point, one value per line
  std::string decomposition_path;  // block_id,level,element
};

inline constexpr char kSummaryHeader[] =
    "problem,algo,best_obj,set_size,elapsed_s,iterations,certified";

struct RunSummary {
  std::string problem;
  std::string algo;
  double best_obj = 0.0;
  int set_size = 0;
  double elapsed_s = 0.0;
  int iterations = 0;
  Certification certified = Certification::kHeuristic;

  std::string Line() const;
  // Throws ParseError.
  static RunSummary Parse(const std::string& line);
};

struct RunOutcome {
  RunSummary summary;
  ConvergenceTrace trace;
  Subset best_set;  // for mincut: the ground elements of S (without s)
  std::vector<double> point;  // mnp only
  std::optional<Decomposition> decomposition;
  std::optional<MembershipAnswer> answer;
  std::string note;  // human-readable extra line, may be empty
  int exit_code = kExitOk;
};

// Loads the input and runs. Throws UsageError, IncompatibleError or
// ParseError; writes no files.
RunOutcome Execute(const RunSpec& spec);

// Execute plus file output and messages; returns the exit code.
int RunAndReport(const RunSpec& spec, std::ostream& out, std::ostream& err);

}  // namespace ratioforge

#endif  // RATIOFORGE_CLI_RUN_H_
