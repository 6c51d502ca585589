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

#ifndef RATIOFORGE_SETFN_SOLVER_CONFIG_H_
#define RATIOFORGE_SETFN_SOLVER_CONFIG_H_

namespace ratioforge {

// Which discrete answer the solvers round their iterates into while running.
enum class Objective {
  kAuto,      // kMaxRatio for supermodular f, kMinValue for submodular f
  kMaxRatio,  // max f(S)/|S| over non-empty S
  kMinRatio,  // min f(S)/|S| over non-empty S
  kMinValue,  // min f(S) over all S, including the empty set
  kMaxValue,  // max f(S) over all S, including the empty set
};

// Mixing rule for the SuperGreedy++ average.
enum class StepRule {
  kHarmonic,  // 1/(t+1)
  kStandard,  // 2/(t+2)
};

struct Tolerances {
  double base_rel = 1e-9;  // tau_base = base_rel * (1 + |f(V)|)
  double drop = 1e-10;     // convex weights at or below this leave Wolfe's set
  double tie = 0.0;        // exact comparisons after deterministic arithmetic
};

struct SolverConfig {
  int max_iters = 100;  // T
  double eps = 0.0;     // stop once the duality gap is <= eps^2
  int trace_every = 1;  // gap cadence for SuperGreedy++
  Tolerances tolerances;
  StepRule step_rule = StepRule::kHarmonic;
  Objective objective = Objective::kAuto;
  bool record_time = true;  // when false, every elapsed_s is written as 0

  void Validate() const;
};

// Default gap cadence: every iteration up to 1e4 elements, every 10th above.
int DefaultTraceEvery(int n);

}  // namespace ratioforge

#endif  // RATIOFORGE_SETFN_SOLVER_CONFIG_H_
