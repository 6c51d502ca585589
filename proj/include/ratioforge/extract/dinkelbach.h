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

// Density improvement for max f(S)/|S| over supermodular f:
//
//   S_0 = V, lambda_0 = f(V)/n,
//   S_{k+1} = argmax_{S subset of S_k} f(S) - lambda_k |S|,
//   lambda_{k+1} = f(S_{k+1}) / |S_{k+1}|,
//
// stopping when the subproblem value drops to 0.

#ifndef RATIOFORGE_EXTRACT_DINKELBACH_H_
#define RATIOFORGE_EXTRACT_DINKELBACH_H_

#include <functional>
#include <stdexcept>
#include <vector>

#include "ratioforge/extract/rounding.h"
#include "ratioforge/setfn/set_function.h"

namespace ratioforge {

// lambda = num / den with num = f(S_k) and den = |S_k|, kept apart so that
// cut networks can scale their capacities by den and stay integral.
struct Lambda {
  double num = 0.0;
  double den = 1.0;
  double value() const { return num / den; }
};

// Exact maximizer of f(S) - lambda |S| over subsets S of `within`.
using ParametricSolver =
    std::function<Subset(const Lambda& lambda, const Subset& within)>;

// A subproblem solver broke its contract (infeasible set, or more than
// n + 1 calls).
class DinkelbachError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct DinkelbachRound {
  double lambda = 0.0;  // lambda_k the subproblem was solved at
  double value = 0.0;   // f(S) - lambda_k |S| at its answer
  int set_size = 0;     // |S_k|
  double elapsed_s = 0.0;  // since the driver started, after this round
};

struct DinkelbachResult {
  RatioSolution solution;  // certification kExact
  int calls = 0;           // subproblem solves, at most n + 1
  std::vector<DinkelbachRound> rounds;
};

// Throws std::invalid_argument for submodular f and DinkelbachError when
// the solver misbehaves.
DinkelbachResult Dinkelbach(const SetFunction& f, const ParametricSolver& solve);

}  // namespace ratioforge

#endif  // RATIOFORGE_EXTRACT_DINKELBACH_H_
