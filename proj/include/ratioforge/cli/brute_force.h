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

// Exhaustive reference answers for small ground sets. Everything here
// enumerates subsets directly and shares no code with the solvers beyond
// the oracle's Value.

#ifndef RATIOFORGE_CLI_BRUTE_FORCE_H_
#define RATIOFORGE_CLI_BRUTE_FORCE_H_

#include <vector>

#include "ratioforge/extract/membership_decide.h"
#include "ratioforge/extract/rounding.h"
#include "ratioforge/setfn/set_function.h"

namespace ratioforge {

inline constexpr int kBruteForceMaxN = 20;
inline constexpr int kBruteForceQpMaxN = 12;

// Ratio optima over non-empty S. Among sets with equal ratio (1e-12
// relative) the larger one wins, so the result is the maximal optimizer.
// Throws std::invalid_argument when n > kBruteForceMaxN.
RatioSolution BruteMaxRatio(const SetFunction& f);
RatioSolution BruteMinRatio(const SetFunction& f);

// Value optima over all S, including the empty set.
ExactMax BruteMinValue(const SetFunction& f);
ExactMax BruteMaxValue(const SetFunction& f);

// max over S of f(S) - lambda |S| (including the empty set, value 0).
double BruteMaxShifted(const SetFunction& f, double lambda);

// Minimum-norm point of B(f) as the quadratic program
//   min |x|^2  s.t.  x(V) = f(V),  x(S) >= f(S) (supermodular) or
//                    x(S) <= f(S) (submodular) for every S,
// solved by a primal active-set method started at a greedy vertex. Throws
// std::invalid_argument when n > kBruteForceQpMaxN.
std::vector<double> BruteMnpQp(const SetFunction& f);

}  // namespace ratioforge

#endif  // RATIOFORGE_CLI_BRUTE_FORCE_H_
