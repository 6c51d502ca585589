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

// Deciding y in B(f) from h(S) = f(S) - y(S): NO iff some S has h(S) > 0.

#ifndef RATIOFORGE_EXTRACT_MEMBERSHIP_DECIDE_H_
#define RATIOFORGE_EXTRACT_MEMBERSHIP_DECIDE_H_

#include <functional>
#include <string>

#include "ratioforge/setfn/set_function.h"
#include "ratioforge/setfn/solver_config.h"
#include "ratioforge/universal/solvers.h"

namespace ratioforge {

enum class MembershipAnswer { kYes, kNo, kUndecided };

// "YES", "NO", "UNDECIDED".
const char* MembershipAnswerName(MembershipAnswer a);

// An exact maximizer of h over all sets (including the empty set).
struct ExactMax {
  Subset set;
  double value = 0.0;
};
using ExactMaxSolver = std::function<ExactMax(const SetFunction& h)>;

struct MembershipDecision {
  MembershipAnswer answer = MembershipAnswer::kUndecided;
  Subset witness;     // a set with h(witness) = h_max
  double h_max = 0.0;  // best h found (exact when certified by `exact`)
  double gap = 0.0;    // duality gap of the solver's point
  // First iteration whose extracted set had h > tolerance, or -1.
  int detection_iteration = -1;
  // How the answer was reached: "witness", "exact", "point" or "budget".
  std::string certificate;
  SolveResult run;
};

// h(S) > 1e-9 (1 + |h(V)|) counts as a violation.
double MembershipTolerance(const SetFunction& h);

// Runs `algorithm` on h with the kMaxValue objective. NO when the run finds
// a violating set. Otherwise YES when the returned point x of B(h) has every
// x_v <= tolerance / n (then h(S) <= x(S) <= tolerance), or when `exact` is
// given and certifies max h <= tolerance; `exact` may also turn the answer
// into NO. Everything else is UNDECIDED.
MembershipDecision DecideMembership(const SetFunction& h,
                                    UniversalAlgorithm algorithm,
                                    const SolverConfig& cfg,
                                    const ExactMaxSolver& exact = nullptr);

}  // namespace ratioforge

#endif  // RATIOFORGE_EXTRACT_MEMBERSHIP_DECIDE_H_
