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

#include "ratioforge/extract/membership_decide.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ratioforge {

const char* MembershipAnswerName(MembershipAnswer a) {
  switch (a) {
    case MembershipAnswer::kYes:
      return "YES";
    case MembershipAnswer::kNo:
      return "NO";
    case MembershipAnswer::kUndecided:
      return "UNDECIDED";
  }
  return "UNDECIDED";
}

double MembershipTolerance(const SetFunction& h) {
  return 1e-9 * (1.0 + std::abs(h.Value(Subset(h.n(), /*full=*/true))));
}

MembershipDecision DecideMembership(const SetFunction& h,
                                    UniversalAlgorithm algorithm,
                                    const SolverConfig& cfg,
                                    const ExactMaxSolver& exact) {
  if (!h.is_supermodular()) {
    throw std::invalid_argument("membership expects h = f - y supermodular");
  }
  const double tol = MembershipTolerance(h);
  SolverConfig run_cfg = cfg;
  run_cfg.objective = Objective::kMaxValue;

  MembershipDecision out;
  out.run = SolveUniversal(h, algorithm, run_cfg);
  out.gap = out.run.gap;
  out.witness = out.run.best_set;
  out.h_max = out.run.best_value;
  for (const TraceRecord& r : out.run.trace.records()) {
    if (r.best_obj > tol) {
      out.detection_iteration = r.iter;
      break;
    }
  }
  if (out.h_max > tol) {
    out.answer = MembershipAnswer::kNo;
    out.certificate = "witness";
    return out;
  }
  const auto& x = out.run.x.x;
  if (!x.empty() && *std::max_element(x.begin(), x.end()) <= tol / h.n()) {
    out.answer = MembershipAnswer::kYes;
    out.certificate = "point";
    return out;
  }
  if (exact) {
    const ExactMax best = exact(h);
    out.witness = best.set;
    out.h_max = best.value;
    out.answer = best.value > tol ? MembershipAnswer::kNo
                                  : MembershipAnswer::kYes;
    out.certificate = "exact";
    return out;
  }
  out.answer = MembershipAnswer::kUndecided;
  out.certificate = "budget";
  return out;
}

}  // namespace ratioforge
