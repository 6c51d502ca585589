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

// The universal minimum-norm-point solvers over any SetFunction:
// SuperGreedy++, Frank-Wolfe and Fujishige-Wolfe. Each returns the iterate
// with the smallest evaluated duality gap and, along the way, rounds every
// peel into the configured discrete objective.

#ifndef RATIOFORGE_UNIVERSAL_SOLVERS_H_
#define RATIOFORGE_UNIVERSAL_SOLVERS_H_

#include <limits>
#include <string_view>

#include "ratioforge/extract/rounding.h"
#include "ratioforge/setfn/base_polytope.h"
#include "ratioforge/setfn/set_function.h"
#include "ratioforge/setfn/solver_config.h"
#include "ratioforge/universal/trace.h"

namespace ratioforge {

enum class UniversalAlgorithm { kSuperGreedy, kFrankWolfe, kFujishigeWolfe };

const char* UniversalAlgorithmName(UniversalAlgorithm a);

struct SolveResult {
  BasePoint x;  // best-gap iterate, a point of B(f)
  double gap = std::numeric_limits<double>::infinity();
  int iterations = 0;
  bool converged = false;  // gap <= eps^2
  ConvergenceTrace trace;

  Objective objective = Objective::kAuto;  // resolved
  Subset best_set;
  double best_objective = 0.0;  // ratio or value, per `objective`
  double best_value = 0.0;      // f(best_set)

  int max_active_set = 0;  // Fujishige-Wolfe only
  bool stalled = false;    // Fujishige-Wolfe: no affinely independent vertex
};

// x^(t) = (1 - g_t) x^(t-1) + g_t d_t, with d_t the peel under weights
// (t - 1) x^(t-1) and g_t = 1/(t+1) (or 2/(t+2)). Starting from 0, x^(t) has
// total mass m_t = 1 - prod (1 - g_i) < 1, so gaps are evaluated at and the
// result is x^(t) / m_t, the corresponding convex combination of the d_i.
// Gaps are evaluated every cfg.trace_every iterations and at the last one.
SolveResult SuperGreedyPP(const SetFunction& f, const SolverConfig& cfg);

// x^(0) = Lmo(0); x^(k) = (1 - a_k) x^(k-1) + a_k Lmo(x^(k-1)) with
// a_k = 2/(k+2).
SolveResult FrankWolfe(const SetFunction& f, const SolverConfig& cfg);

// Wolfe's method with major cycles (add the LMO vertex) and minor cycles
// (affine minimization over the active set, line search back to the convex
// hull, drop vertices with weight <= cfg.tolerances.drop). The affine
// minimizer comes from a Cholesky factor of C^T C, C = [1; B], updated as
// vertices enter and leave.
SolveResult FujishigeWolfe(const SetFunction& f, const SolverConfig& cfg);

SolveResult SolveUniversal(const SetFunction& f, UniversalAlgorithm algorithm,
                           const SolverConfig& cfg);

}  // namespace ratioforge

#endif  // RATIOFORGE_UNIVERSAL_SOLVERS_H_
