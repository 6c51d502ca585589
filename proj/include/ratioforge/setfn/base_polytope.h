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

// Primitives over the base polytope B(f): greedy vertices, the linear
// minimization oracle and the minimum-norm-point duality gap.
//
// For submodular f, B(f) = {x : x(S) <= f(S) for all S, x(V) = f(V)}; for
// supermodular f the inequalities are reversed. Both are handled uniformly
// by peeling: removing elements v_1, v_2, ... from S_1 = V and assigning
// d(v_j) = f(v_j | S_j - v_j) yields a vertex of B(f) for any order.

#ifndef RATIOFORGE_SETFN_BASE_POLYTOPE_H_
#define RATIOFORGE_SETFN_BASE_POLYTOPE_H_

#include <span>
#include <vector>

#include "ratioforge/setfn/set_function.h"

namespace ratioforge {

// A point x with the cached total f(V). Candidate or exact minimum-norm
// point; FW and Wolfe iterates lie in B(f), SuperGreedy++ raw iterates
// generally do not.
struct BasePoint {
  std::vector<double> x;
  double f_of_v = 0.0;

  int size() const { return static_cast<int>(x.size()); }
  double Sum() const;
  double NormSq() const;
};

double Dot(std::span<const double> a, std::span<const double> b);

// tau_base = 1e-9 * (1 + |f(V)|).
double BaseTolerance(double f_of_v);

// Result of one full peel of the ground set.
struct PeelResult {
  BasePoint point;
  // order[j] is the j-th removed element.
  std::vector<int> order;
  // remaining_value[j] = f(S_j) with S_j = V minus order[0..j-1], so
  // remaining_value[0] = f(V) and |S_j| = n - j. Obtained by telescoping.
  std::vector<double> remaining_value;
};

// Peels V in `peel_order` (a permutation of V) and returns the vertex with
// x(v_j) = f(v_j | S_j - v_j).
PeelResult EdmondsGreedy(const SetFunction& f, std::span<const int> peel_order);

// The ordering the LMO builds its chain from: supermodular f sorts x
// descending, submodular f ascending, ties by smaller index first. Prefixes
// of this order are the extraction candidates of the rounding rules.
std::vector<int> LmoChainOrder(const SetFunction& f, std::span<const double> x);

// argmin_{d in B(f)} <d, x>, realized as EdmondsGreedy along the reversed
// chain order.
PeelResult Lmo(const SetFunction& f, std::span<const double> x);

// ||x||^2 - min_{q in B(f)} <q, x>. Non-negative on B(f) and zero exactly at
// the minimum-norm point.
double DualityGap(const SetFunction& f, std::span<const double> x);

// Same, reusing a vertex already returned by Lmo(f, x).
double DualityGap(std::span<const double> x, const BasePoint& lmo_vertex);

// Exhaustive membership check for small n (n <= 20): x(V) = f(V) within tol
// and x(S) <= f(S) + tol (submodular) or x(S) >= f(S) - tol (supermodular).
bool InBasePolytope(const SetFunction& f, std::span<const double> x,
                    double tol);

}  // namespace ratioforge

#endif  // RATIOFORGE_SETFN_BASE_POLYTOPE_H_
