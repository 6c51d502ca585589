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

// Contrapolymatroid membership for f(S) = |E(S)|: is y in B(f)? The query
// reduces to maximizing h(S) = f(S) - y(S); y is a NO instance iff some S
// has h(S) > 0.

#ifndef RATIOFORGE_PROBLEMS_MEMBERSHIP_H_
#define RATIOFORGE_PROBLEMS_MEMBERSHIP_H_

#include <vector>

#include "ratioforge/problems/graph.h"
#include "ratioforge/setfn/set_function.h"

namespace ratioforge {

struct MembershipInstance {
  GraphPtr graph;
  std::vector<double> y;

  void Validate() const;
};

// h(S) = |E(S)| - y(S). Supermodular.
SetFunctionPtr MakeMembershipOracle(const MembershipInstance& instance);

// A generated NO instance together with the pieces of its construction.
struct PerturbedMembership {
  MembershipInstance instance;
  std::vector<double> feasible_y;  // the unperturbed point of B(f)
  Subset densest;                  // S*
  double density = 0.0;            // lambda* = |E(S*)| / |S*|
  int lowered = -1;                // u in S*, y_u -= eps
  int raised = -1;                 // w outside S*, y_w += eps
};

// The point b of B(f): lambda* on S*; every edge not inside S* gives half
// its weight to each endpoint when both lie outside S*, and all of it to
// the outside endpoint otherwise. S* must be a densest subgraph.
std::vector<double> FeasibleMembershipPoint(const UndirectedGraph& g,
                                            const Subset& densest,
                                            double density);

// Builds b from the given densest subgraph and moves eps from the smallest
// index of S* to the smallest index outside it, so that b(S*) = f(S*) - eps.
// Throws std::invalid_argument when S* = V or eps <= 0.
PerturbedMembership PerturbMembership(GraphPtr graph, const Subset& densest,
                                      double eps);

// Same, with S* the smallest densest subgraph, computed exactly by flows.
PerturbedMembership PerturbMembership(GraphPtr graph, double eps);

}  // namespace ratioforge

#endif  // RATIOFORGE_PROBLEMS_MEMBERSHIP_H_
