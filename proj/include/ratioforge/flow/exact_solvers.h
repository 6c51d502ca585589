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

// Exact ratio solvers: density improvement with a minimum cut per round,
// each round building its network on the surviving sub-instance.

#ifndef RATIOFORGE_FLOW_EXACT_SOLVERS_H_
#define RATIOFORGE_FLOW_EXACT_SOLVERS_H_

#include <span>

#include "ratioforge/extract/decomposition.h"
#include "ratioforge/extract/dinkelbach.h"
#include "ratioforge/flow/max_flow.h"
#include "ratioforge/problems/graph.h"

namespace ratioforge {

// max (|E(S)| + c(S)) / |S| with c the optional modular bonus. With c = 0
// this is the densest subgraph; with c_v = -deg(v)/2 outside R it is half
// the anchored objective.
DinkelbachResult FlowDsgSolver(GraphPtr g, std::span<const double> bonus = {},
                               FlowKernel kernel = FlowKernel::kPushRelabel);

// max w(N(S)) / |S| over non-empty S subset of L.
DinkelbachResult FlowHnsnSolver(BipartitePtr b,
                                FlowKernel kernel = FlowKernel::kPushRelabel);

// A densest subgraph of minimum cardinality; among those, the one found
// first when forcing each vertex in index order. One cut per vertex.
Subset SmallestDensestSubgraph(GraphPtr g,
                               FlowKernel kernel = FlowKernel::kPushRelabel);

struct ValueSolution {
  Subset set;  // the smallest maximizer, possibly empty
  double value = 0.0;
};

// max over all S (including the empty set) of |E(S)| + c(S), by one cut.
ValueSolution FlowMaxDsgValue(const UndirectedGraph& g,
                              std::span<const double> bonus,
                              FlowKernel kernel = FlowKernel::kPushRelabel);

// Dense decomposition of |E(S)| + c(S), taking the maximal densest set of
// each contracted stage from the maximal minimum cut at its optimal level.
Decomposition FlowDsgDecomposition(
    GraphPtr g, std::span<const double> bonus = {},
    FlowKernel kernel = FlowKernel::kPushRelabel);

}  // namespace ratioforge

#endif  // RATIOFORGE_FLOW_EXACT_SOLVERS_H_
