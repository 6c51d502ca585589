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

// Cut networks whose minimum cuts solve the parametric subproblems of the
// exact ratio solvers. lambda = num/den and every capacity is scaled by den,
// so integer inputs give integer capacities.

#ifndef RATIOFORGE_FLOW_NETWORKS_H_
#define RATIOFORGE_FLOW_NETWORKS_H_

#include <span>
#include <vector>

#include "ratioforge/extract/dinkelbach.h"
#include "ratioforge/flow/max_flow.h"
#include "ratioforge/problems/flow_instance.h"
#include "ratioforge/problems/graph.h"

namespace ratioforge {

struct CutNetwork {
  FlowInstance network;
  // Network node of each ground element.
  std::vector<int> node_of;
};

// Maximizes |E(S)| + c(S) - lambda |S| over S subset of V, where c is the
// optional modular bonus (empty means 0). Nodes: s = 0, t = 1, v -> v + 2.
//   s -> v   den deg(v) + 2 den max(c_v, 0) + 2 max(-num, 0)
//   v -> t   2 max(num, 0) + 2 den max(-c_v, 0)
//   u <-> v  den w(u, v) in each direction
// A cut with source side S u {s} costs a constant minus
// 2 den (|E(S)| + c(S) - lambda |S|).
CutNetwork DsgCutNetwork(const UndirectedGraph& g, const Lambda& lambda,
                         std::span<const double> bonus = {});

// The source side minus s, from the minimal or the maximal minimum cut.
Subset DsgCutSide(const CutNetwork& net, const CutResult& cut,
                  bool maximal = false);

// Minimizes Phi(S) = lambda |S| - f(S) for the HNSN function over S subset
// of L. Nodes: s = 0, t = 1, u in L -> u + 2, v in R -> |L| + v + 2.
//   s -> u   num
//   u -> v   infinite, for u in delta(v)
//   v -> t   den w(v)
// A cut costs den (lambda |S| + w(R)) - den f(S) with S the left nodes on
// the sink side. Infinite arcs carry den w(R) + num |L| + 1.
CutNetwork HnsnCutNetwork(const WeightedBipartiteGraph& b,
                          const Lambda& lambda);

// Left vertices on the sink side of the minimal minimum cut.
Subset HnsnCutSide(const CutNetwork& net, const CutResult& cut);

}  // namespace ratioforge

#endif  // RATIOFORGE_FLOW_NETWORKS_H_
