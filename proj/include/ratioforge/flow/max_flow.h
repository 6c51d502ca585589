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

// Maximum s-t flow: highest-label push-relabel and the Edmonds-Karp
// reference. Residual capacities at or below 1e-12 times the largest
// capacity count as saturated, which is exact for integer data.

#ifndef RATIOFORGE_FLOW_MAX_FLOW_H_
#define RATIOFORGE_FLOW_MAX_FLOW_H_

#include <vector>

#include "ratioforge/problems/flow_instance.h"

namespace ratioforge {

struct CutResult {
  double value = 0.0;
  // Nodes reachable from s in the final residual network: the minimal
  // minimum cut.
  std::vector<char> source_side;
  // Nodes that cannot reach t in the final residual network: the maximal
  // minimum cut.
  std::vector<char> maximal_source_side;
  // Flow on each input arc, in input order.
  std::vector<double> arc_flow;
};

enum class FlowKernel { kPushRelabel, kEdmondsKarp };

const char* FlowKernelName(FlowKernel kernel);

// Highest-label selection, gap heuristic and a global relabel every n
// relabels. Labels run up to 2n, so the result is a flow, not a preflow.
CutResult PushRelabel(const FlowInstance& fi);

// Shortest augmenting paths.
CutResult EdmondsKarp(const FlowInstance& fi);

CutResult MaxFlow(const FlowInstance& fi, FlowKernel kernel);

// Largest |inflow - outflow| over non-terminal nodes.
double MaxConservationViolation(const FlowInstance& fi,
                                const std::vector<double>& arc_flow);

// Largest amount by which an arc flow leaves [0, capacity].
double MaxCapacityViolation(const FlowInstance& fi,
                            const std::vector<double>& arc_flow);

}  // namespace ratioforge

#endif  // RATIOFORGE_FLOW_MAX_FLOW_H_
