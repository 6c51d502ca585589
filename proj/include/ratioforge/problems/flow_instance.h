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

#ifndef RATIOFORGE_PROBLEMS_FLOW_INSTANCE_H_
#define RATIOFORGE_PROBLEMS_FLOW_INSTANCE_H_

#include <vector>

namespace ratioforge {

struct Arc {
  int tail = 0;
  int head = 0;
  double capacity = 0.0;
  // Marks arcs that stand for +infinity. Their capacity holds a finite value
  // dominating every finite cut of the network.
  bool infinite = false;
};

// Directed capacitated network with distinguished source and sink.
struct FlowInstance {
  int num_nodes = 0;
  int source = 0;
  int sink = 1;
  std::vector<Arc> arcs;

  // Throws std::invalid_argument unless s != t, endpoints are in range and
  // capacities are non-negative.
  void Validate() const;

  // Total capacity of arcs leaving the node set `source_side`.
  double CutCapacity(const std::vector<char>& source_side) const;
};

}  // namespace ratioforge

#endif  // RATIOFORGE_PROBLEMS_FLOW_INSTANCE_H_
