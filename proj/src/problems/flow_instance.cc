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

#include "ratioforge/problems/flow_instance.h"

#include <stdexcept>

namespace ratioforge {

void FlowInstance::Validate() const {
  if (num_nodes < 2) throw std::invalid_argument("flow network needs s and t");
  if (source < 0 || source >= num_nodes || sink < 0 || sink >= num_nodes) {
    throw std::invalid_argument("terminal out of range");
  }
  if (source == sink) throw std::invalid_argument("source equals sink");
  for (const Arc& a : arcs) {
    if (a.tail < 0 || a.tail >= num_nodes || a.head < 0 ||
        a.head >= num_nodes) {
      throw std::invalid_argument("arc endpoint out of range");
    }
    if (!(a.capacity >= 0.0)) throw std::invalid_argument("negative capacity");
  }
}

double FlowInstance::CutCapacity(const std::vector<char>& source_side) const {
  double total = 0.0;
  for (const Arc& a : arcs) {
    if (source_side[a.tail] && !source_side[a.head]) total += a.capacity;
  }
  return total;
}

}  // namespace ratioforge
