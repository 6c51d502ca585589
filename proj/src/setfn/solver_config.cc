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

#include "ratioforge/setfn/solver_config.h"

#include <stdexcept>

namespace ratioforge {

void SolverConfig::Validate() const {
  if (max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
  if (!(eps >= 0.0)) throw std::invalid_argument("eps must be >= 0");
  if (trace_every < 1) throw std::invalid_argument("trace_every must be >= 1");
}

int DefaultTraceEvery(int n) { return n <= 10000 ? 1 : 10; }

}  // namespace ratioforge
