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

// Weighted peeling: repeatedly remove the element v of S_j extremizing
// w(v) + f(v | S_j - v) and assign it that marginal.

#ifndef RATIOFORGE_UNIVERSAL_PEEL_H_
#define RATIOFORGE_UNIVERSAL_PEEL_H_

#include <span>

#include "ratioforge/setfn/base_polytope.h"
#include "ratioforge/setfn/set_function.h"

namespace ratioforge {

enum class PeelDirection {
  kAuto,    // kArgMin for supermodular f, kArgMax for submodular f
  kArgMin,
  kArgMax,
};

// O(m log n) with a lazy heap for oracles with incremental peel states.
// Ties go to the smallest index.
PeelResult PeelWeighted(const SetFunction& f, std::span<const double> w,
                        PeelDirection direction = PeelDirection::kAuto);

}  // namespace ratioforge

#endif  // RATIOFORGE_UNIVERSAL_PEEL_H_
