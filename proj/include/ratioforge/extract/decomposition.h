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

// Dense decomposition: S_1 is the maximal densest set of f_1 = f, and
// f_{i+1}(S) = f_i(S u S_i) - f_i(S_i) on what remains. Setting x_v = lambda_i
// on S_i yields the minimum-norm point of B(f).

#ifndef RATIOFORGE_EXTRACT_DECOMPOSITION_H_
#define RATIOFORGE_EXTRACT_DECOMPOSITION_H_

#include <functional>
#include <iosfwd>
#include <vector>

#include "ratioforge/extract/rounding.h"
#include "ratioforge/setfn/set_function.h"

namespace ratioforge {

struct DecompositionBlock {
  Subset block;  // over the original ground set
  double level = 0.0;
};

struct Decomposition {
  // Densest first (levels decreasing) for supermodular f; sparsest first
  // (levels increasing) for submodular f.
  std::vector<DecompositionBlock> blocks;

  // x_v = level of the block containing v.
  std::vector<double> InducedPoint() const;

  // CSV "block_id,level,element"; block ids start at 0.
  void WriteCsv(std::ostream& out) const;
};

// Exact max f(S)/|S| over non-empty S for supermodular f. Returning the
// maximal densest set gives one block per distinct level; smaller densest
// sets are still correct because equal levels are merged.
using RatioSolver = std::function<RatioSolution(const SetFunction& f)>;

// Levels closer than 1e-7 * (1 + |lambda|) are merged into one block.
// Submodular f is decomposed through -f.
Decomposition DenseDecomposition(SetFunctionPtr f, const RatioSolver& solve);

// Merges adjacent blocks with nearly equal levels, as DenseDecomposition
// does.
Decomposition MergeLevels(Decomposition d);

}  // namespace ratioforge

#endif  // RATIOFORGE_EXTRACT_DECOMPOSITION_H_
