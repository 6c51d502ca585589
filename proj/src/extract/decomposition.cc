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

#include "ratioforge/extract/decomposition.h"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "ratioforge/setfn/adapters.h"
#include "ratioforge/setfn/text_format.h"

namespace ratioforge {

std::vector<double> Decomposition::InducedPoint() const {
  int n = blocks.empty() ? 0 : blocks.front().block.universe();
  std::vector<double> x(n, 0.0);
  for (const auto& b : blocks) {
    for (int v : b.block.Elements()) x[v] = b.level;
  }
  return x;
}

void Decomposition::WriteCsv(std::ostream& out) const {
  out << "block_id,level,element\n";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (int v : blocks[i].block.Elements()) {
      out << i << ',' << FormatReal(blocks[i].level) << ',' << v << '\n';
    }
  }
}

Decomposition MergeLevels(Decomposition d) {
  Decomposition out;
  for (auto& b : d.blocks) {
    if (!out.blocks.empty()) {
      auto& last = out.blocks.back();
      if (std::abs(last.level - b.level) < 1e-7 * (1.0 + std::abs(b.level))) {
        const double a = last.block.size();
        const double c = b.block.size();
        last.level = (last.level * a + b.level * c) / (a + c);
        for (int v : b.block.Elements()) last.block.Insert(v);
        continue;
      }
    }
    out.blocks.push_back(std::move(b));
  }
  return out;
}

Decomposition DenseDecomposition(SetFunctionPtr f, const RatioSolver& solve) {
  if (!f->is_supermodular()) {
    Decomposition d = DenseDecomposition(Negate(f), solve);
    for (auto& b : d.blocks) b.level = -b.level;
    return d;
  }
  const int n = f->n();
  Decomposition d;
  Subset done(n);
  while (done.size() < n) {
    SetFunctionPtr stage = f;
    std::vector<int> to_original;
    if (done.empty()) {
      to_original.resize(n);
      for (int v = 0; v < n; ++v) to_original[v] = v;
    } else {
      auto contracted = Contract(f, done);
      to_original = contracted->parent_indices();
      stage = contracted;
    }
    const RatioSolution best = solve(*stage);
    if (best.set.empty() || best.set.universe() != stage->n()) {
      throw std::logic_error("ratio solver returned an invalid set");
    }
    DecompositionBlock block{Subset(n), best.ratio};
    for (int v : best.set.Elements()) {
      block.block.Insert(to_original[v]);
      done.Insert(to_original[v]);
    }
    d.blocks.push_back(std::move(block));
  }
  return MergeLevels(std::move(d));
}

}  // namespace ratioforge
