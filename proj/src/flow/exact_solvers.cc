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

#include "ratioforge/flow/exact_solvers.h"

#include <cmath>
#include <memory>
#include <stdexcept>
#include <vector>

#include "ratioforge/flow/networks.h"
#include "ratioforge/problems/oracles.h"
#include "ratioforge/setfn/adapters.h"

namespace ratioforge {
namespace {

std::vector<double> Restrict(std::span<const double> bonus,
                             const std::vector<int>& to_parent) {
  std::vector<double> out;
  if (bonus.empty()) return out;
  out.reserve(to_parent.size());
  for (int v : to_parent) out.push_back(bonus[v]);
  return out;
}

SetFunctionPtr DsgWithBonus(GraphPtr g, std::span<const double> bonus) {
  SetFunctionPtr f = MakeDsgOracle(g);
  if (bonus.empty()) return f;
  if (static_cast<int>(bonus.size()) != g->n()) {
    throw std::invalid_argument("bonus has wrong length");
  }
  return AddModular(f, std::vector<double>(bonus.begin(), bonus.end()));
}

Subset Lift(const Subset& local, const std::vector<int>& to_parent, int n) {
  Subset s(n);
  for (int v : local.Elements()) s.Insert(to_parent[v]);
  return s;
}

}  // namespace

DinkelbachResult FlowDsgSolver(GraphPtr g, std::span<const double> bonus,
                               FlowKernel kernel) {
  const SetFunctionPtr f = DsgWithBonus(g, bonus);
  const int n = g->n();
  auto solve = [&](const Lambda& lambda, const Subset& within) {
    std::vector<int> to_parent;
    const UndirectedGraph sub = g->Induced(within, &to_parent);
    const std::vector<double> c = Restrict(bonus, to_parent);
    const CutNetwork net = DsgCutNetwork(sub, lambda, c);
    return Lift(DsgCutSide(net, MaxFlow(net.network, kernel)), to_parent, n);
  };
  return Dinkelbach(*f, solve);
}

DinkelbachResult FlowHnsnSolver(BipartitePtr b, FlowKernel kernel) {
  const SetFunctionPtr f = MakeHnsnOracle(b);
  const int n = b->left_size();
  auto solve = [&](const Lambda& lambda, const Subset& within) {
    std::vector<int> to_parent;
    const WeightedBipartiteGraph sub = b->RestrictLeft(within, &to_parent);
    const CutNetwork net = HnsnCutNetwork(sub, lambda);
    return Lift(HnsnCutSide(net, MaxFlow(net.network, kernel)), to_parent, n);
  };
  return Dinkelbach(*f, solve);
}

Subset SmallestDensestSubgraph(GraphPtr g, FlowKernel kernel) {
  const DinkelbachResult best = FlowDsgSolver(g, {}, kernel);
  const Lambda level{best.solution.f_value,
                     static_cast<double>(best.solution.set.size())};
  const int n = g->n();
  // A set containing v gains `force` and loses at most lambda * n, so every
  // maximizer under the bonus contains v.
  const double force = level.value() * n + g->TotalWeight() + 1.0;
  const double tol = 1e-9 * (1.0 + std::abs(level.num));
  Subset smallest = best.solution.set;
  for (int v = 0; v < n; ++v) {
    std::vector<double> bonus(n, 0.0);
    bonus[v] = force;
    const CutNetwork net = DsgCutNetwork(*g, level, bonus);
    const Subset s = DsgCutSide(net, MaxFlow(net.network, kernel));
    const double excess = g->InducedWeight(s) * level.den - level.num * s.size();
    if (excess >= -tol && s.size() < smallest.size()) smallest = s;
  }
  return smallest;
}

ValueSolution FlowMaxDsgValue(const UndirectedGraph& g,
                              std::span<const double> bonus,
                              FlowKernel kernel) {
  const CutNetwork net = DsgCutNetwork(g, Lambda{0.0, 1.0}, bonus);
  ValueSolution out;
  out.set = DsgCutSide(net, MaxFlow(net.network, kernel));
  out.value = g.InducedWeight(out.set);
  if (!bonus.empty()) {
    for (int v : out.set.Elements()) out.value += bonus[v];
  }
  return out;
}

Decomposition FlowDsgDecomposition(GraphPtr g, std::span<const double> bonus,
                                   FlowKernel kernel) {
  const int n = g->n();
  if (!bonus.empty() && static_cast<int>(bonus.size()) != n) {
    throw std::invalid_argument("bonus has wrong length");
  }
  Decomposition d;
  Subset done(n);
  while (done.size() < n) {
    // f_{i+1}(S) = |E(S)| + c(S) + w(S, done) on the remaining vertices.
    const Subset remaining = done.Complement();
    std::vector<int> to_parent;
    auto stage = std::make_shared<const UndirectedGraph>(
        g->Induced(remaining, &to_parent));
    std::vector<double> c(to_parent.size(), 0.0);
    for (std::size_t i = 0; i < to_parent.size(); ++i) {
      const int v = to_parent[i];
      if (!bonus.empty()) c[i] = bonus[v];
      auto nbrs = g->Neighbors(v);
      auto ws = g->NeighborWeights(v);
      for (std::size_t j = 0; j < nbrs.size(); ++j) {
        if (done.Contains(nbrs[j])) c[i] += ws[j];
      }
    }
    const DinkelbachResult best = FlowDsgSolver(stage, c, kernel);
    const Lambda level{best.solution.f_value,
                       static_cast<double>(best.solution.set.size())};
    const CutNetwork net = DsgCutNetwork(*stage, level, c);
    Subset block = DsgCutSide(net, MaxFlow(net.network, kernel),
                              /*maximal=*/true);
    if (block.empty()) block = best.solution.set;
    DecompositionBlock out{Lift(block, to_parent, n), level.value()};
    for (int v : out.block.Elements()) done.Insert(v);
    d.blocks.push_back(std::move(out));
  }
  return MergeLevels(std::move(d));
}

}  // namespace ratioforge
