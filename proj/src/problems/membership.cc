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

#include "ratioforge/problems/membership.h"

#include <stdexcept>
#include <utility>

#include "ratioforge/flow/exact_solvers.h"
#include "ratioforge/problems/oracles.h"
#include "ratioforge/setfn/adapters.h"

namespace ratioforge {

void MembershipInstance::Validate() const {
  if (!graph) throw std::invalid_argument("membership instance has no graph");
  if (static_cast<int>(y.size()) != graph->n()) {
    throw std::invalid_argument("y must have one entry per vertex");
  }
}

SetFunctionPtr MakeMembershipOracle(const MembershipInstance& instance) {
  instance.Validate();
  std::vector<double> minus_y(instance.y.size());
  for (std::size_t v = 0; v < minus_y.size(); ++v) minus_y[v] = -instance.y[v];
  return AddModular(MakeDsgOracle(instance.graph), std::move(minus_y));
}

std::vector<double> FeasibleMembershipPoint(const UndirectedGraph& g,
                                            const Subset& densest,
                                            double density) {
  if (densest.universe() != g.n()) {
    throw std::invalid_argument("densest set has wrong universe");
  }
  std::vector<double> b(g.n(), 0.0);
  for (int v : densest.Elements()) b[v] = density;
  for (const Edge& e : g.edges()) {
    const bool in_u = densest.Contains(e.u);
    const bool in_v = densest.Contains(e.v);
    if (in_u && in_v) continue;
    if (!in_u && !in_v) {
      b[e.u] += 0.5 * e.w;
      b[e.v] += 0.5 * e.w;
    } else {
      b[in_u ? e.v : e.u] += e.w;
    }
  }
  return b;
}

PerturbedMembership PerturbMembership(GraphPtr graph, const Subset& densest,
                                      double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be > 0");
  if (densest.empty()) throw std::invalid_argument("densest set is empty");
  if (densest.size() == graph->n()) {
    throw std::invalid_argument(
        "the densest subgraph is all of V; no vertex can receive eps");
  }
  PerturbedMembership out;
  out.densest = densest;
  out.density = graph->InducedWeight(densest) / densest.size();
  out.feasible_y = FeasibleMembershipPoint(*graph, densest, out.density);
  for (int v = 0; v < graph->n(); ++v) {
    if (densest.Contains(v) && out.lowered < 0) out.lowered = v;
    if (!densest.Contains(v) && out.raised < 0) out.raised = v;
  }
  out.instance.graph = std::move(graph);
  out.instance.y = out.feasible_y;
  out.instance.y[out.lowered] -= eps;
  out.instance.y[out.raised] += eps;
  return out;
}

PerturbedMembership PerturbMembership(GraphPtr graph, double eps) {
  const Subset densest = SmallestDensestSubgraph(graph);
  return PerturbMembership(std::move(graph), densest, eps);
}

}  // namespace ratioforge
