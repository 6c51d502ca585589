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

// The concrete set functions. Every oracle overrides StartPeel so a full
// peel costs O(m) or O(m log n) rather than O(n) value queries per step.

#ifndef RATIOFORGE_PROBLEMS_ORACLES_H_
#define RATIOFORGE_PROBLEMS_ORACLES_H_

#include <memory>
#include <vector>

#include "ratioforge/problems/flow_instance.h"
#include "ratioforge/problems/graph.h"
#include "ratioforge/setfn/set_function.h"

namespace ratioforge {

// f(S) = |E(S)| (weighted). Supermodular; f(v | S - v) = deg_S(v).
class DsgOracle final : public SetFunction {
 public:
  explicit DsgOracle(GraphPtr graph);
  const UndirectedGraph& graph() const { return *graph_; }
  std::unique_ptr<PeelState> StartPeel() const override;

 protected:
  double Evaluate(const Subset& s) const override;
  double EvaluateMarginal(int v, const Subset& s) const override;

 private:
  GraphPtr graph_;
};

// f(S) = sum_{v in S} deg_S(v)^p for p >= 1. Supermodular.
class PMeanOracle final : public SetFunction {
 public:
  PMeanOracle(GraphPtr graph, double p);
  const UndirectedGraph& graph() const { return *graph_; }
  double p() const { return p_; }
  std::unique_ptr<PeelState> StartPeel() const override;

 protected:
  double Evaluate(const Subset& s) const override;
  double EvaluateMarginal(int v, const Subset& s) const override;

 private:
  GraphPtr graph_;
  double p_;
};

// f(S) = w({v in R : delta(v) subset of S}) over the left side L.
// Monotone supermodular.
class HnsnOracle final : public SetFunction {
 public:
  explicit HnsnOracle(BipartitePtr graph);
  const WeightedBipartiteGraph& graph() const { return *graph_; }
  std::unique_ptr<PeelState> StartPeel() const override;

 protected:
  double Evaluate(const Subset& s) const override;
  double EvaluateMarginal(int v, const Subset& s) const override;

 private:
  BipartitePtr graph_;
};

// f(S) = 2|E(S)| - sum_{v in S \ R} deg_G(v). Supermodular, possibly
// negative and non-monotone.
class AnchoredOracle final : public SetFunction {
 public:
  AnchoredOracle(GraphPtr graph, AnchorSet anchors);
  const UndirectedGraph& graph() const { return *graph_; }
  const AnchorSet& anchors() const { return anchors_; }
  // The modular part: -deg_G(v) outside R, 0 inside.
  double penalty(int v) const { return penalty_[v]; }
  std::unique_ptr<PeelState> StartPeel() const override;

 protected:
  double Evaluate(const Subset& s) const override;
  double EvaluateMarginal(int v, const Subset& s) const override;

 private:
  GraphPtr graph_;
  AnchorSet anchors_;
  std::vector<double> penalty_;
};

// g(S) = c(delta+(S u {s})) - c(delta+({s})) over V \ {s, t}. Submodular.
// Arcs are directed; an undirected edge is a pair of opposite arcs.
class MinCutOracle final : public SetFunction {
 public:
  explicit MinCutOracle(FlowInstance network);

  const FlowInstance& network() const { return network_; }
  // c(delta+({s})); min_S g(S) + offset() is the minimum s-t cut.
  double offset() const { return offset_; }
  // Network node of ground element v.
  int node(int v) const { return node_of_[v]; }
  // Ground element of network node, or -1 for s and t.
  int element(int node) const { return element_of_[node]; }
  // Cut capacity of the s-t cut with source side S u {s}.
  double CutValue(const Subset& s) const { return Value(s) + offset_; }

  std::unique_ptr<PeelState> StartPeel() const override;

 protected:
  double Evaluate(const Subset& s) const override;

 private:
  friend class MinCutPeelState;

  FlowInstance network_;
  double offset_ = 0.0;
  std::vector<int> node_of_;
  std::vector<int> element_of_;
  // Per node CSR of outgoing and incoming (neighbor, capacity) pairs.
  std::vector<int> out_off_, in_off_;
  std::vector<int> out_node_, in_node_;
  std::vector<double> out_cap_, in_cap_;
};

std::shared_ptr<const DsgOracle> MakeDsgOracle(GraphPtr graph);
std::shared_ptr<const PMeanOracle> MakePMeanOracle(GraphPtr graph, double p);
std::shared_ptr<const HnsnOracle> MakeHnsnOracle(BipartitePtr graph);
std::shared_ptr<const AnchoredOracle> MakeAnchoredOracle(GraphPtr graph,
                                                         AnchorSet anchors);
std::shared_ptr<const MinCutOracle> MakeMinCutOracle(FlowInstance network);

}  // namespace ratioforge

#endif  // RATIOFORGE_PROBLEMS_ORACLES_H_
