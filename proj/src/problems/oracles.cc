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

#include "ratioforge/problems/oracles.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace ratioforge {
namespace {

// Weighted degree of every vertex into the current set; shared by the
// degree-based oracles.
class DegreePeelState : public PeelState {
 public:
  explicit DegreePeelState(const UndirectedGraph& g)
      : g_(g), in_set_(g.n(), 1), deg_(g.degrees()) {}

  void Remove(int v, std::vector<int>& touched) override {
    in_set_[v] = 0;
    auto nbrs = g_.Neighbors(v);
    auto ws = g_.NeighborWeights(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const int u = nbrs[i];
      if (!in_set_[u]) continue;
      deg_[u] -= ws[i];
      touched.push_back(u);
    }
  }

 protected:
  const UndirectedGraph& g_;
  std::vector<char> in_set_;
  std::vector<double> deg_;
};

class DsgPeelState final : public DegreePeelState {
 public:
  using DegreePeelState::DegreePeelState;
  double Marginal(int v) const override { return deg_[v]; }
};

class AnchoredPeelState final : public DegreePeelState {
 public:
  AnchoredPeelState(const UndirectedGraph& g, const AnchoredOracle& f)
      : DegreePeelState(g), f_(f) {}
  double Marginal(int v) const override {
    return 2.0 * deg_[v] + f_.penalty(v);
  }

 private:
  const AnchoredOracle& f_;
};

double InducedDegree(const UndirectedGraph& g, int v, const Subset& s) {
  double d = 0.0;
  auto nbrs = g.Neighbors(v);
  auto ws = g.NeighborWeights(v);
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    if (s.Contains(nbrs[i])) d += ws[i];
  }
  return d;
}

double PowClamped(double d, double p) {
  return d <= 0.0 ? 0.0 : std::pow(d, p);
}

// f(v | S - v) = deg_S(v)^p + sum_{u in N_S(v)} [deg_S(u)^p - (deg_S(u) -
// w_uv)^p]. Removing v changes the degree of its neighbors and therefore the
// marginals of their neighbors: the touched set is the 2-hop neighborhood.
class PMeanPeelState final : public PeelState {
 public:
  PMeanPeelState(const UndirectedGraph& g, double p)
      : g_(g), p_(p), in_set_(g.n(), 1), deg_(g.degrees()), pow_(g.n()) {
    for (int v = 0; v < g.n(); ++v) pow_[v] = PowClamped(deg_[v], p_);
  }

  double Marginal(int v) const override {
    double m = pow_[v];
    auto nbrs = g_.Neighbors(v);
    auto ws = g_.NeighborWeights(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const int u = nbrs[i];
      if (!in_set_[u]) continue;
      m += pow_[u] - PowClamped(deg_[u] - ws[i], p_);
    }
    return m;
  }

  void Remove(int v, std::vector<int>& touched) override {
    in_set_[v] = 0;
    auto nbrs = g_.Neighbors(v);
    auto ws = g_.NeighborWeights(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const int u = nbrs[i];
      if (!in_set_[u]) continue;
      deg_[u] -= ws[i];
      pow_[u] = PowClamped(deg_[u], p_);
      touched.push_back(u);
      for (int x : g_.Neighbors(u)) {
        if (in_set_[x]) touched.push_back(x);
      }
    }
  }

 private:
  const UndirectedGraph& g_;
  double p_;
  std::vector<char> in_set_;
  std::vector<double> deg_;
  std::vector<double> pow_;
};

// marginal[u] = w of right vertices still covered that contain u. A right
// vertex stops being covered the first time one of its neighbors is peeled.
class HnsnPeelState final : public PeelState {
 public:
  explicit HnsnPeelState(const WeightedBipartiteGraph& b)
      : b_(b), covered_(b.right_size(), 1), marginal_(b.left_size(), 0.0) {
    for (int v = 0; v < b.right_size(); ++v) {
      for (int u : b.LeftNeighbors(v)) marginal_[u] += b.weight(v);
    }
  }

  double Marginal(int u) const override { return marginal_[u]; }

  void Remove(int u, std::vector<int>& touched) override {
    for (int v : b_.RightNeighbors(u)) {
      if (!covered_[v]) continue;
      covered_[v] = 0;
      for (int x : b_.LeftNeighbors(v)) {
        if (x == u) continue;
        marginal_[x] -= b_.weight(v);
        touched.push_back(x);
      }
    }
  }

 private:
  const WeightedBipartiteGraph& b_;
  std::vector<char> covered_;
  std::vector<double> marginal_;
};

}  // namespace

// ---------------------------------------------------------------------------

DsgOracle::DsgOracle(GraphPtr graph)
    : SetFunction(GroundSet(graph->n()), Orientation::kSupermodular),
      graph_(std::move(graph)) {}

double DsgOracle::Evaluate(const Subset& s) const {
  return graph_->InducedWeight(s);
}

double DsgOracle::EvaluateMarginal(int v, const Subset& s) const {
  return InducedDegree(*graph_, v, s);
}

std::unique_ptr<PeelState> DsgOracle::StartPeel() const {
  return std::make_unique<DsgPeelState>(*graph_);
}

// ---------------------------------------------------------------------------

PMeanOracle::PMeanOracle(GraphPtr graph, double p)
    : SetFunction(GroundSet(graph->n()), Orientation::kSupermodular),
      graph_(std::move(graph)),
      p_(p) {
  if (!(p >= 1.0)) throw std::invalid_argument("p-mean requires p >= 1");
}

double PMeanOracle::Evaluate(const Subset& s) const {
  double total = 0.0;
  for (int v : s.Elements()) {
    total += PowClamped(InducedDegree(*graph_, v, s), p_);
  }
  return total;
}

double PMeanOracle::EvaluateMarginal(int v, const Subset& s) const {
  double m = PowClamped(InducedDegree(*graph_, v, s), p_);
  auto nbrs = graph_->Neighbors(v);
  auto ws = graph_->NeighborWeights(v);
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    if (!s.Contains(nbrs[i])) continue;
    const double du = InducedDegree(*graph_, nbrs[i], s);
    m += PowClamped(du, p_) - PowClamped(du - ws[i], p_);
  }
  return m;
}

std::unique_ptr<PeelState> PMeanOracle::StartPeel() const {
  return std::make_unique<PMeanPeelState>(*graph_, p_);
}

// ---------------------------------------------------------------------------

HnsnOracle::HnsnOracle(BipartitePtr graph)
    : SetFunction(GroundSet(graph->left_size()), Orientation::kSupermodular),
      graph_(std::move(graph)) {}

double HnsnOracle::Evaluate(const Subset& s) const {
  return graph_->CoveredWeight(s);
}

double HnsnOracle::EvaluateMarginal(int u, const Subset& s) const {
  double m = 0.0;
  for (int v : graph_->RightNeighbors(u)) {
    auto nbrs = graph_->LeftNeighbors(v);
    if (std::all_of(nbrs.begin(), nbrs.end(),
                    [&](int x) { return s.Contains(x); })) {
      m += graph_->weight(v);
    }
  }
  return m;
}

std::unique_ptr<PeelState> HnsnOracle::StartPeel() const {
  return std::make_unique<HnsnPeelState>(*graph_);
}

// ---------------------------------------------------------------------------

AnchoredOracle::AnchoredOracle(GraphPtr graph, AnchorSet anchors)
    : SetFunction(GroundSet(graph->n()), Orientation::kSupermodular),
      graph_(std::move(graph)),
      anchors_(std::move(anchors)),
      penalty_(graph_->n(), 0.0) {
  if (anchors_.universe() != graph_->n()) {
    throw std::invalid_argument("anchor set has wrong universe");
  }
  for (int v = 0; v < graph_->n(); ++v) {
    if (!anchors_.Contains(v)) penalty_[v] = -graph_->Degree(v);
  }
}

double AnchoredOracle::Evaluate(const Subset& s) const {
  double total = 2.0 * graph_->InducedWeight(s);
  for (int v : s.Elements()) total += penalty_[v];
  return total;
}

double AnchoredOracle::EvaluateMarginal(int v, const Subset& s) const {
  return 2.0 * InducedDegree(*graph_, v, s) + penalty_[v];
}

std::unique_ptr<PeelState> AnchoredOracle::StartPeel() const {
  return std::make_unique<AnchoredPeelState>(*graph_, *this);
}

// ---------------------------------------------------------------------------

namespace {

GroundSet MinCutGround(const FlowInstance& network) {
  network.Validate();
  if (network.num_nodes < 3) {
    throw std::invalid_argument("min-cut oracle needs a non-terminal node");
  }
  return GroundSet(network.num_nodes - 2);
}

}  // namespace

// g(v | S - v) = c(v -> outside X) - c(X - v -> v), X = S u {s}.
class MinCutPeelState final : public PeelState {
 public:
  explicit MinCutPeelState(const MinCutOracle& f)
      : f_(f), in_x_(f.network_.num_nodes, 1) {
    in_x_[f.network_.sink] = 0;
  }

  double Marginal(int v) const override {
    const int x = f_.node_of_[v];
    double m = 0.0;
    for (int i = f_.out_off_[x]; i < f_.out_off_[x + 1]; ++i) {
      if (!in_x_[f_.out_node_[i]]) m += f_.out_cap_[i];
    }
    for (int i = f_.in_off_[x]; i < f_.in_off_[x + 1]; ++i) {
      if (in_x_[f_.in_node_[i]]) m -= f_.in_cap_[i];
    }
    return m;
  }

  void Remove(int v, std::vector<int>& touched) override {
    const int x = f_.node_of_[v];
    in_x_[x] = 0;
    for (int i = f_.out_off_[x]; i < f_.out_off_[x + 1]; ++i) {
      const int e = f_.element_of_[f_.out_node_[i]];
      if (e >= 0 && in_x_[f_.out_node_[i]]) touched.push_back(e);
    }
    for (int i = f_.in_off_[x]; i < f_.in_off_[x + 1]; ++i) {
      const int e = f_.element_of_[f_.in_node_[i]];
      if (e >= 0 && in_x_[f_.in_node_[i]]) touched.push_back(e);
    }
  }

 private:
  const MinCutOracle& f_;
  std::vector<char> in_x_;
};

MinCutOracle::MinCutOracle(FlowInstance network)
    : SetFunction(MinCutGround(network), Orientation::kSubmodular),
      network_(std::move(network)) {
  const int nodes = network_.num_nodes;
  element_of_.assign(nodes, -1);
  for (int x = 0; x < nodes; ++x) {
    if (x == network_.source || x == network_.sink) continue;
    element_of_[x] = static_cast<int>(node_of_.size());
    node_of_.push_back(x);
  }
  out_off_.assign(nodes + 1, 0);
  in_off_.assign(nodes + 1, 0);
  for (const Arc& a : network_.arcs) {
    if (a.tail == a.head) continue;
    ++out_off_[a.tail + 1];
    ++in_off_[a.head + 1];
    if (a.tail == network_.source) offset_ += a.capacity;
  }
  for (int x = 0; x < nodes; ++x) {
    out_off_[x + 1] += out_off_[x];
    in_off_[x + 1] += in_off_[x];
  }
  out_node_.resize(out_off_[nodes]);
  out_cap_.resize(out_off_[nodes]);
  in_node_.resize(in_off_[nodes]);
  in_cap_.resize(in_off_[nodes]);
  std::vector<int> op(out_off_.begin(), out_off_.end() - 1);
  std::vector<int> ip(in_off_.begin(), in_off_.end() - 1);
  for (const Arc& a : network_.arcs) {
    if (a.tail == a.head) continue;
    out_node_[op[a.tail]] = a.head;
    out_cap_[op[a.tail]++] = a.capacity;
    in_node_[ip[a.head]] = a.tail;
    in_cap_[ip[a.head]++] = a.capacity;
  }
}

double MinCutOracle::Evaluate(const Subset& s) const {
  std::vector<char> side(network_.num_nodes, 0);
  side[network_.source] = 1;
  for (int v : s.Elements()) side[node_of_[v]] = 1;
  return network_.CutCapacity(side) - offset_;
}

std::unique_ptr<PeelState> MinCutOracle::StartPeel() const {
  return std::make_unique<MinCutPeelState>(*this);
}

// ---------------------------------------------------------------------------

std::shared_ptr<const DsgOracle> MakeDsgOracle(GraphPtr graph) {
  return std::make_shared<DsgOracle>(std::move(graph));
}

std::shared_ptr<const PMeanOracle> MakePMeanOracle(GraphPtr graph, double p) {
  return std::make_shared<PMeanOracle>(std::move(graph), p);
}

std::shared_ptr<const HnsnOracle> MakeHnsnOracle(BipartitePtr graph) {
  return std::make_shared<HnsnOracle>(std::move(graph));
}

std::shared_ptr<const AnchoredOracle> MakeAnchoredOracle(GraphPtr graph,
                                                         AnchorSet anchors) {
  return std::make_shared<AnchoredOracle>(std::move(graph),
                                          std::move(anchors));
}

std::shared_ptr<const MinCutOracle> MakeMinCutOracle(FlowInstance network) {
  return std::make_shared<MinCutOracle>(std::move(network));
}

}  // namespace ratioforge
