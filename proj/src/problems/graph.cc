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

#include "ratioforge/problems/graph.h"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace ratioforge {

UndirectedGraph::UndirectedGraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n_ < 1) throw std::invalid_argument("graph needs at least one vertex");
  // Merge parallel edges so every adjacency entry is a distinct neighbor.
  std::vector<std::map<int, double>> merged(n_);
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (e.u == e.v) throw std::invalid_argument("self-loops are not allowed");
    if (!(e.w >= 0.0)) throw std::invalid_argument("negative edge weight");
    if (e.w != 1.0) weighted_ = true;
    merged[e.u][e.v] += e.w;
    merged[e.v][e.u] += e.w;
    total_weight_ += e.w;
  }
  offsets_.assign(n_ + 1, 0);
  degree_.assign(n_, 0.0);
  for (int v = 0; v < n_; ++v) {
    offsets_[v + 1] = offsets_[v] + static_cast<int>(merged[v].size());
  }
  adj_.reserve(offsets_[n_]);
  adj_w_.reserve(offsets_[n_]);
  for (int v = 0; v < n_; ++v) {
    for (const auto& [u, w] : merged[v]) {
      adj_.push_back(u);
      adj_w_.push_back(w);
      degree_[v] += w;
    }
  }
}

double UndirectedGraph::MaxDegree() const {
  return degree_.empty() ? 0.0
                         : *std::max_element(degree_.begin(), degree_.end());
}

double UndirectedGraph::InducedWeight(const Subset& s) const {
  double total = 0.0;
  for (int v : s.Elements()) {
    auto nbrs = Neighbors(v);
    auto ws = NeighborWeights(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (nbrs[i] > v && s.Contains(nbrs[i])) total += ws[i];
    }
  }
  return total;
}

UndirectedGraph UndirectedGraph::Induced(const Subset& keep,
                                         std::vector<int>* to_parent) const {
  std::vector<int> local(n_, -1);
  std::vector<int> parent;
  for (int v : keep.Elements()) {
    local[v] = static_cast<int>(parent.size());
    parent.push_back(v);
  }
  std::vector<Edge> sub;
  for (const Edge& e : edges_) {
    if (local[e.u] >= 0 && local[e.v] >= 0) {
      sub.push_back({local[e.u], local[e.v], e.w});
    }
  }
  if (to_parent != nullptr) *to_parent = parent;
  return UndirectedGraph(static_cast<int>(parent.size()), std::move(sub));
}

WeightedBipartiteGraph::WeightedBipartiteGraph(
    int left_size, std::vector<double> right_weights,
    std::vector<std::pair<int, int>> edges)
    : left_size_(left_size),
      weights_(std::move(right_weights)),
      edges_(std::move(edges)) {
  if (left_size_ < 1) throw std::invalid_argument("L must be non-empty");
  const int r = right_size();
  for (double w : weights_) {
    if (!(w >= 0.0)) throw std::invalid_argument("negative right weight");
    total_weight_ += w;
  }
  std::vector<std::pair<int, int>> unique_edges = edges_;
  for (const auto& [u, v] : unique_edges) {
    if (u < 0 || u >= left_size_ || v < 0 || v >= r) {
      throw std::invalid_argument("bipartite edge endpoint out of range");
    }
  }
  std::sort(unique_edges.begin(), unique_edges.end(),
            [](const auto& a, const auto& b) {
              return a.second != b.second ? a.second < b.second
                                          : a.first < b.first;
            });
  unique_edges.erase(std::unique(unique_edges.begin(), unique_edges.end()),
                     unique_edges.end());

  right_off_.assign(r + 1, 0);
  left_off_.assign(left_size_ + 1, 0);
  for (const auto& [u, v] : unique_edges) {
    ++right_off_[v + 1];
    ++left_off_[u + 1];
  }
  for (int v = 0; v < r; ++v) {
    if (right_off_[v + 1] == 0) {
      throw std::invalid_argument("every right vertex needs a neighbor");
    }
    right_off_[v + 1] += right_off_[v];
  }
  for (int u = 0; u < left_size_; ++u) left_off_[u + 1] += left_off_[u];
  right_adj_.resize(unique_edges.size());
  left_adj_.resize(unique_edges.size());
  std::vector<int> rpos(right_off_.begin(), right_off_.end() - 1);
  std::vector<int> lpos(left_off_.begin(), left_off_.end() - 1);
  for (const auto& [u, v] : unique_edges) {
    right_adj_[rpos[v]++] = u;
    left_adj_[lpos[u]++] = v;
  }
}

double WeightedBipartiteGraph::CoveredWeight(const Subset& s) const {
  double total = 0.0;
  for (int v = 0; v < right_size(); ++v) {
    bool covered = true;
    for (int u : LeftNeighbors(v)) {
      if (!s.Contains(u)) {
        covered = false;
        break;
      }
    }
    if (covered) total += weights_[v];
  }
  return total;
}

WeightedBipartiteGraph WeightedBipartiteGraph::RestrictLeft(
    const Subset& keep, std::vector<int>* to_parent) const {
  std::vector<int> local(left_size_, -1);
  std::vector<int> parent;
  for (int u : keep.Elements()) {
    local[u] = static_cast<int>(parent.size());
    parent.push_back(u);
  }
  std::vector<double> weights;
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < right_size(); ++v) {
    auto nbrs = LeftNeighbors(v);
    if (!std::all_of(nbrs.begin(), nbrs.end(),
                     [&](int u) { return local[u] >= 0; })) {
      continue;
    }
    const int nv = static_cast<int>(weights.size());
    weights.push_back(weights_[v]);
    for (int u : nbrs) edges.emplace_back(local[u], nv);
  }
  if (to_parent != nullptr) *to_parent = parent;
  return WeightedBipartiteGraph(static_cast<int>(parent.size()),
                                std::move(weights), std::move(edges));
}

}  // namespace ratioforge
