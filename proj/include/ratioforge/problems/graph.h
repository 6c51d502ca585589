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

#ifndef RATIOFORGE_PROBLEMS_GRAPH_H_
#define RATIOFORGE_PROBLEMS_GRAPH_H_

#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "ratioforge/setfn/subset.h"

namespace ratioforge {

struct Edge {
  int u = 0;
  int v = 0;
  double w = 1.0;
};

// Undirected graph on vertices 0..n-1 in compressed adjacency form. The
// input edge list is kept verbatim for serialization; parallel edges are
// merged (weights summed) in the adjacency arrays.
class UndirectedGraph {
 public:
  // Throws std::invalid_argument on self-loops, out-of-range endpoints,
  // negative weights or n < 1.
  UndirectedGraph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  bool weighted() const { return weighted_; }

  std::span<const int> Neighbors(int v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  std::span<const double> NeighborWeights(int v) const {
    return {adj_w_.data() + offsets_[v], adj_w_.data() + offsets_[v + 1]};
  }
  double Degree(int v) const { return degree_[v]; }
  const std::vector<double>& degrees() const { return degree_; }
  double TotalWeight() const { return total_weight_; }
  double MaxDegree() const;

  // Weighted |E(S)|.
  double InducedWeight(const Subset& s) const;

  // Subgraph induced by `keep`; to_parent[i] is the original vertex of i.
  UndirectedGraph Induced(const Subset& keep, std::vector<int>* to_parent) const;

 private:
  int n_;
  std::vector<Edge> edges_;
  bool weighted_ = false;
  std::vector<int> offsets_;
  std::vector<int> adj_;
  std::vector<double> adj_w_;
  std::vector<double> degree_;
  double total_weight_ = 0.0;
};

// Bipartite graph G(L, R, E) with non-negative weights on R. delta(v) is the
// set of left neighbors of right vertex v and is never empty.
class WeightedBipartiteGraph {
 public:
  // `edges` holds (u, v) pairs with u in L and v in R. Duplicate pairs are
  // kept for serialization and ignored in the adjacency.
  WeightedBipartiteGraph(int left_size, std::vector<double> right_weights,
                         std::vector<std::pair<int, int>> edges);

  int left_size() const { return left_size_; }
  int right_size() const { return static_cast<int>(weights_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  double weight(int v) const { return weights_[v]; }
  const std::vector<double>& weights() const { return weights_; }
  double TotalWeight() const { return total_weight_; }

  // delta(v) for v in R.
  std::span<const int> LeftNeighbors(int v) const {
    return {right_adj_.data() + right_off_[v],
            right_adj_.data() + right_off_[v + 1]};
  }
  // Right vertices adjacent to u in L.
  std::span<const int> RightNeighbors(int u) const {
    return {left_adj_.data() + left_off_[u],
            left_adj_.data() + left_off_[u + 1]};
  }

  // w({v in R : delta(v) subset of S}) for S over L.
  double CoveredWeight(const Subset& s) const;

  // The instance restricted to left vertices in `keep`: right vertices whose
  // neighborhood leaves `keep` are dropped. to_parent maps new left indices.
  WeightedBipartiteGraph RestrictLeft(const Subset& keep,
                                      std::vector<int>* to_parent) const;

 private:
  int left_size_;
  std::vector<double> weights_;
  std::vector<std::pair<int, int>> edges_;
  double total_weight_ = 0.0;
  std::vector<int> right_off_, right_adj_;
  std::vector<int> left_off_, left_adj_;
};

// R subset of V for the anchored densest subgraph problem.
using AnchorSet = Subset;

using GraphPtr = std::shared_ptr<const UndirectedGraph>;
using BipartitePtr = std::shared_ptr<const WeightedBipartiteGraph>;

}  // namespace ratioforge

#endif  // RATIOFORGE_PROBLEMS_GRAPH_H_
