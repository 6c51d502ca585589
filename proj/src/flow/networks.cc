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

#include "ratioforge/flow/networks.h"

#include <algorithm>
#include <stdexcept>

namespace ratioforge {

CutNetwork DsgCutNetwork(const UndirectedGraph& g, const Lambda& lambda,
                         std::span<const double> bonus) {
  const int n = g.n();
  if (!bonus.empty() && static_cast<int>(bonus.size()) != n) {
    throw std::invalid_argument("bonus has wrong length");
  }
  if (!(lambda.den > 0.0)) throw std::invalid_argument("lambda den must be > 0");
  CutNetwork out;
  FlowInstance& fi = out.network;
  fi.num_nodes = n + 2;
  fi.source = 0;
  fi.sink = 1;
  out.node_of.resize(n);
  const double num_pos = std::max(lambda.num, 0.0);
  const double num_neg = std::max(-lambda.num, 0.0);
  for (int v = 0; v < n; ++v) {
    out.node_of[v] = v + 2;
    const double c = bonus.empty() ? 0.0 : bonus[v];
    const double to_v = lambda.den * g.Degree(v) +
                        2.0 * lambda.den * std::max(c, 0.0) + 2.0 * num_neg;
    const double from_v = 2.0 * num_pos + 2.0 * lambda.den * std::max(-c, 0.0);
    if (to_v > 0.0) fi.arcs.push_back({0, v + 2, to_v, false});
    if (from_v > 0.0) fi.arcs.push_back({v + 2, 1, from_v, false});
  }
  for (int u = 0; u < n; ++u) {
    auto nbrs = g.Neighbors(u);
    auto ws = g.NeighborWeights(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (ws[i] > 0.0) {
        fi.arcs.push_back({u + 2, nbrs[i] + 2, lambda.den * ws[i], false});
      }
    }
  }
  return out;
}

Subset DsgCutSide(const CutNetwork& net, const CutResult& cut, bool maximal) {
  const auto& side = maximal ? cut.maximal_source_side : cut.source_side;
  Subset s(static_cast<int>(net.node_of.size()));
  for (int v = 0; v < s.universe(); ++v) {
    if (side[net.node_of[v]]) s.Insert(v);
  }
  return s;
}

CutNetwork HnsnCutNetwork(const WeightedBipartiteGraph& b,
                          const Lambda& lambda) {
  if (!(lambda.num >= 0.0)) throw std::invalid_argument("lambda must be >= 0");
  if (!(lambda.den > 0.0)) throw std::invalid_argument("lambda den must be > 0");
  const int left = b.left_size();
  const int right = b.right_size();
  CutNetwork out;
  FlowInstance& fi = out.network;
  fi.num_nodes = left + right + 2;
  fi.source = 0;
  fi.sink = 1;
  out.node_of.resize(left);
  const double infinite =
      lambda.den * b.TotalWeight() + lambda.num * left + 1.0;
  for (int u = 0; u < left; ++u) {
    out.node_of[u] = u + 2;
    fi.arcs.push_back({0, u + 2, lambda.num, false});
  }
  for (int v = 0; v < right; ++v) {
    const int node = left + v + 2;
    for (int u : b.LeftNeighbors(v)) {
      fi.arcs.push_back({u + 2, node, infinite, true});
    }
    fi.arcs.push_back({node, 1, lambda.den * b.weight(v), false});
  }
  return out;
}

Subset HnsnCutSide(const CutNetwork& net, const CutResult& cut) {
  Subset s(static_cast<int>(net.node_of.size()));
  for (int u = 0; u < s.universe(); ++u) {
    if (!cut.source_side[net.node_of[u]]) s.Insert(u);
  }
  return s;
}

}  // namespace ratioforge
