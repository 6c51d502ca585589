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


// Instance generators and direct-formula enumeration used as independent
// oracles. Nothing here goes through the library's set function classes.

#ifndef RATIOFORGE_TESTS_TEST_UTIL_H_
#define RATIOFORGE_TESTS_TEST_UTIL_H_

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <random>
#include <utility>
#include <vector>

#include "ratioforge/problems/flow_instance.h"
#include "ratioforge/problems/graph.h"
#include "ratioforge/setfn/subset.h"

namespace ratioforge::testing {

using Mask = std::uint32_t;

inline bool Has(Mask m, int v) { return (m >> v) & 1u; }
inline int Popcount(Mask m) { return __builtin_popcount(m); }

// Erdos-Renyi G(n, p); weights in {1, ..., 5} when `weighted`.
inline std::vector<Edge> RandomEdges(int n, double p, std::mt19937& rng,
                                     bool weighted = false) {
  std::bernoulli_distribution coin(p);
  std::uniform_int_distribution<int> weight(1, 5);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v, weighted ? 1.0 * weight(rng) : 1.0});
    }
  }
  return edges;
}

inline GraphPtr RandomGraph(int n, double p, std::mt19937& rng,
                            bool weighted = false) {
  return std::make_shared<const UndirectedGraph>(
      n, RandomEdges(n, p, rng, weighted));
}

inline GraphPtr MakeGraph(int n, std::vector<Edge> edges) {
  return std::make_shared<const UndirectedGraph>(n, std::move(edges));
}

inline GraphPtr Clique(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v, 1.0});
  }
  return MakeGraph(n, edges);
}

// K5 on 0..4 plus a disjoint K3 on 5..7.
inline GraphPtr K5K3() {
  std::vector<Edge> edges;
  for (int u = 0; u < 5; ++u) {
    for (int v = u + 1; v < 5; ++v) edges.push_back({u, v, 1.0});
  }
  edges.push_back({5, 6, 1.0});
  edges.push_back({5, 7, 1.0});
  edges.push_back({6, 7, 1.0});
  return MakeGraph(8, edges);
}

// Random bipartite instance; every right vertex gets 1 to 3 neighbors.
inline BipartitePtr RandomBipartite(int left, int right, std::mt19937& rng,
                                    bool weighted = false) {
  std::uniform_int_distribution<int> pick(0, left - 1);
  std::uniform_int_distribution<int> degree(1, std::min(3, left));
  std::uniform_int_distribution<int> weight(1, 5);
  std::vector<double> w(right);
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < right; ++v) {
    w[v] = weighted ? weight(rng) : 1.0;
    const int d = degree(rng);
    std::vector<char> used(left, 0);
    for (int k = 0; k < d; ++k) {
      int u = pick(rng);
      while (used[u]) u = (u + 1) % left;
      used[u] = 1;
      edges.emplace_back(u, v);
    }
  }
  return std::make_shared<const WeightedBipartiteGraph>(left, std::move(w),
                                                        std::move(edges));
}

// L = {0, 1}; R = {a: weight 3, delta = {0}}, {b: weight 1, delta = {0, 1}}.
inline BipartitePtr ToyBipartite() {
  return std::make_shared<const WeightedBipartiteGraph>(
      2, std::vector<double>{3.0, 1.0},
      std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 1}});
}

// Random directed network with unit or integer capacities.
inline FlowInstance RandomNetwork(int n, double p, std::mt19937& rng,
                                  int max_cap = 1) {
  std::bernoulli_distribution coin(p);
  std::uniform_int_distribution<int> cap(1, max_cap);
  FlowInstance fi;
  fi.num_nodes = n;
  fi.source = 0;
  fi.sink = n - 1;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && coin(rng)) fi.arcs.push_back({u, v, 1.0 * cap(rng), false});
    }
  }
  return fi;
}

// s-a, s-b, a-t, b-t, a-b with unit capacity in both directions.
// Nodes s = 0, a = 1, b = 2, t = 3.
inline FlowInstance Diamond() {
  FlowInstance fi;
  fi.num_nodes = 4;
  fi.source = 0;
  fi.sink = 3;
  const int pairs[5][2] = {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 2}};
  for (const auto& p : pairs) {
    fi.arcs.push_back({p[0], p[1], 1.0, false});
    fi.arcs.push_back({p[1], p[0], 1.0, false});
  }
  return fi;
}

// Direct formulas over bit masks.
inline double EdgesInside(const std::vector<Edge>& edges, Mask m) {
  double total = 0.0;
  for (const Edge& e : edges) {
    if (Has(m, e.u) && Has(m, e.v)) total += e.w;
  }
  return total;
}

inline double DegreeInside(const std::vector<Edge>& edges, Mask m, int v) {
  double d = 0.0;
  for (const Edge& e : edges) {
    if (Has(m, e.u) && Has(m, e.v) && (e.u == v || e.v == v)) d += e.w;
  }
  return d;
}

inline double Covered(const WeightedBipartiteGraph& b, Mask m) {
  std::vector<char> outside(b.right_size(), 0);
  for (const auto& [u, v] : b.edges()) {
    if (!Has(m, u)) outside[v] = 1;
  }
  double total = 0.0;
  for (int v = 0; v < b.right_size(); ++v) {
    if (!outside[v]) total += b.weight(v);
  }
  return total;
}

// Capacity of arcs leaving the node set `m`.
inline double CutOf(const FlowInstance& fi, Mask m) {
  double total = 0.0;
  for (const Arc& a : fi.arcs) {
    if (Has(m, a.tail) && !Has(m, a.head)) total += a.capacity;
  }
  return total;
}

// Minimum s-t cut by enumerating the 2^(n-2) source sides.
inline double EnumeratedMinCut(const FlowInstance& fi) {
  double best = std::numeric_limits<double>::infinity();
  for (Mask m = 0; m < (Mask{1} << fi.num_nodes); ++m) {
    if (!Has(m, fi.source) || Has(m, fi.sink)) continue;
    best = std::min(best, CutOf(fi, m));
  }
  return best;
}

struct Enumerated {
  double best = 0.0;
  std::vector<Mask> argbest;  // every optimal mask within the tolerance
};

// Optimizes `fn` over masks of {0..n-1}. `ratio` divides by |S| and skips
// the empty set.
inline Enumerated Enumerate(int n, const std::function<double(Mask)>& fn,
                            bool maximize, bool ratio, double tol = 1e-9) {
  std::vector<std::pair<Mask, double>> values;
  double best = maximize ? -std::numeric_limits<double>::infinity()
                         : std::numeric_limits<double>::infinity();
  for (Mask m = ratio ? 1 : 0; m < (Mask{1} << n); ++m) {
    double v = fn(m);
    if (ratio) v /= Popcount(m);
    values.emplace_back(m, v);
    best = maximize ? std::max(best, v) : std::min(best, v);
  }
  Enumerated out;
  out.best = best;
  for (const auto& [m, v] : values) {
    if (std::abs(v - best) <= tol * (1.0 + std::abs(best))) {
      out.argbest.push_back(m);
    }
  }
  return out;
}

inline Mask ToMask(const Subset& s) {
  Mask m = 0;
  for (int v : s.Elements()) m |= Mask{1} << v;
  return m;
}

}  // namespace ratioforge::testing

#endif  // RATIOFORGE_TESTS_TEST_UTIL_H_
