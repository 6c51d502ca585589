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


#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "ratioforge/flow/exact_solvers.h"
#include "ratioforge/flow/max_flow.h"
#include "ratioforge/flow/networks.h"
#include "ratioforge/problems/oracles.h"
#include "test_util.h"

namespace ratioforge {
namespace {

using testing::Has;
using testing::Mask;

void ExpectValidFlow(const FlowInstance& fi, const CutResult& r) {
  EXPECT_LE(MaxConservationViolation(fi, r.arc_flow), 1e-9);
  EXPECT_LE(MaxCapacityViolation(fi, r.arc_flow), 1e-9);
  ASSERT_TRUE(r.source_side[fi.source]);
  ASSERT_FALSE(r.source_side[fi.sink]);
  EXPECT_NEAR(fi.CutCapacity(r.source_side), r.value, 1e-9);
  EXPECT_NEAR(fi.CutCapacity(r.maximal_source_side), r.value, 1e-9);
  for (int v = 0; v < fi.num_nodes; ++v) {
    if (r.source_side[v]) EXPECT_TRUE(r.maximal_source_side[v]);
  }
}

TEST(MaxFlowTest, Diamond) {
  const FlowInstance fi = testing::Diamond();
  for (FlowKernel k : {FlowKernel::kPushRelabel, FlowKernel::kEdmondsKarp}) {
    const CutResult r = MaxFlow(fi, k);
    EXPECT_DOUBLE_EQ(r.value, 2.0) << FlowKernelName(k);
    ExpectValidFlow(fi, r);
  }
}

TEST(MaxFlowTest, SingleArcAndZeroCapacity) {
  FlowInstance fi;
  fi.num_nodes = 2;
  fi.arcs = {{0, 1, 7.0, false}};
  EXPECT_DOUBLE_EQ(PushRelabel(fi).value, 7.0);
  EXPECT_DOUBLE_EQ(EdmondsKarp(fi).value, 7.0);
  FlowInstance zero = testing::Diamond();
  for (Arc& a : zero.arcs) a.capacity = 0.0;
  EXPECT_DOUBLE_EQ(PushRelabel(zero).value, 0.0);
  EXPECT_DOUBLE_EQ(EdmondsKarp(zero).value, 0.0);
}

TEST(MaxFlowTest, PushRelabelMatchesEdmondsKarp) {
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> size(2, 50);
  std::uniform_real_distribution<double> density(0.05, 0.5);
  for (int trial = 0; trial < 200; ++trial) {
    const FlowInstance fi =
        testing::RandomNetwork(size(rng), density(rng), rng, trial % 3 ? 10 : 1);
    const CutResult pr = PushRelabel(fi);
    const CutResult ek = EdmondsKarp(fi);
    ASSERT_NEAR(pr.value, ek.value, 1e-9) << "trial " << trial;
    ExpectValidFlow(fi, pr);
    ExpectValidFlow(fi, ek);
    // Minimal and maximal minimum cuts are unique.
    EXPECT_EQ(pr.source_side, ek.source_side);
    EXPECT_EQ(pr.maximal_source_side, ek.maximal_source_side);
  }
}

TEST(MaxFlowTest, MatchesCutEnumeration) {
  std::mt19937 rng(22);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 11;
    const FlowInstance fi = testing::RandomNetwork(n, 0.4, rng, 6);
    const double expected = testing::EnumeratedMinCut(fi);
    EXPECT_NEAR(PushRelabel(fi).value, expected, 1e-9);
    EXPECT_NEAR(EdmondsKarp(fi).value, expected, 1e-9);
  }
}

TEST(MaxFlowTest, RealCapacities) {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> cap(0.0, 3.0);
  for (int trial = 0; trial < 30; ++trial) {
    FlowInstance fi = testing::RandomNetwork(10, 0.4, rng);
    for (Arc& a : fi.arcs) a.capacity = cap(rng);
    const double expected = testing::EnumeratedMinCut(fi);
    EXPECT_NEAR(PushRelabel(fi).value, expected, 1e-9 * (1 + expected));
    EXPECT_NEAR(EdmondsKarp(fi).value, expected, 1e-9 * (1 + expected));
  }
}

TEST(DsgNetworkTest, CliqueAtLambdaOneTakesEverything) {
  auto g = testing::Clique(4);
  const CutNetwork net = DsgCutNetwork(*g, Lambda{1.0, 1.0});
  EXPECT_EQ(DsgCutSide(net, MaxFlow(net.network, FlowKernel::kPushRelabel)),
            Subset(4, true));
}

TEST(DsgNetworkTest, LambdaAboveCliqueDensityGivesEmptySet) {
  auto g = testing::Clique(5);
  const CutNetwork net = DsgCutNetwork(*g, Lambda{2.01, 1.0});
  EXPECT_TRUE(DsgCutSide(net, MaxFlow(net.network, FlowKernel::kEdmondsKarp))
                  .empty());
}

TEST(DsgNetworkTest, MaximizesShiftedObjectiveWithBonus) {
  std::mt19937 rng(24);
  std::uniform_int_distribution<int> num(-6, 12);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> bonus(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 9;
    auto edges = testing::RandomEdges(n, 0.5, rng, trial % 2);
    auto g = testing::MakeGraph(n, edges);
    const Lambda lambda{1.0 * num(rng), 1.0 * den(rng)};
    std::vector<double> c;
    if (trial % 3) {
      for (int v = 0; v < n; ++v) c.push_back(0.5 * bonus(rng));
    }
    auto objective = [&](Mask m) {
      double value = testing::EdgesInside(edges, m) -
                     lambda.value() * testing::Popcount(m);
      for (int v = 0; v < n; ++v) {
        if (Has(m, v) && !c.empty()) value += c[v];
      }
      return value;
    };
    const auto best = testing::Enumerate(n, objective, true, false);
    const CutNetwork net = DsgCutNetwork(*g, lambda, c);
    const CutResult cut = MaxFlow(net.network, FlowKernel::kPushRelabel);
    const Subset minimal = DsgCutSide(net, cut);
    const Subset maximal = DsgCutSide(net, cut, /*maximal=*/true);
    EXPECT_NEAR(objective(testing::ToMask(minimal)), best.best, 1e-9);
    EXPECT_NEAR(objective(testing::ToMask(maximal)), best.best, 1e-9);
    // Minimal and maximal maximizers bracket every maximizer.
    for (Mask m : best.argbest) {
      EXPECT_EQ(testing::ToMask(minimal) & ~m, 0u);
      EXPECT_EQ(m & ~testing::ToMask(maximal), 0u);
    }
  }
}

TEST(HnsnNetworkTest, ToyAtTwoAndAHalf) {
  auto b = testing::ToyBipartite();
  const CutNetwork net = HnsnCutNetwork(*b, Lambda{2.5, 1.0});
  const Subset s = HnsnCutSide(net, MaxFlow(net.network, FlowKernel::kPushRelabel));
  EXPECT_EQ(s, Subset::FromMask(2, 0b01));
  EXPECT_DOUBLE_EQ(2.5 * s.size() - b->CoveredWeight(s), -0.5);
}

TEST(HnsnNetworkTest, LambdaAboveTotalWeightGivesEmptySet) {
  auto b = testing::ToyBipartite();
  const CutNetwork net = HnsnCutNetwork(*b, Lambda{4.5, 1.0});
  EXPECT_TRUE(HnsnCutSide(net, MaxFlow(net.network, FlowKernel::kEdmondsKarp))
                  .empty());
}

TEST(HnsnNetworkTest, MinimizesPhiExhaustively) {
  std::mt19937 rng(25);
  std::uniform_int_distribution<int> num(0, 12);
  for (int trial = 0; trial < 100; ++trial) {
    const int left = 1 + trial % 8;
    auto b = testing::RandomBipartite(left, 1 + trial % 10, rng, trial % 2);
    const Lambda lambda{1.0 * num(rng), 2.0};
    auto phi = [&](Mask m) {
      return lambda.value() * testing::Popcount(m) - testing::Covered(*b, m);
    };
    const auto best = testing::Enumerate(left, phi, false, false);
    const CutNetwork net = HnsnCutNetwork(*b, lambda);
    const Subset s = HnsnCutSide(net, MaxFlow(net.network, FlowKernel::kPushRelabel));
    EXPECT_NEAR(phi(testing::ToMask(s)), best.best, 1e-9);
  }
}

TEST(FlowDsgSolverTest, K5PlusK3InTwoCalls) {
  const DinkelbachResult r = FlowDsgSolver(testing::K5K3());
  EXPECT_DOUBLE_EQ(r.solution.ratio, 2.0);
  EXPECT_EQ(r.solution.set, Subset::FromMask(8, 0b11111));
  EXPECT_LE(r.calls, 2);
  EXPECT_EQ(r.solution.certification, Certification::kExact);
}

TEST(FlowDsgSolverTest, KernelsAgreeAndMatchEnumeration) {
  std::mt19937 rng(26);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 10;
    auto edges = testing::RandomEdges(n, trial % 2 ? 0.2 : 0.5, rng, trial % 3 == 0);
    auto g = testing::MakeGraph(n, edges);
    const auto best = testing::Enumerate(
        n, [&](Mask m) { return testing::EdgesInside(edges, m); }, true, true);
    const auto pr = FlowDsgSolver(g, {}, FlowKernel::kPushRelabel);
    const auto ek = FlowDsgSolver(g, {}, FlowKernel::kEdmondsKarp);
    EXPECT_NEAR(pr.solution.ratio, best.best, 1e-9 * (1 + best.best));
    EXPECT_NEAR(ek.solution.ratio, best.best, 1e-9 * (1 + best.best));
    EXPECT_LE(pr.calls, n + 1);
  }
}

TEST(FlowHnsnSolverTest, ToyRatioThree) {
  const DinkelbachResult r = FlowHnsnSolver(testing::ToyBipartite());
  EXPECT_DOUBLE_EQ(r.solution.ratio, 3.0);
  EXPECT_EQ(r.solution.set, Subset::FromMask(2, 0b01));
}

TEST(FlowMaxDsgValueTest, MatchesEnumerationWithNegativeBonus) {
  std::mt19937 rng(27);
  std::uniform_real_distribution<double> y(0.0, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 9;
    auto edges = testing::RandomEdges(n, 0.5, rng);
    auto g = testing::MakeGraph(n, edges);
    std::vector<double> c(n);
    for (double& v : c) v = -y(rng);
    auto h = [&](Mask m) {
      double value = testing::EdgesInside(edges, m);
      for (int v = 0; v < n; ++v) {
        if (Has(m, v)) value += c[v];
      }
      return value;
    };
    const auto best = testing::Enumerate(n, h, true, false);
    const ValueSolution r = FlowMaxDsgValue(*g, c);
    EXPECT_NEAR(r.value, best.best, 1e-9);
    EXPECT_NEAR(h(testing::ToMask(r.set)), best.best, 1e-9);
  }
}

TEST(SmallestDensestSubgraphTest, TrianglePlusPendant) {
  auto g = testing::MakeGraph(4, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {2, 3, 1}});
  EXPECT_EQ(SmallestDensestSubgraph(g), Subset::FromMask(4, 0b0111));
}

TEST(SmallestDensestSubgraphTest, MatchesEnumeration) {
  std::mt19937 rng(28);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 9;
    auto edges = testing::RandomEdges(n, 0.4, rng);
    auto g = testing::MakeGraph(n, edges);
    const auto best = testing::Enumerate(
        n, [&](Mask m) { return testing::EdgesInside(edges, m); }, true, true);
    int smallest = n + 1;
    for (Mask m : best.argbest) smallest = std::min(smallest, testing::Popcount(m));
    const Subset s = SmallestDensestSubgraph(g);
    EXPECT_EQ(s.size(), smallest);
    EXPECT_NEAR(g->InducedWeight(s) / s.size(), best.best, 1e-9);
  }
}

}  // namespace
}  // namespace ratioforge
