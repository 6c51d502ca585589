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
#include "ratioforge/problems/membership.h"
#include "ratioforge/problems/oracles.h"
#include "ratioforge/setfn/base_polytope.h"
#include "test_util.h"

namespace ratioforge {
namespace {

using testing::Has;
using testing::Mask;

// f(A) + f(B) versus f(A u B) + f(A n B) over all pairs.
void ExpectLatticeInequality(const SetFunction& f) {
  const int n = f.n();
  const double sign = f.is_supermodular() ? 1.0 : -1.0;
  for (Mask a = 0; a < (Mask{1} << n); ++a) {
    for (Mask b = 0; b < (Mask{1} << n); ++b) {
      const double lhs = f.Value(Subset::FromMask(n, a)) +
                         f.Value(Subset::FromMask(n, b));
      const double rhs = f.Value(Subset::FromMask(n, a | b)) +
                         f.Value(Subset::FromMask(n, a & b));
      ASSERT_LE(sign * (lhs - rhs), 1e-9) << "A=" << a << " B=" << b;
    }
  }
}

// Marginals, incremental peel states and values agree along random peels.
void ExpectConsistentMarginals(const SetFunction& f, std::mt19937& rng) {
  const int n = f.n();
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::shuffle(order.begin(), order.end(), rng);
  auto state = f.StartPeel();
  Subset s(n, true);
  std::vector<int> touched;
  for (int v : order) {
    for (int u : s.Elements()) {
      Subset minus = s;
      minus.Erase(u);
      const double diff = f.Value(s) - f.Value(minus);
      ASSERT_NEAR(f.MarginalOfRemoval(u, s), diff, 1e-9);
      ASSERT_NEAR(state->Marginal(u), diff, 1e-9);
    }
    state->Remove(v, touched);
    s.Erase(v);
  }
}

TEST(DsgOracleTest, CliqueValueAndMarginal) {
  auto f = MakeDsgOracle(testing::Clique(4));
  const Subset all(4, true);
  EXPECT_DOUBLE_EQ(f->Value(all), 6.0);
  for (int v = 0; v < 4; ++v) EXPECT_DOUBLE_EQ(f->MarginalOfRemoval(v, all), 3.0);
  EXPECT_TRUE(f->is_supermodular());
}

TEST(DsgOracleTest, MatchesEdgeCountExhaustively) {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3 + trial % 6;
    auto edges = testing::RandomEdges(n, 0.5, rng, trial % 2);
    auto f = MakeDsgOracle(testing::MakeGraph(n, edges));
    for (Mask m = 0; m < (Mask{1} << n); ++m) {
      ASSERT_DOUBLE_EQ(f->Value(Subset::FromMask(n, m)),
                       testing::EdgesInside(edges, m));
    }
    ExpectLatticeInequality(*f);
    ExpectConsistentMarginals(*f, rng);
  }
}

TEST(PMeanOracleTest, PEqualOneIsTwiceDsg) {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + trial % 7;
    auto g = testing::RandomGraph(n, 0.5, rng);
    auto f = MakePMeanOracle(g, 1.0);
    auto d = MakeDsgOracle(g);
    for (Mask m = 0; m < (Mask{1} << n); ++m) {
      const Subset s = Subset::FromMask(n, m);
      ASSERT_DOUBLE_EQ(f->Value(s), 2.0 * d->Value(s));
    }
  }
}

TEST(PMeanOracleTest, MatchesDegreePowerSumAndIsSupermodular) {
  std::mt19937 rng(3);
  for (double p : {1.5, 2.0, 3.0}) {
    auto edges = testing::RandomEdges(6, 0.6, rng);
    auto f = MakePMeanOracle(testing::MakeGraph(6, edges), p);
    for (Mask m = 0; m < 64; ++m) {
      double expected = 0.0;
      for (int v = 0; v < 6; ++v) {
        if (Has(m, v)) expected += std::pow(testing::DegreeInside(edges, m, v), p);
      }
      ASSERT_NEAR(f->Value(Subset::FromMask(6, m)), expected, 1e-9);
    }
    ExpectLatticeInequality(*f);
    ExpectConsistentMarginals(*f, rng);
  }
}

TEST(PMeanOracleTest, RejectsPBelowOne) {
  EXPECT_THROW(MakePMeanOracle(testing::Clique(3), 0.5), std::invalid_argument);
}

TEST(HnsnOracleTest, ToyValues) {
  auto f = MakeHnsnOracle(testing::ToyBipartite());
  EXPECT_DOUBLE_EQ(f->Value(Subset::FromMask(2, 0b01)), 3.0);
  EXPECT_DOUBLE_EQ(f->Value(Subset::FromMask(2, 0b10)), 0.0);
  EXPECT_DOUBLE_EQ(f->Value(Subset::FromMask(2, 0b11)), 4.0);
}

TEST(HnsnOracleTest, MatchesCoveredWeightExhaustively) {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const int left = 2 + trial % 6;
    auto b = testing::RandomBipartite(left, 2 * left, rng, trial % 2);
    auto f = MakeHnsnOracle(b);
    for (Mask m = 0; m < (Mask{1} << left); ++m) {
      ASSERT_DOUBLE_EQ(f->Value(Subset::FromMask(left, m)),
                       testing::Covered(*b, m));
    }
    ExpectLatticeInequality(*f);
    ExpectConsistentMarginals(*f, rng);
  }
}

TEST(AnchoredOracleTest, FullAnchorSetIsTwiceDsg) {
  std::mt19937 rng(5);
  auto g = testing::RandomGraph(7, 0.5, rng);
  auto f = MakeAnchoredOracle(g, Subset(7, true));
  auto d = MakeDsgOracle(g);
  for (Mask m = 0; m < 128; ++m) {
    const Subset s = Subset::FromMask(7, m);
    ASSERT_DOUBLE_EQ(f->Value(s), 2.0 * d->Value(s));
  }
}

TEST(AnchoredOracleTest, MatchesDefinitionExhaustively) {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3 + trial % 6;
    auto edges = testing::RandomEdges(n, 0.5, rng);
    auto g = testing::MakeGraph(n, edges);
    const Mask anchors = rng() % (Mask{1} << n);
    auto f = MakeAnchoredOracle(g, Subset::FromMask(n, anchors));
    for (Mask m = 0; m < (Mask{1} << n); ++m) {
      double expected = 2.0 * testing::EdgesInside(edges, m);
      for (int v = 0; v < n; ++v) {
        if (Has(m, v) && !Has(anchors, v)) expected -= g->Degree(v);
      }
      ASSERT_DOUBLE_EQ(f->Value(Subset::FromMask(n, m)), expected);
    }
    ExpectLatticeInequality(*f);
    ExpectConsistentMarginals(*f, rng);
  }
}

TEST(MinCutOracleTest, DiamondSingleton) {
  auto f = MakeMinCutOracle(testing::Diamond());
  ASSERT_EQ(f->n(), 2);
  const int a = f->element(1);
  Subset s(2);
  s.Insert(a);
  // |delta({s, a})| - |delta({s})| = 3 - 2.
  EXPECT_DOUBLE_EQ(f->Value(s), 1.0);
  EXPECT_DOUBLE_EQ(f->offset(), 2.0);
  EXPECT_DOUBLE_EQ(f->CutValue(s), 3.0);
  EXPECT_FALSE(f->is_supermodular());
}

TEST(MinCutOracleTest, MatchesCutCapacityExhaustively) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const int nodes = 4 + trial % 5;
    auto fi = testing::RandomNetwork(nodes, 0.4, rng, 4);
    auto f = MakeMinCutOracle(fi);
    const Mask s_bit = Mask{1} << fi.source;
    const double base = testing::CutOf(fi, s_bit);
    for (Mask m = 0; m < (Mask{1} << f->n()); ++m) {
      Mask nodes_mask = s_bit;
      for (int v = 0; v < f->n(); ++v) {
        if (Has(m, v)) nodes_mask |= Mask{1} << f->node(v);
      }
      ASSERT_DOUBLE_EQ(f->Value(Subset::FromMask(f->n(), m)),
                       testing::CutOf(fi, nodes_mask) - base);
    }
    ExpectLatticeInequality(*f);
    ExpectConsistentMarginals(*f, rng);
  }
}

TEST(MembershipOracleTest, TriangleExamples) {
  MembershipInstance yes{testing::Clique(3), {1, 1, 1}};
  auto h = MakeMembershipOracle(yes);
  double best = 0.0;
  for (Mask m = 0; m < 8; ++m) best = std::max(best, h->Value(Subset::FromMask(3, m)));
  EXPECT_DOUBLE_EQ(best, 0.0);

  MembershipInstance no{testing::Clique(3), {0.4, 0.5, 2.1}};
  auto g = MakeMembershipOracle(no);
  EXPECT_NEAR(g->Value(Subset::FromMask(3, 0b011)), 0.1, 1e-12);
}

TEST(MembershipOracleTest, WrongLengthThrows) {
  MembershipInstance bad{testing::Clique(3), {1, 1}};
  EXPECT_THROW(bad.Validate(), std::invalid_argument);
}

TEST(PerturbMembershipTest, FeasiblePointLiesInBasePolytope) {
  std::mt19937 rng(8);
  // Triangle 0-1-2 with pendant 3: S* = {0, 1, 2}, density 1.
  auto g = testing::MakeGraph(4, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {2, 3, 1}});
  auto f = MakeDsgOracle(g);
  const Subset densest = Subset::FromMask(4, 0b0111);
  const auto b = FeasibleMembershipPoint(*g, densest, 1.0);
  EXPECT_EQ(b, (std::vector<double>{1, 1, 1, 1}));
  EXPECT_TRUE(InBasePolytope(*f, b, 1e-9));
  for (int trial = 0; trial < 10; ++trial) {
    auto r = testing::RandomGraph(8, 0.4, rng);
    if (SmallestDensestSubgraph(r).size() == 8) continue;
    auto p = PerturbMembership(r, 0.5);
    EXPECT_TRUE(InBasePolytope(*MakeDsgOracle(r), p.feasible_y, 1e-9));
  }
}

TEST(PerturbMembershipTest, ViolationIsExactlyEps) {
  auto g = testing::MakeGraph(4, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {2, 3, 1}});
  for (double eps : {0.1, 1.0, 6.0, 12.0}) {
    const auto p = PerturbMembership(g, eps);
    EXPECT_EQ(p.densest, Subset::FromMask(4, 0b0111));
    auto h = MakeMembershipOracle(p.instance);
    EXPECT_NEAR(h->Value(p.densest), eps, 1e-12);
    EXPECT_EQ(p.lowered, 0);
    EXPECT_EQ(p.raised, 3);
  }
}

TEST(PerturbMembershipTest, RejectsDegenerateInputs) {
  auto k4 = testing::Clique(4);
  EXPECT_THROW(PerturbMembership(k4, 1.0), std::invalid_argument);
  auto g = testing::MakeGraph(4, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {2, 3, 1}});
  EXPECT_THROW(PerturbMembership(g, 0.0), std::invalid_argument);
}

}  // namespace
}  // namespace ratioforge
