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
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "ratioforge/cli/brute_force.h"
#include "ratioforge/problems/oracles.h"
#include "ratioforge/setfn/adapters.h"
#include "ratioforge/setfn/base_polytope.h"
#include "ratioforge/setfn/text_format.h"
#include "ratioforge/universal/peel.h"
#include "ratioforge/universal/solvers.h"
#include "ratioforge/universal/trace.h"
#include "test_util.h"

namespace ratioforge {
namespace {

using testing::Mask;

constexpr UniversalAlgorithm kAll[] = {UniversalAlgorithm::kSuperGreedy,
                                       UniversalAlgorithm::kFrankWolfe,
                                       UniversalAlgorithm::kFujishigeWolfe};

// Quadratic-time peel through value differences only.
PeelResult ReferencePeel(const SetFunction& f, const std::vector<double>& w,
                         bool argmin) {
  const int n = f.n();
  Subset s(n, true);
  PeelResult r;
  r.point.x.assign(n, 0.0);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    double best = 0.0;
    for (int v : s.Elements()) {
      Subset minus = s;
      minus.Erase(v);
      const double key = w[v] + f.Value(s) - f.Value(minus);
      if (pick < 0 || (argmin ? key < best : key > best)) {
        pick = v;
        best = key;
      }
    }
    Subset minus = s;
    minus.Erase(pick);
    r.point.x[pick] = f.Value(s) - f.Value(minus);
    r.order.push_back(pick);
    s = minus;
  }
  return r;
}

TEST(PeelWeightedTest, ZeroWeightsOnK4GiveAVertex) {
  auto f = MakeDsgOracle(testing::Clique(4));
  const PeelResult r = PeelWeighted(*f, std::vector<double>(4, 0.0));
  EXPECT_DOUBLE_EQ(r.point.Sum(), 6.0);
  EXPECT_TRUE(InBasePolytope(*f, r.point.x, 1e-12));
}

TEST(PeelWeightedTest, MatchesReferencePeel) {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> weight(-3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 9;
    SetFunctionPtr f;
    switch (trial % 4) {
      case 0:
        f = MakeDsgOracle(testing::RandomGraph(n, 0.5, rng));
        break;
      case 1:
        f = MakeHnsnOracle(testing::RandomBipartite(n, n, rng));
        break;
      case 2:
        f = Negate(MakeDsgOracle(testing::RandomGraph(n, 0.5, rng, true)));
        break;
      default:
        f = MakeMinCutOracle(testing::RandomNetwork(n + 2, 0.4, rng, 3));
        break;
    }
    std::vector<double> w(n);
    for (double& v : w) v = weight(rng);
    const PeelResult got = PeelWeighted(*f, w);
    const PeelResult want = ReferencePeel(*f, w, f->is_supermodular());
    EXPECT_EQ(got.order, want.order) << "trial " << trial;
    for (int v = 0; v < n; ++v) EXPECT_NEAR(got.point.x[v], want.point.x[v], 1e-9);
  }
}

TEST(PeelWeightedTest, ExplicitDirection) {
  auto f = MakeDsgOracle(testing::MakeGraph(3, {{0, 1, 1}, {1, 2, 1}}));
  const std::vector<double> w = {0, 0, 0};
  // argmin removes an endpoint first; argmax removes the middle vertex.
  EXPECT_EQ(PeelWeighted(*f, w, PeelDirection::kArgMin).order.front(), 0);
  EXPECT_EQ(PeelWeighted(*f, w, PeelDirection::kArgMax).order.front(), 1);
}

TEST(SolverTest, CliqueConvergesToUniformPoint) {
  auto f = MakeDsgOracle(testing::Clique(4));
  SolverConfig cfg;
  cfg.max_iters = 2000;
  for (UniversalAlgorithm a : kAll) {
    // Frank-Wolfe's gap decays like 1/k; the other two are much faster here.
    cfg.eps = a == UniversalAlgorithm::kFrankWolfe ? 0.1 : 1e-3;
    const SolveResult r = SolveUniversal(*f, a, cfg);
    EXPECT_TRUE(r.converged) << UniversalAlgorithmName(a);
    EXPECT_LE(r.gap, cfg.eps * cfg.eps);
    // |x - x*|^2 <= gap for points of B(f).
    for (double v : r.x.x) EXPECT_NEAR(v, 1.5, cfg.eps);
    EXPECT_DOUBLE_EQ(r.best_objective, 1.5);
  }
}

TEST(SolverTest, NegatedCliqueConvergesToNegatedPoint) {
  auto f = Negate(MakeDsgOracle(testing::Clique(4)));
  SolverConfig cfg;
  cfg.eps = 1e-4;
  cfg.max_iters = 100;
  const SolveResult r = FujishigeWolfe(*f, cfg);
  ASSERT_TRUE(r.converged);
  for (double v : r.x.x) EXPECT_NEAR(v, -1.5, 1e-6);
}

TEST(SolverTest, IteratesLieInBasePolytopeAndTraceIsWellFormed) {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 3 + trial % 6;
    SetFunctionPtr f = trial % 2
                           ? SetFunctionPtr(MakeDsgOracle(testing::RandomGraph(n, 0.5, rng)))
                           : SetFunctionPtr(MakeMinCutOracle(
                                 testing::RandomNetwork(n + 2, 0.4, rng, 3)));
    SolverConfig cfg;
    cfg.max_iters = 50;
    cfg.record_time = false;
    for (UniversalAlgorithm a : kAll) {
      const SolveResult r = SolveUniversal(*f, a, cfg);
      EXPECT_TRUE(InBasePolytope(*f, r.x.x, 1e-7)) << UniversalAlgorithmName(a);
      EXPECT_NEAR(r.gap, DualityGap(*f, r.x.x), 1e-7);
      ASSERT_FALSE(r.trace.empty());
      int last = -1;
      double best = r.trace.records().front().best_obj;
      for (const TraceRecord& rec : r.trace.records()) {
        EXPECT_GT(rec.iter, last);
        last = rec.iter;
        EXPECT_EQ(rec.elapsed_s, 0.0);
        ASSERT_TRUE(rec.norm_sq.has_value());
        // best_obj is monotone in the objective's direction.
        if (f->is_supermodular()) {
          EXPECT_GE(rec.best_obj, best);
        } else {
          EXPECT_LE(rec.best_obj, best);
        }
        best = rec.best_obj;
      }
      EXPECT_DOUBLE_EQ(r.trace.back().best_obj, r.best_objective);
      EXPECT_DOUBLE_EQ(f->Value(r.best_set), r.best_value);
    }
  }
}

TEST(SolverTest, SuperGreedyTraceStartsAtOneAndRespectsCadence) {
  std::mt19937 rng(45);
  auto f = MakeDsgOracle(testing::RandomGraph(20, 0.3, rng, true));
  SolverConfig cfg;
  cfg.max_iters = 10;
  cfg.trace_every = 3;
  const SolveResult r = SuperGreedyPP(*f, cfg);
  ASSERT_EQ(r.trace.size(), 10u);
  EXPECT_EQ(r.trace.records().front().iter, 1);
  for (const TraceRecord& rec : r.trace.records()) {
    EXPECT_EQ(rec.gap.has_value(), rec.iter % 3 == 0 || rec.iter == 10)
        << rec.iter;
  }
}

TEST(SolverTest, StepRulesBothReachTheDensestSubgraph) {
  auto f = MakeDsgOracle(testing::K5K3());
  for (StepRule rule : {StepRule::kHarmonic, StepRule::kStandard}) {
    SolverConfig cfg;
    cfg.step_rule = rule;
    cfg.max_iters = 50;
    EXPECT_DOUBLE_EQ(SuperGreedyPP(*f, cfg).best_objective, 2.0);
  }
}

TEST(SolverTest, WolfeMatchesQuadraticProgram) {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + trial % 7;
    SetFunctionPtr f = trial % 2
        ? SetFunctionPtr(MakeHnsnOracle(testing::RandomBipartite(n, n + 3, rng, true)))
        : SetFunctionPtr(MakeMinCutOracle(testing::RandomNetwork(n + 2, 0.4, rng, 4)));
    SolverConfig cfg;
    cfg.max_iters = 1000;
    cfg.eps = 1e-6;
    const SolveResult r = FujishigeWolfe(*f, cfg);
    EXPECT_TRUE(r.converged);
    const auto qp = BruteMnpQp(*f);
    for (int v = 0; v < n; ++v) EXPECT_NEAR(r.x.x[v], qp[v], 1e-5);
  }
}

TEST(SolverTest, DeterministicWithoutClock) {
  std::mt19937 rng(44);
  auto f = MakeDsgOracle(testing::RandomGraph(30, 0.2, rng, true));
  SolverConfig cfg;
  cfg.max_iters = 40;
  cfg.record_time = false;
  for (UniversalAlgorithm a : kAll) {
    EXPECT_EQ(SolveUniversal(*f, a, cfg).trace.ToCsv(),
              SolveUniversal(*f, a, cfg).trace.ToCsv());
  }
}

TEST(SolverTest, RejectsInvalidConfig) {
  auto f = MakeDsgOracle(testing::Clique(3));
  SolverConfig cfg;
  cfg.max_iters = 0;
  for (UniversalAlgorithm a : kAll) {
    EXPECT_THROW(SolveUniversal(*f, a, cfg), std::invalid_argument);
  }
}

TEST(TraceTest, CsvRoundTrip) {
  ConvergenceTrace t;
  t.Add({1, 0.0, 1.5, 3.25, std::nullopt, 4});
  t.Add({2, 0.5, 2.0, 3.0, 0.125, 5});
  const std::string csv = t.ToCsv();
  EXPECT_EQ(csv,
            "iter,elapsed_s,best_obj,norm_sq,gap,set_size\n"
            "1,0,1.5,3.25,,4\n"
            "2,0.5,2,3,0.125,5\n");
  std::istringstream in(csv);
  EXPECT_EQ(ConvergenceTrace::ReadCsv(in, "t").ToCsv(), csv);
}

TEST(TraceTest, RejectsBadRowsAndHeaders) {
  std::istringstream bad_header("iter,elapsed,best_obj,norm_sq,gap,set_size\n");
  EXPECT_THROW(ConvergenceTrace::ReadCsv(bad_header, "t"), ParseError);
  std::istringstream bad_row(std::string(kTraceHeader) + "\n1,0,x,,,1\n");
  try {
    ConvergenceTrace::ReadCsv(bad_row, "t");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  ConvergenceTrace t;
  t.Add({2, 1.0, 0.0, std::nullopt, std::nullopt, 0});
  EXPECT_THROW(t.Add({2, 1.0, 0.0, std::nullopt, std::nullopt, 0}),
               std::invalid_argument);
  EXPECT_THROW(t.Add({3, 0.5, 0.0, std::nullopt, std::nullopt, 0}),
               std::invalid_argument);
}

}  // namespace
}  // namespace ratioforge
