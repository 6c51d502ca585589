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

// Rounding an (approximate) minimum-norm point into discrete answers.
//
// With x* the exact minimum-norm point of B(f), every level set
// {v : x*_v <= lambda} minimizes f(S) - lambda |S|. With an approximate x
// whose duality gap is at most eps^2, the best prefix of x in sorted order
// is within 2 eps of the optimal ratio (2 n eps for minimization of f).

#ifndef RATIOFORGE_EXTRACT_ROUNDING_H_
#define RATIOFORGE_EXTRACT_ROUNDING_H_

#include <span>
#include <vector>

#include "ratioforge/setfn/base_polytope.h"
#include "ratioforge/setfn/set_function.h"
#include "ratioforge/setfn/solver_config.h"

namespace ratioforge {

enum class Certification {
  kExact,      // produced by an exact method
  kGapBound,   // x had duality gap <= eps^2, so the additive bounds hold
  kHeuristic,  // no guarantee
};

const char* CertificationName(Certification c);

struct RatioSolution {
  Subset set;
  double ratio = 0.0;    // f(S) / |S|
  double f_value = 0.0;  // f(S)
  Certification certification = Certification::kHeuristic;
};

// Label for results rounded from x with the given gap: kGapBound when
// gap <= eps^2 (plus 1e-12 relative slack), kHeuristic otherwise.
Certification CertifyGap(double gap, double eps, double norm_sq);

Objective ResolveObjective(const SetFunction& f, Objective objective);

// True when `candidate` is strictly better than `incumbent` under `objective`.
bool Improves(Objective objective, double candidate, double incumbent);

// Tracks the best set among the chain sets S_j = V \ {v_1..v_{j-1}} of every
// peel offered to it (plus the empty set for the value objectives).
class BestSetTracker {
 public:
  BestSetTracker(const SetFunction& f, Objective objective);

  // Returns true when some chain set of `peel` improved the incumbent.
  bool Offer(const PeelResult& peel);

  Objective objective() const { return objective_; }
  bool has_set() const { return has_set_; }
  const Subset& best_set() const { return best_set_; }
  // Objective value of best_set(), recomputed exactly with f.Value.
  double best_objective() const { return best_objective_; }
  double best_value() const { return best_value_; }

 private:
  const SetFunction& f_;
  Objective objective_;
  bool has_set_ = false;
  Subset best_set_;
  double best_objective_ = 0.0;
  double best_value_ = 0.0;
};

// {v : x_v <= lambda}.
Subset ThresholdSet(std::span<const double> x, double lambda);

// Prefix of x sorted ascending (ties by index) minimizing f([i]) / i.
RatioSolution BestPrefixSparse(const SetFunction& f, std::span<const double> x,
                               double eps = 0.0);

// Prefix of x sorted descending (ties by index) maximizing f([i]) / i.
RatioSolution BestPrefixDense(const SetFunction& f, std::span<const double> x,
                              double eps = 0.0);

// Minimizes f over the empty set and every ascending prefix of x. Requires
// submodular f; throws std::invalid_argument otherwise. `ratio` of the
// result is meaningless for the empty set and reported as 0.
RatioSolution SfmExtract(const SetFunction& f, std::span<const double> x,
                         double eps = 0.0);

// Mirror of SfmExtract for supermodular f: maximizes f over the empty set
// and every descending prefix of x.
RatioSolution MaxValueExtract(const SetFunction& f, std::span<const double> x,
                              double eps = 0.0);

}  // namespace ratioforge

#endif  // RATIOFORGE_EXTRACT_ROUNDING_H_
