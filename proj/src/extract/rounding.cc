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

#include "ratioforge/extract/rounding.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ratioforge {

const char* CertificationName(Certification c) {
  switch (c) {
    case Certification::kExact:
      return "exact";
    case Certification::kGapBound:
      return "gap<=eps2";
    case Certification::kHeuristic:
      return "heuristic";
  }
  return "heuristic";
}

Certification CertifyGap(double gap, double eps, double norm_sq) {
  return gap <= eps * eps + 1e-12 * (1.0 + norm_sq) ? Certification::kGapBound
                                                    : Certification::kHeuristic;
}

Objective ResolveObjective(const SetFunction& f, Objective objective) {
  if (objective != Objective::kAuto) return objective;
  return f.is_supermodular() ? Objective::kMaxRatio : Objective::kMinValue;
}

bool Improves(Objective objective, double candidate, double incumbent) {
  switch (objective) {
    case Objective::kMaxRatio:
    case Objective::kMaxValue:
      return candidate > incumbent;
    case Objective::kMinRatio:
    case Objective::kMinValue:
    case Objective::kAuto:
      return candidate < incumbent;
  }
  return false;
}

namespace {

bool IsRatio(Objective o) {
  return o == Objective::kMaxRatio || o == Objective::kMinRatio;
}

}  // namespace

BestSetTracker::BestSetTracker(const SetFunction& f, Objective objective)
    : f_(f), objective_(ResolveObjective(f, objective)), best_set_(f.n()) {
  if (!IsRatio(objective_)) {
    // The empty set is always a candidate for the value objectives.
    has_set_ = true;
    best_objective_ = 0.0;
    best_value_ = 0.0;
  }
}

bool BestSetTracker::Offer(const PeelResult& peel) {
  const int n = f_.n();
  int best_j = -1;
  double best = best_objective_;
  bool have = has_set_;
  for (int j = 0; j < n; ++j) {
    const double value = peel.remaining_value[j];
    const double obj = IsRatio(objective_) ? value / (n - j) : value;
    if (!have || Improves(objective_, obj, best)) {
      have = true;
      best = obj;
      best_j = j;
    }
  }
  if (best_j < 0) return false;
  Subset s(n);
  for (int j = best_j; j < n; ++j) s.Insert(peel.order[j]);
  const double value = f_.Value(s);
  const double exact = IsRatio(objective_) ? value / s.size() : value;
  // Telescoped values can drift from exact ones; keep the incumbent unless
  // the exact objective really improves.
  if (has_set_ && !Improves(objective_, exact, best_objective_)) return false;
  has_set_ = true;
  best_set_ = std::move(s);
  best_objective_ = exact;
  best_value_ = value;
  return true;
}

Subset ThresholdSet(std::span<const double> x, double lambda) {
  Subset s(static_cast<int>(x.size()));
  for (int v = 0; v < static_cast<int>(x.size()); ++v) {
    if (x[v] <= lambda) s.Insert(v);
  }
  return s;
}

namespace {

// Peels V in the reverse of `prefix_order`, so the chain sets are exactly the
// prefixes of `prefix_order`.
PeelResult PeelPrefixes(const SetFunction& f, std::vector<int> prefix_order) {
  std::reverse(prefix_order.begin(), prefix_order.end());
  return EdmondsGreedy(f, prefix_order);
}

std::vector<int> SortedOrder(std::span<const double> x, bool ascending) {
  std::vector<int> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  if (ascending) {
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return x[a] < x[b]; });
  } else {
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return x[a] > x[b]; });
  }
  return order;
}

Certification CertifyPoint(const SetFunction& f, std::span<const double> x,
                           double eps) {
  const PeelResult lmo = Lmo(f, x);
  const double sum = std::accumulate(x.begin(), x.end(), 0.0);
  if (std::abs(sum - lmo.point.f_of_v) > BaseTolerance(lmo.point.f_of_v)) {
    return Certification::kHeuristic;
  }
  return CertifyGap(DualityGap(x, lmo.point), eps, Dot(x, x));
}

RatioSolution Extract(const SetFunction& f, std::span<const double> x,
                      double eps, bool ascending, Objective objective) {
  if (static_cast<int>(x.size()) != f.n()) {
    throw std::invalid_argument("point has wrong length");
  }
  BestSetTracker tracker(f, objective);
  tracker.Offer(PeelPrefixes(f, SortedOrder(x, ascending)));
  RatioSolution out;
  out.set = tracker.best_set();
  out.f_value = tracker.best_value();
  out.ratio = out.set.empty() ? 0.0 : out.f_value / out.set.size();
  out.certification = CertifyPoint(f, x, eps);
  return out;
}

}  // namespace

RatioSolution BestPrefixSparse(const SetFunction& f, std::span<const double> x,
                               double eps) {
  return Extract(f, x, eps, /*ascending=*/true, Objective::kMinRatio);
}

RatioSolution BestPrefixDense(const SetFunction& f, std::span<const double> x,
                              double eps) {
  return Extract(f, x, eps, /*ascending=*/false, Objective::kMaxRatio);
}

RatioSolution SfmExtract(const SetFunction& f, std::span<const double> x,
                         double eps) {
  if (f.is_supermodular()) {
    throw std::invalid_argument("SFM extraction requires a submodular oracle");
  }
  return Extract(f, x, eps, /*ascending=*/true, Objective::kMinValue);
}

RatioSolution MaxValueExtract(const SetFunction& f, std::span<const double> x,
                              double eps) {
  if (!f.is_supermodular()) {
    throw std::invalid_argument("max-value extraction requires supermodular f");
  }
  return Extract(f, x, eps, /*ascending=*/false, Objective::kMaxValue);
}

}  // namespace ratioforge
