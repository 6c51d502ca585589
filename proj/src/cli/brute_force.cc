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

#include "ratioforge/cli/brute_force.h"

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ratioforge {
namespace {

void CheckSize(const SetFunction& f, int limit) {
  if (f.n() > limit) {
    throw std::invalid_argument("brute force is limited to n <= " +
                                std::to_string(limit));
  }
}

// Calls visit(mask, subset, value) for every non-empty subset.
template <typename Visit>
void ForEachSubset(const SetFunction& f, Visit&& visit) {
  const int n = f.n();
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    Subset s = Subset::FromMask(n, mask);
    const double value = f.Value(s);
    visit(mask, s, value);
  }
}

RatioSolution BruteRatio(const SetFunction& f, bool maximize) {
  CheckSize(f, kBruteForceMaxN);
  RatioSolution best;
  bool have = false;
  ForEachSubset(f, [&](std::uint64_t, const Subset& s, double value) {
    if (!have) {
      have = true;
      best.set = s;
      best.f_value = value;
      return;
    }
    // Compare value / |s| with best.f_value / |best| without division.
    const double lhs = value * best.set.size();
    const double rhs = best.f_value * s.size();
    const double tol =
        1e-12 * (1.0 + std::abs(lhs) + std::abs(rhs));
    const double diff = maximize ? lhs - rhs : rhs - lhs;
    if (diff > tol || (diff >= -tol && s.size() > best.set.size())) {
      best.set = s;
      best.f_value = value;
    }
  });
  best.ratio = best.f_value / best.set.size();
  best.certification = Certification::kExact;
  return best;
}

ExactMax BruteValue(const SetFunction& f, bool maximize) {
  CheckSize(f, kBruteForceMaxN);
  ExactMax best{Subset(f.n()), 0.0};
  ForEachSubset(f, [&](std::uint64_t, const Subset& s, double value) {
    if (maximize ? value > best.value : value < best.value) {
      best.set = s;
      best.value = value;
    }
  });
  return best;
}

}  // namespace

RatioSolution BruteMaxRatio(const SetFunction& f) { return BruteRatio(f, true); }
RatioSolution BruteMinRatio(const SetFunction& f) {
  return BruteRatio(f, false);
}
ExactMax BruteMinValue(const SetFunction& f) { return BruteValue(f, false); }
ExactMax BruteMaxValue(const SetFunction& f) { return BruteValue(f, true); }

double BruteMaxShifted(const SetFunction& f, double lambda) {
  CheckSize(f, kBruteForceMaxN);
  double best = 0.0;
  ForEachSubset(f, [&](std::uint64_t, const Subset& s, double value) {
    best = std::max(best, value - lambda * s.size());
  });
  return best;
}

std::vector<double> BruteMnpQp(const SetFunction& f) {
  CheckSize(f, kBruteForceQpMaxN);
  const int n = f.n();
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  // Rows a_S x >= b_S; submodular constraints are multiplied by -1.
  const double sign = f.is_supermodular() ? 1.0 : -1.0;
  const int rows = static_cast<int>(full);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(rows, n);
  Eigen::VectorXd b(rows);
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    const int r = static_cast<int>(mask - 1);
    for (int v = 0; v < n; ++v) {
      if ((mask >> v) & 1U) a(r, v) = sign;
    }
    b(r) = sign * f.Value(Subset::FromMask(n, mask));
  }
  const int eq = static_cast<int>(full - 1);

  // Greedy vertex along 0, 1, ..., n-1 taken from the largest set down: the
  // chain {v..n-1} is tight, giving n independent active rows.
  Eigen::VectorXd x(n);
  std::vector<int> working;
  std::vector<char> in_working(rows, 0);
  {
    std::uint64_t chain = full;
    double prev = b(eq) * sign;
    for (int v = 0; v < n; ++v) {
      const std::uint64_t next = chain & ~(std::uint64_t{1} << v);
      const double value =
          next == 0 ? 0.0 : f.Value(Subset::FromMask(n, next));
      x(v) = prev - value;
      prev = value;
      working.push_back(static_cast<int>(chain - 1));
      in_working[chain - 1] = 1;
      chain = next;
    }
  }

  const double scale = 1.0 + b.cwiseAbs().maxCoeff();
  for (int iter = 0; iter < 100000; ++iter) {
    const int k = static_cast<int>(working.size());
    Eigen::MatrixXd aw(k, n);
    Eigen::VectorXd bw(k);
    for (int i = 0; i < k; ++i) {
      aw.row(i) = a.row(working[i]);
      bw(i) = b(working[i]);
    }
    // Minimum-norm point of the affine subspace {z : A_W z = b_W}.
    const Eigen::VectorXd z = aw.completeOrthogonalDecomposition().solve(bw);
    const Eigen::VectorXd p = z - x;
    if (p.cwiseAbs().maxCoeff() <= 1e-11 * scale) {
      x = z;
      // 2x = A_W^T mu; inequality multipliers must be non-negative.
      const Eigen::VectorXd mu =
          aw.transpose().completeOrthogonalDecomposition().solve(2.0 * x);
      int leave = -1;
      for (int i = 0; i < k; ++i) {
        if (working[i] == eq || mu(i) >= -1e-9 * scale) continue;
        if (leave < 0 || working[i] < working[leave]) leave = i;
      }
      if (leave < 0) {
        std::vector<double> out(n);
        for (int v = 0; v < n; ++v) out[v] = x(v);
        return out;
      }
      in_working[working[leave]] = 0;
      working.erase(working.begin() + leave);
      continue;
    }
    double step = 1.0;
    int block = -1;
    for (int r = 0; r < rows; ++r) {
      if (in_working[r]) continue;
      const double ap = a.row(r).dot(p);
      if (ap >= -1e-13 * scale) continue;
      const double t = std::max(0.0, (b(r) - a.row(r).dot(x)) / ap);
      if (t < step) {
        step = t;
        block = r;
      }
    }
    x += step * p;
    if (block >= 0) {
      working.push_back(block);
      in_working[block] = 1;
    }
  }
  throw std::runtime_error("active-set QP did not converge");
}

}  // namespace ratioforge
