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

#include "ratioforge/universal/solvers.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <vector>

#include "ratioforge/universal/peel.h"

namespace ratioforge {
namespace {

class Stopwatch {
 public:
  explicit Stopwatch(bool enabled)
      : enabled_(enabled), start_(std::chrono::steady_clock::now()) {}
  double Elapsed() const {
    if (!enabled_) return 0.0;
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point start_;
};

// Shared bookkeeping: rounding, best-gap iterate and trace rows.
class Run {
 public:
  Run(const SetFunction& f, const SolverConfig& cfg)
      : f_(f), cfg_(cfg), clock_(cfg.record_time), tracker_(f, cfg.objective) {
    cfg.Validate();
  }

  void Offer(const PeelResult& peel) { tracker_.Offer(peel); }

  void Consider(std::span<const double> x, double f_of_v, double gap) {
    if (gap < result_.gap) {
      result_.gap = gap;
      result_.x.x.assign(x.begin(), x.end());
      result_.x.f_of_v = f_of_v;
    }
  }

  void Record(int iter, std::optional<double> norm_sq,
              std::optional<double> gap) {
    TraceRecord r;
    r.iter = iter;
    r.elapsed_s = clock_.Elapsed();
    r.best_obj = tracker_.best_objective();
    r.norm_sq = norm_sq;
    r.gap = gap;
    r.set_size = tracker_.best_set().size();
    result_.trace.Add(r);
    result_.iterations = iter;
  }

  bool Done(double gap) const { return gap <= cfg_.eps * cfg_.eps; }

  SolveResult Finish() {
    result_.converged = Done(result_.gap);
    result_.objective = tracker_.objective();
    result_.best_set = tracker_.best_set();
    result_.best_objective = tracker_.best_objective();
    result_.best_value = tracker_.best_value();
    return std::move(result_);
  }

  SolveResult& result() { return result_; }

 private:
  const SetFunction& f_;
  const SolverConfig& cfg_;
  Stopwatch clock_;
  BestSetTracker tracker_;
  SolveResult result_;
};

// Upper-triangular R with R^T R = C^T C for the columns c_i = (1, b_i) of
// the active vertices, stored column by column.
class CholeskyFactor {
 public:
  int size() const { return static_cast<int>(cols_.size()); }

  // g = C^T c, cc = |c|^2. Returns false, leaving R unchanged, when the
  // new column is numerically in the span of the current ones.
  bool Append(const std::vector<double>& g, double cc) {
    const int k = size();
    std::vector<double> r(k + 1, 0.0);
    double rr = 0.0;
    for (int i = 0; i < k; ++i) {
      double s = g[i];
      for (int l = 0; l < i; ++l) s -= cols_[i][l] * r[l];
      r[i] = s / cols_[i][i];
      rr += r[i] * r[i];
    }
    const double pivot_sq = cc - rr;
    if (!(pivot_sq > 1e-12 * cc)) return false;
    r[k] = std::sqrt(pivot_sq);
    cols_.push_back(std::move(r));
    return true;
  }

  // Removes column k and restores triangularity with Givens rotations.
  void Remove(int k) {
    cols_.erase(cols_.begin() + k);
    const int m = size();
    for (int i = k; i < m; ++i) {
      const double a = cols_[i][i];
      const double b = cols_[i][i + 1];
      const double h = std::hypot(a, b);
      const double c = a / h;
      const double s = b / h;
      for (int l = i; l < m; ++l) {
        const double x = cols_[l][i];
        const double y = cols_[l][i + 1];
        cols_[l][i] = c * x + s * y;
        cols_[l][i + 1] = -s * x + c * y;
      }
    }
    for (int l = k; l < m; ++l) cols_[l].resize(l + 1);
  }

  // alpha proportional to (C^T C)^{-1} 1, normalized to sum 1.
  std::vector<double> AffineWeights() const {
    const int k = size();
    std::vector<double> z(k);
    for (int i = 0; i < k; ++i) {
      double s = 1.0;
      for (int l = 0; l < i; ++l) s -= cols_[i][l] * z[l];
      z[i] = s / cols_[i][i];
    }
    std::vector<double> y(k);
    for (int i = k - 1; i >= 0; --i) {
      double s = z[i];
      for (int l = i + 1; l < k; ++l) s -= cols_[l][i] * y[l];
      y[i] = s / cols_[i][i];
    }
    double total = 0.0;
    for (double v : y) total += v;
    for (double& v : y) v /= total;
    return y;
  }

 private:
  std::vector<std::vector<double>> cols_;
};

}  // namespace

const char* UniversalAlgorithmName(UniversalAlgorithm a) {
  switch (a) {
    case UniversalAlgorithm::kSuperGreedy:
      return "supergreedy";
    case UniversalAlgorithm::kFrankWolfe:
      return "fw";
    case UniversalAlgorithm::kFujishigeWolfe:
      return "mnp";
  }
  return "?";
}

SolveResult SuperGreedyPP(const SetFunction& f, const SolverConfig& cfg) {
  Run run(f, cfg);
  const int n = f.n();
  std::vector<double> x(n, 0.0);
  std::vector<double> weights(n, 0.0);
  std::vector<double> average(n, 0.0);
  double mass = 0.0;
  for (int t = 1; t <= cfg.max_iters; ++t) {
    for (int v = 0; v < n; ++v) weights[v] = (t - 1) * x[v];
    const PeelResult peel = PeelWeighted(f, weights);
    run.Offer(peel);
    const double step = cfg.step_rule == StepRule::kHarmonic
                            ? 1.0 / (t + 1)
                            : 2.0 / (t + 2);
    for (int v = 0; v < n; ++v) {
      x[v] = (1.0 - step) * x[v] + step * peel.point.x[v];
    }
    mass = (1.0 - step) * mass + step;
    for (int v = 0; v < n; ++v) average[v] = x[v] / mass;
    const double norm_sq = Dot(average, average);
    std::optional<double> gap;
    if (t % cfg.trace_every == 0 || t == cfg.max_iters) {
      const PeelResult lmo = Lmo(f, average);
      run.Offer(lmo);
      gap = DualityGap(average, lmo.point);
      run.Consider(average, peel.point.f_of_v, *gap);
    }
    run.Record(t, norm_sq, gap);
    if (gap && run.Done(*gap)) break;
  }
  return run.Finish();
}

SolveResult FrankWolfe(const SetFunction& f, const SolverConfig& cfg) {
  Run run(f, cfg);
  const int n = f.n();
  PeelResult start = Lmo(f, std::vector<double>(n, 0.0));
  run.Offer(start);
  std::vector<double> x = std::move(start.point.x);
  const double f_of_v = start.point.f_of_v;
  for (int k = 0;; ++k) {
    const PeelResult lmo = Lmo(f, x);
    run.Offer(lmo);
    const double gap = DualityGap(x, lmo.point);
    run.Consider(x, f_of_v, gap);
    run.Record(k, Dot(x, x), gap);
    if (run.Done(gap) || k == cfg.max_iters) break;
    // The vertex that certified x^(k) is the next FW direction.
    const double step = 2.0 / (k + 3);
    for (int v = 0; v < n; ++v) {
      x[v] = (1.0 - step) * x[v] + step * lmo.point.x[v];
    }
  }
  return run.Finish();
}

SolveResult FujishigeWolfe(const SetFunction& f, const SolverConfig& cfg) {
  Run run(f, cfg);
  const int n = f.n();
  const double drop = cfg.tolerances.drop;
  PeelResult start = Lmo(f, std::vector<double>(n, 0.0));
  run.Offer(start);
  const double f_of_v = start.point.f_of_v;

  std::vector<std::vector<double>> points;
  std::vector<double> lambda;
  CholeskyFactor factor;
  auto append = [&](std::vector<double> b) {
    std::vector<double> g(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      g[i] = 1.0 + Dot(points[i], b);
    }
    if (!factor.Append(g, 1.0 + Dot(b, b))) return false;
    points.push_back(std::move(b));
    lambda.push_back(0.0);
    return true;
  };
  auto remove = [&](int i) {
    factor.Remove(i);
    points.erase(points.begin() + i);
    lambda.erase(lambda.begin() + i);
  };
  append(std::move(start.point.x));
  lambda[0] = 1.0;
  std::vector<double> x = points[0];
  auto recompute_x = [&] {
    std::fill(x.begin(), x.end(), 0.0);
    for (std::size_t i = 0; i < points.size(); ++i) {
      for (int v = 0; v < n; ++v) x[v] += lambda[i] * points[i][v];
    }
  };

  SolveResult& result = run.result();
  result.max_active_set = 1;
  for (int major = 0;; ++major) {
    const PeelResult lmo = Lmo(f, x);
    run.Offer(lmo);
    const double norm_sq = Dot(x, x);
    const double gap = DualityGap(x, lmo.point);
    run.Consider(x, f_of_v, gap);
    run.Record(major, norm_sq, gap);
    const double floor = 1e-13 * (1.0 + norm_sq);
    if (run.Done(gap) || gap <= floor || major == cfg.max_iters) break;
    if (!append(lmo.point.x)) {
      result.stalled = true;
      break;
    }
    result.max_active_set =
        std::max(result.max_active_set, static_cast<int>(points.size()));
    // Minor cycles: each pass either accepts the affine minimizer or drops
    // at least one vertex.
    while (true) {
      const std::vector<double> alpha = factor.AffineWeights();
      double theta = 1.0;
      int blocking = -1;
      for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] > drop || alpha[i] >= lambda[i]) continue;
        const double t = lambda[i] / (lambda[i] - alpha[i]);
        if (t < theta) {
          theta = t;
          blocking = static_cast<int>(i);
        }
      }
      for (std::size_t i = 0; i < alpha.size(); ++i) {
        lambda[i] = (1.0 - theta) * lambda[i] + theta * alpha[i];
      }
      if (blocking >= 0) lambda[blocking] = 0.0;
      bool dropped = false;
      for (int i = static_cast<int>(lambda.size()) - 1; i >= 0; --i) {
        if (lambda[i] <= drop && lambda.size() > 1) {
          remove(i);
          dropped = true;
        }
      }
      double total = 0.0;
      for (double l : lambda) total += l;
      for (double& l : lambda) l /= total;
      if (!dropped) break;
    }
    recompute_x();
  }
  return run.Finish();
}

SolveResult SolveUniversal(const SetFunction& f, UniversalAlgorithm algorithm,
                           const SolverConfig& cfg) {
  switch (algorithm) {
    case UniversalAlgorithm::kSuperGreedy:
      return SuperGreedyPP(f, cfg);
    case UniversalAlgorithm::kFrankWolfe:
      return FrankWolfe(f, cfg);
    case UniversalAlgorithm::kFujishigeWolfe:
      return FujishigeWolfe(f, cfg);
  }
  return SuperGreedyPP(f, cfg);
}

}  // namespace ratioforge
