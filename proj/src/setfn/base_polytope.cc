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

#include "ratioforge/setfn/base_polytope.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace ratioforge {

double BasePoint::Sum() const {
  return std::accumulate(x.begin(), x.end(), 0.0);
}

double BasePoint::NormSq() const { return Dot(x, x); }

double Dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double BaseTolerance(double f_of_v) { return 1e-9 * (1.0 + std::abs(f_of_v)); }

PeelResult EdmondsGreedy(const SetFunction& f,
                         std::span<const int> peel_order) {
  const int n = f.n();
  if (static_cast<int>(peel_order.size()) != n) {
    throw std::invalid_argument("peel order must be a permutation of V");
  }
  std::vector<char> seen(n, 0);
  for (int v : peel_order) {
    if (v < 0 || v >= n || seen[v]) {
      throw std::invalid_argument("peel order must be a permutation of V");
    }
    seen[v] = 1;
  }

  PeelResult out;
  out.point.x.assign(n, 0.0);
  out.point.f_of_v = f.Value(Subset(n, /*full=*/true));
  out.order.assign(peel_order.begin(), peel_order.end());
  out.remaining_value.resize(n);

  auto state = f.StartPeel();
  std::vector<int> touched;
  double remaining = out.point.f_of_v;
  for (int j = 0; j < n; ++j) {
    const int v = peel_order[j];
    out.remaining_value[j] = remaining;
    const double marginal = state->Marginal(v);
    out.point.x[v] = marginal;
    remaining -= marginal;
    touched.clear();
    state->Remove(v, touched);
  }
  return out;
}

std::vector<int> LmoChainOrder(const SetFunction& f,
                               std::span<const double> x) {
  std::vector<int> order(f.n());
  std::iota(order.begin(), order.end(), 0);
  if (f.is_supermodular()) {
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return x[a] > x[b]; });
  } else {
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return x[a] < x[b]; });
  }
  return order;
}

PeelResult Lmo(const SetFunction& f, std::span<const double> x) {
  if (static_cast<int>(x.size()) != f.n()) {
    throw std::invalid_argument("lmo direction has wrong length");
  }
  std::vector<int> order = LmoChainOrder(f, x);
  std::reverse(order.begin(), order.end());
  return EdmondsGreedy(f, order);
}

double DualityGap(std::span<const double> x, const BasePoint& lmo_vertex) {
  return Dot(x, x) - Dot(lmo_vertex.x, x);
}

double DualityGap(const SetFunction& f, std::span<const double> x) {
  return DualityGap(x, Lmo(f, x).point);
}

bool InBasePolytope(const SetFunction& f, std::span<const double> x,
                    double tol) {
  const int n = f.n();
  if (n > 20) throw std::invalid_argument("exhaustive check limited to n<=20");
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    double xs = 0.0;
    for (int v = 0; v < n; ++v) {
      if ((mask >> v) & 1U) xs += x[v];
    }
    const double fs = f.Value(Subset::FromMask(n, mask));
    if (mask == full && std::abs(xs - fs) > tol) return false;
    if (f.is_supermodular() ? xs < fs - tol : xs > fs + tol) return false;
  }
  return true;
}

}  // namespace ratioforge
