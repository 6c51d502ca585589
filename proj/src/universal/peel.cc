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

#include "ratioforge/universal/peel.h"

#include <functional>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ratioforge {

PeelResult PeelWeighted(const SetFunction& f, std::span<const double> w,
                        PeelDirection direction) {
  const int n = f.n();
  if (static_cast<int>(w.size()) != n) {
    throw std::invalid_argument("peel weights have wrong length");
  }
  if (direction == PeelDirection::kAuto) {
    direction = f.is_supermodular() ? PeelDirection::kArgMin
                                    : PeelDirection::kArgMax;
  }
  const double sign = direction == PeelDirection::kArgMin ? 1.0 : -1.0;
  auto state = f.StartPeel();
  auto key = [&](int v) { return sign * (w[v] + state->Marginal(v)); };

  using Entry = std::pair<double, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  std::vector<double> current(n);
  std::vector<char> alive(n, 1);
  std::vector<int> stamp(n, -1);
  for (int v = 0; v < n; ++v) {
    current[v] = key(v);
    heap.emplace(current[v], v);
  }

  PeelResult out;
  out.point.x.assign(n, 0.0);
  out.order.reserve(n);
  out.remaining_value.assign(n, 0.0);
  std::vector<int> touched;
  for (int j = 0; j < n; ++j) {
    int v = -1;
    while (true) {
      const auto [k, u] = heap.top();
      heap.pop();
      if (alive[u] && k == current[u]) {
        v = u;
        break;
      }
    }
    out.point.x[v] = state->Marginal(v);
    out.order.push_back(v);
    alive[v] = 0;
    touched.clear();
    state->Remove(v, touched);
    for (int u : touched) {
      if (!alive[u] || stamp[u] == j) continue;
      stamp[u] = j;
      const double k = key(u);
      if (k != current[u]) {
        current[u] = k;
        heap.emplace(k, u);
      }
    }
  }
  // Telescoping: f(S_{j+1}) = f(S_j) - f(v_j | S_j - v_j).
  out.point.f_of_v = f.Value(Subset(n, /*full=*/true));
  double remaining = out.point.f_of_v;
  for (int j = 0; j < n; ++j) {
    out.remaining_value[j] = remaining;
    remaining -= out.point.x[out.order[j]];
  }
  return out;
}

}  // namespace ratioforge
