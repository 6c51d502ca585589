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

#include "ratioforge/extract/dinkelbach.h"

#include <chrono>
#include <cmath>
#include <string>

#include "ratioforge/setfn/base_polytope.h"

namespace ratioforge {

DinkelbachResult Dinkelbach(const SetFunction& f,
                            const ParametricSolver& solve) {
  if (!f.is_supermodular()) {
    throw std::invalid_argument("density improvement needs supermodular f");
  }
  const int n = f.n();
  const auto start = std::chrono::steady_clock::now();
  DinkelbachResult out;
  Subset current(n, /*full=*/true);
  double current_value = f.Value(current);
  while (true) {
    const Lambda lambda{current_value, static_cast<double>(current.size())};
    if (out.calls == n + 1) {
      throw DinkelbachError("more than n + 1 subproblem calls");
    }
    ++out.calls;
    Subset next = solve(lambda, current);
    if (next.universe() != n) {
      throw DinkelbachError("subproblem answer has the wrong universe");
    }
    for (int v : next.Elements()) {
      if (!current.Contains(v)) {
        throw DinkelbachError("subproblem answer leaves S_k at element " +
                              std::to_string(v));
      }
    }
    const double next_value = f.Value(next);
    const double gain = next_value - lambda.num * next.size() / lambda.den;
    const double elapsed = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    out.rounds.push_back({lambda.value(), gain, current.size(), elapsed});
    if (next.empty() || gain <= BaseTolerance(current_value)) break;
    current = std::move(next);
    current_value = next_value;
  }
  out.solution.set = current;
  out.solution.f_value = current_value;
  out.solution.ratio = current_value / current.size();
  out.solution.certification = Certification::kExact;
  return out;
}

}  // namespace ratioforge
