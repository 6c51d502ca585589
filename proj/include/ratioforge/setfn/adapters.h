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

// Oracle transformations used by the reductions between SFM, ratio problems
// and the minimum-norm point: negation, modular shifts and contraction.

#ifndef RATIOFORGE_SETFN_ADAPTERS_H_
#define RATIOFORGE_SETFN_ADAPTERS_H_

#include <memory>
#include <span>
#include <vector>

#include "ratioforge/setfn/set_function.h"

namespace ratioforge {

// -f with the opposite orientation. B(-f) = -B(f). Negating twice returns
// the original oracle.
SetFunctionPtr Negate(SetFunctionPtr f);

// g(S) = f(S) + c * |S|. Same orientation; the maximizers (and minimizers)
// of g(S)/|S| and f(S)/|S| coincide.
SetFunctionPtr Shift(SetFunctionPtr f, double c);

// g(S) = f(S) + sum_{v in S} c_v. Same orientation.
SetFunctionPtr AddModular(SetFunctionPtr f, std::vector<double> c);

// f'(S) = f(S u A) - f(A) over the ground set V \ A.
class ContractedFunction final : public SetFunction {
 public:
  ContractedFunction(SetFunctionPtr parent, const Subset& contracted);

  // Index in the parent's ground set of local element v.
  int parent_index(int v) const { return to_parent_[v]; }
  const std::vector<int>& parent_indices() const { return to_parent_; }
  const SetFunctionPtr& parent() const { return parent_; }

  std::unique_ptr<PeelState> StartPeel() const override;

 protected:
  double Evaluate(const Subset& s) const override;
  double EvaluateMarginal(int v, const Subset& s) const override;

 private:
  Subset Lift(const Subset& s) const;

  SetFunctionPtr parent_;
  Subset contracted_;
  double contracted_value_;
  std::vector<int> to_parent_;
  std::vector<int> to_local_;  // -1 for contracted elements
};

// Throws std::invalid_argument when A = V.
std::shared_ptr<const ContractedFunction> Contract(SetFunctionPtr f,
                                                   const Subset& a);

}  // namespace ratioforge

#endif  // RATIOFORGE_SETFN_ADAPTERS_H_
