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

#include "ratioforge/setfn/adapters.h"

#include <stdexcept>
#include <string>
#include <utility>

namespace ratioforge {
namespace {

class NegatedFunction final : public SetFunction {
 public:
  explicit NegatedFunction(SetFunctionPtr inner)
      : SetFunction(inner->ground(), Flip(inner->orientation())),
        inner_(std::move(inner)) {}

  const SetFunctionPtr& inner() const { return inner_; }

  std::unique_ptr<PeelState> StartPeel() const override {
    return std::make_unique<State>(inner_->StartPeel());
  }

 protected:
  double Evaluate(const Subset& s) const override { return -inner_->Value(s); }
  double EvaluateMarginal(int v, const Subset& s) const override {
    return -inner_->MarginalOfRemoval(v, s);
  }

 private:
  class State final : public PeelState {
   public:
    explicit State(std::unique_ptr<PeelState> inner)
        : inner_(std::move(inner)) {}
    double Marginal(int v) const override { return -inner_->Marginal(v); }
    void Remove(int v, std::vector<int>& touched) override {
      inner_->Remove(v, touched);
    }

   private:
    std::unique_ptr<PeelState> inner_;
  };

  SetFunctionPtr inner_;
};

class ModularSumFunction final : public SetFunction {
 public:
  ModularSumFunction(SetFunctionPtr inner, std::vector<double> c)
      : SetFunction(inner->ground(), inner->orientation()),
        inner_(std::move(inner)),
        c_(std::move(c)) {
    if (static_cast<int>(c_.size()) != n()) {
      throw std::invalid_argument("modular term has wrong length");
    }
  }

  std::unique_ptr<PeelState> StartPeel() const override {
    return std::make_unique<State>(inner_->StartPeel(), c_);
  }

 protected:
  double Evaluate(const Subset& s) const override {
    double value = inner_->Value(s);
    for (int v : s.Elements()) value += c_[v];
    return value;
  }
  double EvaluateMarginal(int v, const Subset& s) const override {
    return inner_->MarginalOfRemoval(v, s) + c_[v];
  }

 private:
  class State final : public PeelState {
   public:
    State(std::unique_ptr<PeelState> inner, const std::vector<double>& c)
        : inner_(std::move(inner)), c_(c) {}
    double Marginal(int v) const override {
      return inner_->Marginal(v) + c_[v];
    }
    void Remove(int v, std::vector<int>& touched) override {
      inner_->Remove(v, touched);
    }

   private:
    std::unique_ptr<PeelState> inner_;
    const std::vector<double>& c_;
  };

  SetFunctionPtr inner_;
  std::vector<double> c_;
};

GroundSet RemainingGround(const SetFunction& parent, const Subset& contracted) {
  std::vector<std::string> labels;
  for (int v = 0; v < parent.n(); ++v) {
    if (!contracted.Contains(v)) labels.push_back(parent.ground().Label(v));
  }
  if (labels.empty()) {
    throw std::invalid_argument("cannot contract the whole ground set");
  }
  return GroundSet(std::move(labels));
}

class ContractedPeelState final : public PeelState {
 public:
  ContractedPeelState(std::unique_ptr<PeelState> inner,
                      const std::vector<int>& to_parent,
                      const std::vector<int>& to_local)
      : inner_(std::move(inner)), to_parent_(to_parent), to_local_(to_local) {}

  double Marginal(int v) const override {
    return inner_->Marginal(to_parent_[v]);
  }

  void Remove(int v, std::vector<int>& touched) override {
    scratch_.clear();
    inner_->Remove(to_parent_[v], scratch_);
    for (int u : scratch_) {
      if (to_local_[u] >= 0) touched.push_back(to_local_[u]);
    }
  }

 private:
  std::unique_ptr<PeelState> inner_;
  const std::vector<int>& to_parent_;
  const std::vector<int>& to_local_;
  std::vector<int> scratch_;
};

}  // namespace

SetFunctionPtr Negate(SetFunctionPtr f) {
  if (const auto* neg = dynamic_cast<const NegatedFunction*>(f.get())) {
    return neg->inner();
  }
  return std::make_shared<NegatedFunction>(std::move(f));
}

SetFunctionPtr Shift(SetFunctionPtr f, double c) {
  if (c == 0.0) return f;
  std::vector<double> terms(f->n(), c);
  return std::make_shared<ModularSumFunction>(std::move(f), std::move(terms));
}

SetFunctionPtr AddModular(SetFunctionPtr f, std::vector<double> c) {
  return std::make_shared<ModularSumFunction>(std::move(f), std::move(c));
}

ContractedFunction::ContractedFunction(SetFunctionPtr parent,
                                       const Subset& contracted)
    : SetFunction(RemainingGround(*parent, contracted), parent->orientation()),
      parent_(std::move(parent)),
      contracted_(contracted),
      contracted_value_(parent_->Value(contracted)),
      to_local_(parent_->n(), -1) {
  for (int v = 0; v < parent_->n(); ++v) {
    if (!contracted_.Contains(v)) {
      to_local_[v] = static_cast<int>(to_parent_.size());
      to_parent_.push_back(v);
    }
  }
}

Subset ContractedFunction::Lift(const Subset& s) const {
  Subset lifted = contracted_;
  for (int v : s.Elements()) lifted.Insert(to_parent_[v]);
  return lifted;
}

double ContractedFunction::Evaluate(const Subset& s) const {
  return parent_->Value(Lift(s)) - contracted_value_;
}

double ContractedFunction::EvaluateMarginal(int v, const Subset& s) const {
  return parent_->MarginalOfRemoval(to_parent_[v], Lift(s));
}

std::unique_ptr<PeelState> ContractedFunction::StartPeel() const {
  return std::make_unique<ContractedPeelState>(parent_->StartPeel(),
                                               to_parent_, to_local_);
}

std::shared_ptr<const ContractedFunction> Contract(SetFunctionPtr f,
                                                   const Subset& a) {
  if (a.universe() != f->n()) {
    throw std::invalid_argument("contracted set has wrong universe");
  }
  if (a.size() == f->n()) {
    throw std::invalid_argument("cannot contract the whole ground set");
  }
  return std::make_shared<ContractedFunction>(std::move(f), a);
}

}  // namespace ratioforge
