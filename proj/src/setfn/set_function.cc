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

#include "ratioforge/setfn/set_function.h"

#include <set>
#include <stdexcept>
#include <utility>

namespace ratioforge {

const char* OrientationName(Orientation o) {
  return o == Orientation::kSubmodular ? "submodular" : "supermodular";
}

GroundSet::GroundSet(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("ground set must be non-empty");
}

GroundSet::GroundSet(std::vector<std::string> labels)
    : n_(static_cast<int>(labels.size())), labels_(std::move(labels)) {
  if (n_ < 1) throw std::invalid_argument("ground set must be non-empty");
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (static_cast<int>(seen.size()) != n_) {
    throw std::invalid_argument("ground set labels must be unique");
  }
}

std::string GroundSet::Label(int v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

namespace {

class DifferencePeelState final : public PeelState {
 public:
  explicit DifferencePeelState(const SetFunction& f)
      : f_(f), current_(f.n(), /*full=*/true) {}

  double Marginal(int v) const override {
    return f_.MarginalOfRemoval(v, current_);
  }

  void Remove(int v, std::vector<int>& touched) override {
    current_.Erase(v);
    for (int u : current_.Elements()) touched.push_back(u);
  }

 private:
  const SetFunction& f_;
  Subset current_;
};

}  // namespace

SetFunction::SetFunction(GroundSet ground, Orientation orientation)
    : ground_(std::move(ground)), orientation_(orientation) {}

double SetFunction::Value(const Subset& s) const {
  if (s.universe() != n()) {
    throw std::invalid_argument("subset universe does not match ground set");
  }
  return s.empty() ? 0.0 : Evaluate(s);
}

double SetFunction::MarginalOfRemoval(int v, const Subset& s) const {
  if (s.universe() != n() || !s.Contains(v)) {
    throw std::invalid_argument("marginal of removal requires v in S");
  }
  return EvaluateMarginal(v, s);
}

double SetFunction::EvaluateMarginal(int v, const Subset& s) const {
  Subset without = s;
  without.Erase(v);
  return Value(s) - Value(without);
}

std::unique_ptr<PeelState> SetFunction::StartPeel() const {
  return std::make_unique<DifferencePeelState>(*this);
}

}  // namespace ratioforge
