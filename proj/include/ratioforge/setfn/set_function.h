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

#ifndef RATIOFORGE_SETFN_SET_FUNCTION_H_
#define RATIOFORGE_SETFN_SET_FUNCTION_H_

#include <memory>
#include <string>
#include <vector>

#include "ratioforge/setfn/subset.h"

namespace ratioforge {

enum class Orientation { kSubmodular, kSupermodular };

inline Orientation Flip(Orientation o) {
  return o == Orientation::kSubmodular ? Orientation::kSupermodular
                                       : Orientation::kSubmodular;
}

const char* OrientationName(Orientation o);

// The ground set V = {0, ..., n-1}. Labels, when present, are the external
// identifiers of the elements and are unique.
class GroundSet {
 public:
  explicit GroundSet(int n);
  explicit GroundSet(std::vector<std::string> labels);

  int size() const { return n_; }
  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  // The label of `v`, or its decimal index when unlabeled.
  std::string Label(int v) const;

 private:
  int n_;
  std::vector<std::string> labels_;
};

// Incremental peeling scratch: starts at S = V and supports removing one
// element at a time while answering removal marginals f(v | S - v) for the
// elements still in S. Owned by a single solver; not thread-safe.
class PeelState {
 public:
  virtual ~PeelState() = default;

  // f(v | S - v) = f(S) - f(S - v). Requires v in S.
  virtual double Marginal(int v) const = 0;

  // Removes v from S and appends to `touched` every element still in S whose
  // marginal may have changed. Duplicates are allowed.
  virtual void Remove(int v, std::vector<int>& touched) = 0;
};

// Value oracle for a normalized submodular or supermodular set function.
// Instances are immutable after construction and may be shared between
// threads; all mutable peeling state lives in PeelState objects.
class SetFunction {
 public:
  SetFunction(GroundSet ground, Orientation orientation);
  virtual ~SetFunction() = default;

  SetFunction(const SetFunction&) = delete;
  SetFunction& operator=(const SetFunction&) = delete;

  int n() const { return ground_.size(); }
  const GroundSet& ground() const { return ground_; }
  Orientation orientation() const { return orientation_; }
  bool is_supermodular() const {
    return orientation_ == Orientation::kSupermodular;
  }

  // f(S). The empty set is answered with 0 without consulting Evaluate.
  double Value(const Subset& s) const;

  // f(v | S - v) for v in S.
  double MarginalOfRemoval(int v, const Subset& s) const;

  // Peeling scratch positioned at S = V. The default implementation answers
  // marginals by value differences and reports every remaining element as
  // touched; concrete oracles override it with O(deg) updates.
  virtual std::unique_ptr<PeelState> StartPeel() const;

 protected:
  // f(S) for non-empty S.
  virtual double Evaluate(const Subset& s) const = 0;
  virtual double EvaluateMarginal(int v, const Subset& s) const;

 private:
  GroundSet ground_;
  Orientation orientation_;
};

using SetFunctionPtr = std::shared_ptr<const SetFunction>;

}  // namespace ratioforge

#endif  // RATIOFORGE_SETFN_SET_FUNCTION_H_
