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

#ifndef RATIOFORGE_SETFN_SUBSET_H_
#define RATIOFORGE_SETFN_SUBSET_H_

#include <cstdint>
#include <span>
#include <vector>

namespace ratioforge {

// A subset of the dense ground set {0, ..., n-1}, stored as a membership
// mask with a cached cardinality.
class Subset {
 public:
  Subset() = default;
  explicit Subset(int universe, bool full = false);

  static Subset FromElements(int universe, std::span<const int> elements);
  // Bit i of `mask` selects element i. Requires universe <= 63.
  static Subset FromMask(int universe, std::uint64_t mask);

  int universe() const { return static_cast<int>(bits_.size()); }
  int size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool Contains(int v) const { return bits_[v] != 0; }
  void Insert(int v);
  void Erase(int v);

  std::vector<int> Elements() const;
  Subset Complement() const;

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.bits_ == b.bits_;
  }

 private:
  std::vector<std::uint8_t> bits_;
  int count_ = 0;
};

}  // namespace ratioforge

#endif  // RATIOFORGE_SETFN_SUBSET_H_
