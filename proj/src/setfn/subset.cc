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

#include "ratioforge/setfn/subset.h"

#include <stdexcept>

namespace ratioforge {

Subset::Subset(int universe, bool full)
    : bits_(static_cast<std::size_t>(universe), full ? 1 : 0),
      count_(full ? universe : 0) {}

Subset Subset::FromElements(int universe, std::span<const int> elements) {
  Subset s(universe);
  for (int v : elements) {
    if (v < 0 || v >= universe) {
      throw std::out_of_range("subset element outside the ground set");
    }
    s.Insert(v);
  }
  return s;
}

Subset Subset::FromMask(int universe, std::uint64_t mask) {
  Subset s(universe);
  for (int v = 0; v < universe; ++v) {
    if ((mask >> v) & 1U) s.Insert(v);
  }
  return s;
}

void Subset::Insert(int v) {
  if (bits_[v] == 0) {
    bits_[v] = 1;
    ++count_;
  }
}

void Subset::Erase(int v) {
  if (bits_[v] != 0) {
    bits_[v] = 0;
    --count_;
  }
}

std::vector<int> Subset::Elements() const {
  std::vector<int> out;
  out.reserve(count_);
  for (int v = 0; v < universe(); ++v) {
    if (bits_[v] != 0) out.push_back(v);
  }
  return out;
}

Subset Subset::Complement() const {
  Subset c(universe());
  for (int v = 0; v < universe(); ++v) {
    if (bits_[v] == 0) c.Insert(v);
  }
  return c;
}

}  // namespace ratioforge
