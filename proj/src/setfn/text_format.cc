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

#include "ratioforge/setfn/text_format.h"

#include <fmt/format.h>

namespace ratioforge {

std::string FormatReal(double value) {
  if (value == 0.0) return "0";  // also folds -0
  return fmt::format("{:.12g}", value);
}

ParseError::ParseError(const std::string& source, int line, int column,
                       const std::string& message)
    : std::runtime_error(fmt::format("{}:{}:{}: {}", source, line, column,
                                     message)),
      line_(line),
      column_(column) {}

}  // namespace ratioforge
