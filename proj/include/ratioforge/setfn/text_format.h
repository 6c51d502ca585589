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

// Number formatting and parse errors shared by every text format.

#ifndef RATIOFORGE_SETFN_TEXT_FORMAT_H_
#define RATIOFORGE_SETFN_TEXT_FORMAT_H_

#include <stdexcept>
#include <string>

namespace ratioforge {

// A real with 12 significant digits ("%.12g").
std::string FormatReal(double value);

// Malformed input. line() and column() are 1-based; 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, int line, int column,
             const std::string& message);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace ratioforge

#endif  // RATIOFORGE_SETFN_TEXT_FORMAT_H_
