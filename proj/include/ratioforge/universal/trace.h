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

// Per-iteration convergence records and their CSV form:
//
//   iter,elapsed_s,best_obj,norm_sq,gap,set_size
//
// Optional columns are left empty when not evaluated in that iteration.

#ifndef RATIOFORGE_UNIVERSAL_TRACE_H_
#define RATIOFORGE_UNIVERSAL_TRACE_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ratioforge {

inline constexpr char kTraceHeader[] =
    "iter,elapsed_s,best_obj,norm_sq,gap,set_size";

struct TraceRecord {
  int iter = 0;
  double elapsed_s = 0.0;
  double best_obj = 0.0;  // best extracted objective so far
  std::optional<double> norm_sq;
  std::optional<double> gap;
  int set_size = 0;  // size of the set achieving best_obj
};

class ConvergenceTrace {
 public:
  // Throws std::invalid_argument when iter does not increase or elapsed
  // time decreases.
  void Add(const TraceRecord& r);

  const std::vector<TraceRecord>& records() const { return records_; }
  bool empty() const { return records_.empty(); }
  std::size_t size() const { return records_.size(); }
  const TraceRecord& back() const { return records_.back(); }

  // Mutable access for callers that rescale objectives after a run (for
  // example adding a constant offset).
  std::vector<TraceRecord>& mutable_records() { return records_; }

  void WriteCsv(std::ostream& out) const;
  std::string ToCsv() const;
  // Throws ParseError on a malformed header or row.
  static ConvergenceTrace ReadCsv(std::istream& in, const std::string& source);

 private:
  std::vector<TraceRecord> records_;
};

}  // namespace ratioforge

#endif  // RATIOFORGE_UNIVERSAL_TRACE_H_
