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

#include "ratioforge/universal/trace.h"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ratioforge/setfn/text_format.h"

namespace ratioforge {

void ConvergenceTrace::Add(const TraceRecord& r) {
  if (!records_.empty()) {
    if (r.iter <= records_.back().iter) {
      throw std::invalid_argument("trace iterations must increase");
    }
    if (r.elapsed_s < records_.back().elapsed_s) {
      throw std::invalid_argument("trace elapsed time must not decrease");
    }
  }
  records_.push_back(r);
}

void ConvergenceTrace::WriteCsv(std::ostream& out) const {
  out << kTraceHeader << '\n';
  for (const TraceRecord& r : records_) {
    out << r.iter << ',' << FormatReal(r.elapsed_s) << ','
        << FormatReal(r.best_obj) << ',';
    if (r.norm_sq) out << FormatReal(*r.norm_sq);
    out << ',';
    if (r.gap) out << FormatReal(*r.gap);
    out << ',' << r.set_size << '\n';
  }
}

std::string ConvergenceTrace::ToCsv() const {
  std::ostringstream out;
  WriteCsv(out);
  return out.str();
}

namespace {

std::vector<std::string> SplitCommas(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

template <typename T>
T ParseField(const std::string& text, const std::string& source, int line,
             int column) {
  T value{};
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw ParseError(source, line, column, "bad field '" + text + "'");
  }
  return value;
}

}  // namespace

ConvergenceTrace ConvergenceTrace::ReadCsv(std::istream& in,
                                           const std::string& source) {
  std::string line;
  if (!std::getline(in, line) || line != kTraceHeader) {
    throw ParseError(source, 1, 1,
                     std::string("expected header '") + kTraceHeader + "'");
  }
  ConvergenceTrace trace;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = SplitCommas(line);
    if (f.size() != 6) throw ParseError(source, line_no, 1, "expected 6 fields");
    TraceRecord r;
    r.iter = ParseField<int>(f[0], source, line_no, 1);
    r.elapsed_s = ParseField<double>(f[1], source, line_no, 2);
    r.best_obj = ParseField<double>(f[2], source, line_no, 3);
    if (!f[3].empty()) r.norm_sq = ParseField<double>(f[3], source, line_no, 4);
    if (!f[4].empty()) r.gap = ParseField<double>(f[4], source, line_no, 5);
    r.set_size = ParseField<int>(f[5], source, line_no, 6);
    try {
      trace.Add(r);
    } catch (const std::invalid_argument& e) {
      throw ParseError(source, line_no, 1, e.what());
    }
  }
  return trace;
}

}  // namespace ratioforge
