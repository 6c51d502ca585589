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

// Line-oriented input formats. Everything after '#' on a line is ignored, as
// are blank lines; DIMACS files additionally accept 'c' comment lines.
//
//   edge list   "n m", then m lines "u v [w]"                  (0-based)
//   bipartite   "|L| |R| m", then |R| lines "v w(v)", then m lines "u v"
//   DIMACS      "p max n m", "n s s", "n t t", "a u v cap"     (1-based)
//   vector      one real per line
//   anchors     one vertex per line                            (0-based)
//
// The writers emit a canonical form: no comments, single spaces, reals with
// 12 significant digits, edge weights only for weighted graphs. Reading and
// re-writing a canonical file reproduces it byte for byte.

#ifndef RATIOFORGE_PROBLEMS_IO_H_
#define RATIOFORGE_PROBLEMS_IO_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "ratioforge/problems/flow_instance.h"
#include "ratioforge/problems/graph.h"
#include "ratioforge/setfn/text_format.h"

namespace ratioforge {

// All readers throw ParseError carrying `source` and a line/column position.
// Problems found only at the end of the input (missing lines, counts that do
// not match) report the last line read and column 0.
UndirectedGraph ReadEdgeList(std::istream& in, const std::string& source);
WeightedBipartiteGraph ReadBipartite(std::istream& in,
                                     const std::string& source);
FlowInstance ReadDimacs(std::istream& in, const std::string& source);
// expected_size < 0 accepts any length.
std::vector<double> ReadVector(std::istream& in, const std::string& source,
                               int expected_size = -1);
AnchorSet ReadAnchors(std::istream& in, int n, const std::string& source);

// File variants; an unreadable path is reported as a ParseError at line 0.
UndirectedGraph LoadEdgeList(const std::string& path);
WeightedBipartiteGraph LoadBipartite(const std::string& path);
FlowInstance LoadDimacs(const std::string& path);
std::vector<double> LoadVector(const std::string& path, int expected_size = -1);
AnchorSet LoadAnchors(const std::string& path, int n);

void WriteEdgeList(const UndirectedGraph& g, std::ostream& out);
void WriteBipartite(const WeightedBipartiteGraph& b, std::ostream& out);
void WriteDimacs(const FlowInstance& fi, std::ostream& out);
void WriteVector(const std::vector<double>& y, std::ostream& out);
void WriteAnchors(const AnchorSet& r, std::ostream& out);

}  // namespace ratioforge

#endif  // RATIOFORGE_PROBLEMS_IO_H_
