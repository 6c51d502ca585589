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

#include "ratioforge/problems/io.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <utility>

namespace ratioforge {
namespace {

struct Token {
  std::string_view text;
  int column = 0;
};

// Splits the input into non-empty logical lines of whitespace-separated
// tokens, remembering positions for error messages.
class LineReader {
 public:
  LineReader(std::istream& in, std::string source, bool dimacs_comments)
      : in_(in), source_(std::move(source)), dimacs_(dimacs_comments) {}

  // Advances to the next line holding at least one token.
  bool Next() {
    while (std::getline(in_, line_)) {
      ++line_no_;
      tokens_.clear();
      std::string_view view(line_);
      const auto hash = view.find('#');
      if (hash != std::string_view::npos) view = view.substr(0, hash);
      std::size_t i = 0;
      while (i < view.size()) {
        while (i < view.size() && IsSpace(view[i])) ++i;
        const std::size_t start = i;
        while (i < view.size() && !IsSpace(view[i])) ++i;
        if (i > start) {
          tokens_.push_back({view.substr(start, i - start),
                             static_cast<int>(start) + 1});
        }
      }
      if (tokens_.empty()) continue;
      if (dimacs_ && tokens_[0].text == "c") continue;
      return true;
    }
    tokens_.clear();
    return false;
  }

  const std::vector<Token>& tokens() const { return tokens_; }
  int line() const { return line_no_; }

  [[noreturn]] void Fail(int column, const std::string& message) const {
    throw ParseError(source_, line_no_, column, message);
  }

  void Expect(bool ok, int column, const std::string& message) const {
    if (!ok) Fail(column, message);
  }

  void ExpectCount(std::size_t lo, std::size_t hi, const char* what) const {
    if (tokens_.size() > hi) {
      Fail(tokens_[hi].column, std::string("trailing token, expected ") + what);
    }
    if (tokens_.size() < lo) Fail(1, std::string("expected ") + what);
  }

  void RequireLine(const char* what) {
    if (!Next()) {
      throw ParseError(source_, line_no_ + 1, 1,
                       std::string("unexpected end of input, expected ") +
                           what);
    }
  }

  void ExpectEnd() {
    if (Next()) Fail(1, "unexpected trailing content");
  }

  long long Int(std::size_t i) const {
    const Token& t = tokens_[i];
    long long value = 0;
    const char* end = t.text.data() + t.text.size();
    auto [ptr, ec] = std::from_chars(t.text.data(), end, value);
    if (ec != std::errc() || ptr != end) {
      Fail(t.column, "expected an integer, got '" + std::string(t.text) + "'");
    }
    return value;
  }

  long long NonNegativeInt(std::size_t i) const {
    const long long v = Int(i);
    Expect(v >= 0, tokens_[i].column, "expected a non-negative integer");
    return v;
  }

  double Real(std::size_t i) const {
    const Token& t = tokens_[i];
    double value = 0.0;
    const char* begin = t.text.data();
    const char* end = begin + t.text.size();
    if (begin != end && *begin == '+') ++begin;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
      Fail(t.column, "expected a real, got '" + std::string(t.text) + "'");
    }
    return value;
  }

  int Column(std::size_t i) const { return tokens_[i].column; }

 private:
  static bool IsSpace(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v';
  }

  std::istream& in_;
  std::string source_;
  bool dimacs_;
  std::string line_;
  int line_no_ = 0;
  std::vector<Token> tokens_;
};

// Runs `build`, turning domain errors from the constructors into parse
// errors positioned at the current line.
template <typename F>
auto Guarded(const LineReader& r, F&& build) {
  try {
    return build();
  } catch (const std::invalid_argument& e) {
    r.Fail(1, e.what());
  }
}

std::ifstream Open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, 0, "cannot open file");
  return in;
}

}  // namespace

UndirectedGraph ReadEdgeList(std::istream& in, const std::string& source) {
  LineReader r(in, source, /*dimacs_comments=*/false);
  r.RequireLine("header 'n m'");
  r.ExpectCount(2, 2, "header 'n m'");
  const long long n = r.NonNegativeInt(0);
  const long long m = r.NonNegativeInt(1);
  r.Expect(n >= 1, r.Column(0), "graph needs at least one vertex");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    r.RequireLine("edge 'u v [w]'");
    r.ExpectCount(2, 3, "edge 'u v [w]'");
    Edge e;
    const long long u = r.NonNegativeInt(0);
    const long long v = r.NonNegativeInt(1);
    r.Expect(u < n, r.Column(0), "vertex out of range");
    r.Expect(v < n, r.Column(1), "vertex out of range");
    r.Expect(u != v, r.Column(1), "self-loop");
    e.u = static_cast<int>(u);
    e.v = static_cast<int>(v);
    if (r.tokens().size() == 3) {
      e.w = r.Real(2);
      r.Expect(e.w >= 0.0, r.Column(2), "negative edge weight");
    }
    edges.push_back(e);
  }
  r.ExpectEnd();
  return Guarded(r, [&] {
    return UndirectedGraph(static_cast<int>(n), std::move(edges));
  });
}

WeightedBipartiteGraph ReadBipartite(std::istream& in,
                                     const std::string& source) {
  LineReader r(in, source, /*dimacs_comments=*/false);
  r.RequireLine("header '|L| |R| m'");
  r.ExpectCount(3, 3, "header '|L| |R| m'");
  const long long left = r.NonNegativeInt(0);
  const long long right = r.NonNegativeInt(1);
  const long long m = r.NonNegativeInt(2);
  r.Expect(left >= 1, r.Column(0), "left side must be non-empty");
  std::vector<double> weights(static_cast<std::size_t>(right), 0.0);
  std::vector<char> seen(weights.size(), 0);
  for (long long i = 0; i < right; ++i) {
    r.RequireLine("right vertex 'v w(v)'");
    r.ExpectCount(2, 2, "right vertex 'v w(v)'");
    const long long v = r.NonNegativeInt(0);
    r.Expect(v < right, r.Column(0), "right vertex out of range");
    r.Expect(!seen[v], r.Column(0), "right vertex listed twice");
    seen[v] = 1;
    weights[v] = r.Real(1);
    r.Expect(weights[v] >= 0.0, r.Column(1), "negative weight");
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    r.RequireLine("edge 'u v'");
    r.ExpectCount(2, 2, "edge 'u v'");
    const long long u = r.NonNegativeInt(0);
    const long long v = r.NonNegativeInt(1);
    r.Expect(u < left, r.Column(0), "left vertex out of range");
    r.Expect(v < right, r.Column(1), "right vertex out of range");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  r.ExpectEnd();
  return Guarded(r, [&] {
    return WeightedBipartiteGraph(static_cast<int>(left), std::move(weights),
                                  std::move(edges));
  });
}

FlowInstance ReadDimacs(std::istream& in, const std::string& source) {
  LineReader r(in, source, /*dimacs_comments=*/true);
  FlowInstance fi;
  fi.source = -1;
  fi.sink = -1;
  long long declared_arcs = -1;
  while (r.Next()) {
    const auto& t = r.tokens();
    if (t[0].text == "p") {
      r.Expect(declared_arcs < 0, 1, "duplicate problem line");
      r.ExpectCount(4, 4, "'p max n m'");
      r.Expect(t[1].text == "max", r.Column(1), "expected problem type 'max'");
      const long long n = r.NonNegativeInt(2);
      r.Expect(n >= 2, r.Column(2), "network needs at least two nodes");
      fi.num_nodes = static_cast<int>(n);
      declared_arcs = r.NonNegativeInt(3);
      fi.arcs.reserve(static_cast<std::size_t>(declared_arcs));
    } else if (t[0].text == "n") {
      r.Expect(declared_arcs >= 0, 1, "node line before problem line");
      r.ExpectCount(3, 3, "'n id s|t'");
      const long long id = r.Int(1);
      r.Expect(id >= 1 && id <= fi.num_nodes, r.Column(1),
               "node out of range");
      if (t[2].text == "s") {
        r.Expect(fi.source < 0, r.Column(2), "duplicate source");
        fi.source = static_cast<int>(id - 1);
      } else if (t[2].text == "t") {
        r.Expect(fi.sink < 0, r.Column(2), "duplicate sink");
        fi.sink = static_cast<int>(id - 1);
      } else {
        r.Fail(r.Column(2), "expected 's' or 't'");
      }
    } else if (t[0].text == "a") {
      r.Expect(declared_arcs >= 0, 1, "arc line before problem line");
      r.ExpectCount(4, 4, "'a u v cap'");
      const long long u = r.Int(1);
      const long long v = r.Int(2);
      r.Expect(u >= 1 && u <= fi.num_nodes, r.Column(1), "node out of range");
      r.Expect(v >= 1 && v <= fi.num_nodes, r.Column(2), "node out of range");
      const double cap = r.Real(3);
      r.Expect(cap >= 0.0, r.Column(3), "negative capacity");
      r.Expect(static_cast<long long>(fi.arcs.size()) < declared_arcs, 1,
               "more arcs than declared");
      fi.arcs.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1), cap,
                         false});
    } else {
      r.Fail(1, "unknown line type '" + std::string(t[0].text) + "'");
    }
  }
  if (declared_arcs < 0) throw ParseError(source, r.line(), 0, "no problem line");
  if (static_cast<long long>(fi.arcs.size()) != declared_arcs) {
    throw ParseError(source, r.line(), 0, "fewer arcs than declared");
  }
  if (fi.source < 0) throw ParseError(source, r.line(), 0, "no source node");
  if (fi.sink < 0) throw ParseError(source, r.line(), 0, "no sink node");
  if (fi.source == fi.sink) {
    throw ParseError(source, r.line(), 0, "source equals sink");
  }
  return fi;
}

std::vector<double> ReadVector(std::istream& in, const std::string& source,
                               int expected_size) {
  LineReader r(in, source, /*dimacs_comments=*/false);
  std::vector<double> y;
  while (r.Next()) {
    r.ExpectCount(1, 1, "one real per line");
    y.push_back(r.Real(0));
  }
  if (expected_size >= 0 && static_cast<int>(y.size()) != expected_size) {
    throw ParseError(source, r.line(), 0,
                     "expected " + std::to_string(expected_size) +
                         " values, got " + std::to_string(y.size()));
  }
  return y;
}

AnchorSet ReadAnchors(std::istream& in, int n, const std::string& source) {
  LineReader r(in, source, /*dimacs_comments=*/false);
  AnchorSet anchors(n);
  while (r.Next()) {
    r.ExpectCount(1, 1, "one vertex per line");
    const long long v = r.NonNegativeInt(0);
    r.Expect(v < n, r.Column(0), "vertex out of range");
    anchors.Insert(static_cast<int>(v));
  }
  return anchors;
}

UndirectedGraph LoadEdgeList(const std::string& path) {
  auto in = Open(path);
  return ReadEdgeList(in, path);
}

WeightedBipartiteGraph LoadBipartite(const std::string& path) {
  auto in = Open(path);
  return ReadBipartite(in, path);
}

FlowInstance LoadDimacs(const std::string& path) {
  auto in = Open(path);
  return ReadDimacs(in, path);
}

std::vector<double> LoadVector(const std::string& path, int expected_size) {
  auto in = Open(path);
  return ReadVector(in, path, expected_size);
}

AnchorSet LoadAnchors(const std::string& path, int n) {
  auto in = Open(path);
  return ReadAnchors(in, n, path);
}

void WriteEdgeList(const UndirectedGraph& g, std::ostream& out) {
  out << g.n() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) {
    out << e.u << ' ' << e.v;
    if (g.weighted()) out << ' ' << FormatReal(e.w);
    out << '\n';
  }
}

void WriteBipartite(const WeightedBipartiteGraph& b, std::ostream& out) {
  out << b.left_size() << ' ' << b.right_size() << ' ' << b.num_edges()
      << '\n';
  for (int v = 0; v < b.right_size(); ++v) {
    out << v << ' ' << FormatReal(b.weight(v)) << '\n';
  }
  for (const auto& [u, v] : b.edges()) out << u << ' ' << v << '\n';
}

void WriteDimacs(const FlowInstance& fi, std::ostream& out) {
  out << "p max " << fi.num_nodes << ' ' << fi.arcs.size() << '\n';
  out << "n " << fi.source + 1 << " s\n";
  out << "n " << fi.sink + 1 << " t\n";
  for (const Arc& a : fi.arcs) {
    out << "a " << a.tail + 1 << ' ' << a.head + 1 << ' '
        << FormatReal(a.capacity) << '\n';
  }
}

void WriteVector(const std::vector<double>& y, std::ostream& out) {
  for (double v : y) out << FormatReal(v) << '\n';
}

void WriteAnchors(const AnchorSet& r, std::ostream& out) {
  for (int v : r.Elements()) out << v << '\n';
}

}  // namespace ratioforge
