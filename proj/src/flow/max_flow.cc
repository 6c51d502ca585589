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

#include "ratioforge/flow/max_flow.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

namespace ratioforge {
namespace {

// Residual network. Input arc i becomes edge 2i (forward) and 2i+1
// (reverse, zero capacity); edges are grouped by tail in CSR order.
class Residual {
 public:
  explicit Residual(const FlowInstance& fi) : n_(fi.num_nodes) {
    fi.Validate();
    const int m = static_cast<int>(fi.arcs.size());
    head_.resize(2 * m);
    res_.resize(2 * m);
    cap_.resize(2 * m);
    off_.assign(n_ + 1, 0);
    double max_cap = 0.0;
    for (const Arc& a : fi.arcs) {
      ++off_[a.tail + 1];
      ++off_[a.head + 1];
      max_cap = std::max(max_cap, a.capacity);
    }
    tol_ = 1e-12 * max_cap;
    for (int v = 0; v < n_; ++v) off_[v + 1] += off_[v];
    slot_.resize(2 * m);
    edge_at_.resize(2 * m);
    std::vector<int> pos(off_.begin(), off_.end() - 1);
    for (int i = 0; i < m; ++i) {
      const Arc& a = fi.arcs[i];
      head_[2 * i] = a.head;
      head_[2 * i + 1] = a.tail;
      res_[2 * i] = cap_[2 * i] = a.capacity;
      res_[2 * i + 1] = cap_[2 * i + 1] = 0.0;
      slot_[2 * i] = pos[a.tail]++;
      slot_[2 * i + 1] = pos[a.head]++;
      edge_at_[slot_[2 * i]] = 2 * i;
      edge_at_[slot_[2 * i + 1]] = 2 * i + 1;
    }
  }

  int n() const { return n_; }
  double tol() const { return tol_; }
  int begin(int v) const { return off_[v]; }
  int end(int v) const { return off_[v + 1]; }
  int edge(int slot) const { return edge_at_[slot]; }
  int head(int e) const { return head_[e]; }
  double res(int e) const { return res_[e]; }
  bool open(int e) const { return res_[e] > tol_; }

  void Push(int e, double delta) {
    res_[e] -= delta;
    res_[e ^ 1] += delta;
  }

  CutResult Finish(const FlowInstance& fi, double value) const {
    CutResult out;
    out.value = value;
    out.source_side.assign(n_, 0);
    std::deque<int> queue{fi.source};
    out.source_side[fi.source] = 1;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int s = begin(v); s < end(v); ++s) {
        const int e = edge(s);
        if (open(e) && !out.source_side[head(e)]) {
          out.source_side[head(e)] = 1;
          queue.push_back(head(e));
        }
      }
    }
    // Nodes that reach t: walk residual edges backwards from t.
    std::vector<char> reaches(n_, 0);
    reaches[fi.sink] = 1;
    queue.push_back(fi.sink);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int s = begin(v); s < end(v); ++s) {
        const int u = head(edge(s));
        if (!reaches[u] && open(edge(s) ^ 1)) {
          reaches[u] = 1;
          queue.push_back(u);
        }
      }
    }
    out.maximal_source_side.assign(n_, 0);
    for (int v = 0; v < n_; ++v) out.maximal_source_side[v] = !reaches[v];
    out.arc_flow.resize(fi.arcs.size());
    for (std::size_t i = 0; i < fi.arcs.size(); ++i) {
      out.arc_flow[i] = cap_[2 * i] - res_[2 * i];
    }
    return out;
  }

 private:
  int n_;
  double tol_ = 0.0;
  std::vector<int> off_;
  std::vector<int> edge_at_;
  std::vector<int> slot_;
  std::vector<int> head_;
  std::vector<double> res_;
  std::vector<double> cap_;
};

class PushRelabelSolver {
 public:
  PushRelabelSolver(const FlowInstance& fi)
      : fi_(fi),
        r_(fi),
        n_(fi.num_nodes),
        label_(n_, 0),
        excess_(n_, 0.0),
        current_(n_, 0),
        count_(2 * n_ + 1, 0),
        buckets_(2 * n_ + 1) {}

  CutResult Run() {
    const int s = fi_.source;
    for (int slot = r_.begin(s); slot < r_.end(s); ++slot) {
      const int e = r_.edge(slot);
      const double c = r_.res(e);
      if (c > 0.0 && r_.head(e) != s) {
        r_.Push(e, c);
        excess_[r_.head(e)] += c;
        excess_[s] -= c;
      }
    }
    GlobalRelabel();
    while (highest_ >= 0) {
      if (buckets_[highest_].empty()) {
        --highest_;
        continue;
      }
      const int v = buckets_[highest_].back();
      buckets_[highest_].pop_back();
      // Entries left behind by relabels are discarded here.
      if (label_[v] != highest_ || !Active(v)) continue;
      Discharge(v);
      if (relabels_since_global_ >= n_) GlobalRelabel();
    }
    return r_.Finish(fi_, excess_[fi_.sink]);
  }

 private:
  bool Active(int v) const {
    return v != fi_.source && v != fi_.sink && excess_[v] > r_.tol() &&
           label_[v] < 2 * n_;
  }

  void Activate(int v) {
    if (!Active(v)) return;
    buckets_[label_[v]].push_back(v);
    highest_ = std::max(highest_, label_[v]);
  }

  void SetLabel(int v, int label) {
    if (label_[v] < n_) --count_[label_[v]];
    label_[v] = label;
    if (label < n_) ++count_[label];
  }

  void Discharge(int v) {
    while (excess_[v] > r_.tol()) {
      if (current_[v] == r_.end(v)) {
        const int old = label_[v];
        Relabel(v);
        ++relabels_since_global_;
        if (old < n_ && count_[old] == 0) Gap(old);
        if (label_[v] >= 2 * n_) return;
        continue;
      }
      const int e = r_.edge(current_[v]);
      const int u = r_.head(e);
      if (r_.open(e) && label_[v] == label_[u] + 1) {
        const double delta = std::min(excess_[v], r_.res(e));
        r_.Push(e, delta);
        excess_[v] -= delta;
        const bool was_active = Active(u);
        excess_[u] += delta;
        if (!was_active) Activate(u);
      } else {
        ++current_[v];
      }
    }
  }

  void Relabel(int v) {
    int best = 2 * n_;
    for (int slot = r_.begin(v); slot < r_.end(v); ++slot) {
      const int e = r_.edge(slot);
      if (r_.open(e)) best = std::min(best, label_[r_.head(e)] + 1);
    }
    SetLabel(v, std::min(best, 2 * n_));
    current_[v] = r_.begin(v);
  }

  // No node is left at label g < n: every node above it (and below n) can
  // no longer reach t.
  void Gap(int g) {
    for (int u = 0; u < n_; ++u) {
      if (u == fi_.source || u == fi_.sink) continue;
      if (label_[u] > g && label_[u] < n_) {
        SetLabel(u, n_ + 1);
        current_[u] = r_.begin(u);
        Activate(u);
      }
    }
  }

  // Exact distance labels: to t where t is reachable, otherwise n plus the
  // distance to s.
  void GlobalRelabel() {
    relabels_since_global_ = 0;
    const int unset = 2 * n_;
    std::vector<int> next(n_, unset);
    auto bfs = [&](int root, int base) {
      std::deque<int> queue{root};
      next[root] = base;
      while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int slot = r_.begin(v); slot < r_.end(v); ++slot) {
          const int u = r_.head(r_.edge(slot));
          // u -> v must have residual capacity.
          if (next[u] == unset && r_.open(r_.edge(slot) ^ 1) &&
              u != fi_.source && u != fi_.sink) {
            next[u] = next[v] + 1;
            queue.push_back(u);
          }
        }
      }
    };
    bfs(fi_.sink, 0);
    next[fi_.source] = n_;
    bfs(fi_.source, n_);
    std::fill(count_.begin(), count_.end(), 0);
    for (auto& b : buckets_) b.clear();
    highest_ = -1;
    for (int v = 0; v < n_; ++v) {
      label_[v] = next[v];
      if (label_[v] < n_) ++count_[label_[v]];
      current_[v] = r_.begin(v);
    }
    for (int v = 0; v < n_; ++v) Activate(v);
  }

  const FlowInstance& fi_;
  Residual r_;
  int n_;
  std::vector<int> label_;
  std::vector<double> excess_;
  std::vector<int> current_;
  std::vector<int> count_;
  std::vector<std::vector<int>> buckets_;
  int highest_ = -1;
  int relabels_since_global_ = 0;
};

}  // namespace

const char* FlowKernelName(FlowKernel kernel) {
  return kernel == FlowKernel::kPushRelabel ? "push_relabel" : "edmonds_karp";
}

CutResult PushRelabel(const FlowInstance& fi) {
  return PushRelabelSolver(fi).Run();
}

CutResult EdmondsKarp(const FlowInstance& fi) {
  Residual r(fi);
  const int n = fi.num_nodes;
  double value = 0.0;
  std::vector<int> parent_edge(n);
  while (true) {
    std::fill(parent_edge.begin(), parent_edge.end(), -1);
    std::deque<int> queue{fi.source};
    parent_edge[fi.source] = -2;
    while (!queue.empty() && parent_edge[fi.sink] == -1) {
      const int v = queue.front();
      queue.pop_front();
      for (int slot = r.begin(v); slot < r.end(v); ++slot) {
        const int e = r.edge(slot);
        const int u = r.head(e);
        if (parent_edge[u] == -1 && r.open(e)) {
          parent_edge[u] = e;
          queue.push_back(u);
        }
      }
    }
    if (parent_edge[fi.sink] == -1) break;
    double bottleneck = std::numeric_limits<double>::infinity();
    for (int v = fi.sink; v != fi.source; v = r.head(parent_edge[v] ^ 1)) {
      bottleneck = std::min(bottleneck, r.res(parent_edge[v]));
    }
    for (int v = fi.sink; v != fi.source; v = r.head(parent_edge[v] ^ 1)) {
      r.Push(parent_edge[v], bottleneck);
    }
    value += bottleneck;
  }
  return r.Finish(fi, value);
}

CutResult MaxFlow(const FlowInstance& fi, FlowKernel kernel) {
  return kernel == FlowKernel::kPushRelabel ? PushRelabel(fi) : EdmondsKarp(fi);
}

double MaxConservationViolation(const FlowInstance& fi,
                                const std::vector<double>& arc_flow) {
  std::vector<double> balance(fi.num_nodes, 0.0);
  for (std::size_t i = 0; i < fi.arcs.size(); ++i) {
    balance[fi.arcs[i].tail] -= arc_flow[i];
    balance[fi.arcs[i].head] += arc_flow[i];
  }
  double worst = 0.0;
  for (int v = 0; v < fi.num_nodes; ++v) {
    if (v == fi.source || v == fi.sink) continue;
    worst = std::max(worst, std::abs(balance[v]));
  }
  return worst;
}

double MaxCapacityViolation(const FlowInstance& fi,
                            const std::vector<double>& arc_flow) {
  double worst = 0.0;
  for (std::size_t i = 0; i < fi.arcs.size(); ++i) {
    worst = std::max(worst, -arc_flow[i]);
    worst = std::max(worst, arc_flow[i] - fi.arcs[i].capacity);
  }
  return worst;
}

}  // namespace ratioforge
