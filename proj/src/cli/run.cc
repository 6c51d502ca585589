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

#include "ratioforge/cli/run.h"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include "ratioforge/cli/brute_force.h"
#include "ratioforge/flow/exact_solvers.h"
#include "ratioforge/flow/max_flow.h"
#include "ratioforge/problems/io.h"
#include "ratioforge/problems/membership.h"
#include "ratioforge/problems/oracles.h"
#include "ratioforge/setfn/text_format.h"
#include "ratioforge/universal/solvers.h"

namespace ratioforge {
namespace {

struct ProblemEntry {
  ProblemKind kind;
  const char* name;
};
constexpr ProblemEntry kProblems[] = {
    {ProblemKind::kDsg, "dsg"},           {ProblemKind::kPMean, "pmean"},
    {ProblemKind::kHnsn, "hnsn"},         {ProblemKind::kAnchored, "anchored"},
    {ProblemKind::kMinCut, "mincut"},     {ProblemKind::kMembership, "membership"},
    {ProblemKind::kMnp, "mnp"},
};

struct AlgoEntry {
  AlgoKind kind;
  const char* name;
};
constexpr AlgoEntry kAlgos[] = {
    {AlgoKind::kSuperGreedy, "supergreedy"},
    {AlgoKind::kFw, "fw"},
    {AlgoKind::kMnp, "mnp"},
    {AlgoKind::kFlow, "flow"},
    {AlgoKind::kExactFlowBaseline, "exact_flow_baseline"},
    {AlgoKind::kBrute, "brute"},
};

bool IsUniversal(AlgoKind a) {
  return a == AlgoKind::kSuperGreedy || a == AlgoKind::kFw ||
         a == AlgoKind::kMnp;
}

UniversalAlgorithm ToUniversal(AlgoKind a) {
  switch (a) {
    case AlgoKind::kFw:
      return UniversalAlgorithm::kFrankWolfe;
    case AlgoKind::kMnp:
      return UniversalAlgorithm::kFujishigeWolfe;
    default:
      return UniversalAlgorithm::kSuperGreedy;
  }
}

FlowKernel ToKernel(AlgoKind a) {
  return a == AlgoKind::kExactFlowBaseline ? FlowKernel::kEdmondsKarp
                                           : FlowKernel::kPushRelabel;
}

class Stopwatch {
 public:
  explicit Stopwatch(bool enabled)
      : enabled_(enabled), start_(std::chrono::steady_clock::now()) {}
  double Elapsed() const {
    if (!enabled_) return 0.0;
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point start_;
};

void RequireBruteSize(int n, int limit) {
  if (n > limit) {
    throw IncompatibleError("algo brute needs n <= " + std::to_string(limit) +
                            ", instance has n = " + std::to_string(n));
  }
}

SolverConfig MakeConfig(const RunSpec& spec, int n) {
  SolverConfig cfg;
  cfg.max_iters = spec.iters;
  cfg.eps = spec.eps;
  cfg.trace_every = DefaultTraceEvery(n);
  cfg.step_rule = spec.step_rule;
  cfg.record_time = spec.record_time;
  try {
    cfg.Validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

Certification UniversalCertification(const SolveResult& r) {
  return r.converged ? Certification::kGapBound : Certification::kHeuristic;
}

int UniversalExit(const RunSpec& spec, const SolveResult& r) {
  return spec.eps > 0.0 && !r.converged ? kExitUncertified : kExitOk;
}

// One trace row per density-improvement round; `scale` converts the
// solver's ratio into the reported objective.
ConvergenceTrace DinkelbachTrace(const DinkelbachResult& d, double scale,
                                 bool record_time) {
  ConvergenceTrace trace;
  for (std::size_t k = 0; k < d.rounds.size(); ++k) {
    TraceRecord r;
    r.iter = static_cast<int>(k) + 1;
    r.elapsed_s = record_time ? d.rounds[k].elapsed_s : 0.0;
    r.best_obj = scale * d.rounds[k].lambda;
    r.set_size = d.rounds[k].set_size;
    trace.Add(r);
  }
  return trace;
}

ConvergenceTrace SingleRow(double elapsed, double best_obj, int set_size,
                           std::optional<double> norm_sq = std::nullopt,
                           std::optional<double> gap = std::nullopt) {
  ConvergenceTrace trace;
  trace.Add({1, elapsed, best_obj, norm_sq, gap, set_size});
  return trace;
}

void FillSummary(RunOutcome& out, const RunSpec& spec, double best_obj,
                 int set_size, double elapsed, int iterations,
                 Certification c) {
  out.summary.problem = ProblemName(spec.problem);
  out.summary.algo = AlgoName(spec.algo);
  out.summary.best_obj = best_obj;
  out.summary.set_size = set_size;
  out.summary.elapsed_s = elapsed;
  out.summary.iterations = iterations;
  out.summary.certified = c;
}

GraphPtr LoadGraph(const RunSpec& spec) {
  return std::make_shared<const UndirectedGraph>(LoadEdgeList(spec.input));
}

// dsg, pmean, hnsn, anchored.
RunOutcome RunRatio(const RunSpec& spec) {
  GraphPtr graph;
  BipartitePtr bipartite;
  SetFunctionPtr f;
  std::vector<double> bonus;  // anchored flow: half the penalty
  switch (spec.problem) {
    case ProblemKind::kDsg:
      graph = LoadGraph(spec);
      f = MakeDsgOracle(graph);
      break;
    case ProblemKind::kPMean:
      graph = LoadGraph(spec);
      if (!(spec.p >= 1.0)) throw UsageError("--p must be >= 1");
      f = MakePMeanOracle(graph, spec.p);
      break;
    case ProblemKind::kHnsn:
      bipartite = std::make_shared<const WeightedBipartiteGraph>(
          LoadBipartite(spec.input));
      f = MakeHnsnOracle(bipartite);
      break;
    case ProblemKind::kAnchored: {
      graph = LoadGraph(spec);
      if (spec.anchors.empty()) throw UsageError("anchored needs --anchors");
      auto anchored =
          MakeAnchoredOracle(graph, LoadAnchors(spec.anchors, graph->n()));
      for (int v = 0; v < graph->n(); ++v) {
        bonus.push_back(0.5 * anchored->penalty(v));
      }
      f = anchored;
      break;
    }
    default:
      throw UsageError("not a ratio problem");
  }
  RunOutcome out;
  Stopwatch clock(spec.record_time);
  if (IsUniversal(spec.algo)) {
    SolverConfig cfg = MakeConfig(spec, f->n());
    cfg.objective = Objective::kMaxRatio;
    SolveResult r = SolveUniversal(*f, ToUniversal(spec.algo), cfg);
    out.trace = std::move(r.trace);
    out.best_set = r.best_set;
    FillSummary(out, spec, r.best_objective, r.best_set.size(),
                clock.Elapsed(), r.iterations, UniversalCertification(r));
    out.exit_code = UniversalExit(spec, r);
    return out;
  }
  if (spec.algo == AlgoKind::kBrute) {
    RequireBruteSize(f->n(), kBruteForceMaxN);
    const RatioSolution best = BruteMaxRatio(*f);
    const double elapsed = clock.Elapsed();
    out.best_set = best.set;
    out.trace = SingleRow(elapsed, best.ratio, best.set.size());
    FillSummary(out, spec, best.ratio, best.set.size(), elapsed, 1,
                Certification::kExact);
    return out;
  }
  const FlowKernel kernel = ToKernel(spec.algo);
  DinkelbachResult d;
  double scale = 1.0;
  if (spec.problem == ProblemKind::kHnsn) {
    d = FlowHnsnSolver(bipartite, kernel);
  } else {
    d = FlowDsgSolver(graph, bonus, kernel);
    if (spec.problem == ProblemKind::kAnchored) scale = 2.0;
  }
  const double elapsed = clock.Elapsed();
  out.best_set = d.solution.set;
  out.trace = DinkelbachTrace(d, scale, spec.record_time);
  const double ratio = f->Value(d.solution.set) / d.solution.set.size();
  FillSummary(out, spec, ratio, d.solution.set.size(), elapsed, d.calls,
              Certification::kExact);
  return out;
}

RunOutcome RunMinCut(const RunSpec& spec) {
  auto f = MakeMinCutOracle(LoadDimacs(spec.input));
  RunOutcome out;
  Stopwatch clock(spec.record_time);
  const double offset = f->offset();
  if (IsUniversal(spec.algo)) {
    SolverConfig cfg = MakeConfig(spec, f->n());
    cfg.objective = Objective::kMinValue;
    SolveResult r = SolveUniversal(*f, ToUniversal(spec.algo), cfg);
    for (auto& rec : r.trace.mutable_records()) {
      rec.best_obj += offset;
      rec.set_size += 1;  // reported as the source side S u {s}
    }
    out.trace = std::move(r.trace);
    out.best_set = r.best_set;
    FillSummary(out, spec, r.best_value + offset, r.best_set.size() + 1,
                clock.Elapsed(), r.iterations, UniversalCertification(r));
    out.exit_code = UniversalExit(spec, r);
    return out;
  }
  if (spec.algo == AlgoKind::kBrute) {
    RequireBruteSize(f->n(), kBruteForceMaxN);
    const ExactMax best = BruteMinValue(*f);
    const double elapsed = clock.Elapsed();
    out.best_set = best.set;
    out.trace = SingleRow(elapsed, best.value + offset, best.set.size() + 1);
    FillSummary(out, spec, best.value + offset, best.set.size() + 1, elapsed,
                1, Certification::kExact);
    return out;
  }
  const CutResult cut = MaxFlow(f->network(), ToKernel(spec.algo));
  const double elapsed = clock.Elapsed();
  out.best_set = Subset(f->n());
  for (int v = 0; v < f->n(); ++v) {
    if (cut.source_side[f->node(v)]) out.best_set.Insert(v);
  }
  const int side = out.best_set.size() + 1;
  out.trace = SingleRow(elapsed, cut.value, side);
  FillSummary(out, spec, cut.value, side, elapsed, 1, Certification::kExact);
  return out;
}

RunOutcome RunMembership(const RunSpec& spec) {
  if (spec.y.empty()) throw UsageError("membership needs --y");
  MembershipInstance instance;
  instance.graph = LoadGraph(spec);
  instance.y = LoadVector(spec.y, instance.graph->n());
  const SetFunctionPtr h = MakeMembershipOracle(instance);
  const double tol = MembershipTolerance(*h);
  RunOutcome out;
  Stopwatch clock(spec.record_time);
  auto finish_exact = [&](const ExactMax& best, int iterations) {
    const double elapsed = clock.Elapsed();
    out.best_set = best.set;
    out.answer = best.value > tol ? MembershipAnswer::kNo
                                  : MembershipAnswer::kYes;
    out.trace = SingleRow(elapsed, best.value, best.set.size());
    FillSummary(out, spec, best.value, best.set.size(), elapsed, iterations,
                Certification::kExact);
  };
  if (spec.algo == AlgoKind::kBrute) {
    RequireBruteSize(h->n(), kBruteForceMaxN);
    finish_exact(BruteMaxValue(*h), 1);
  } else if (!IsUniversal(spec.algo)) {
    std::vector<double> minus_y(instance.y.size());
    for (std::size_t v = 0; v < minus_y.size(); ++v) {
      minus_y[v] = -instance.y[v];
    }
    const ValueSolution best =
        FlowMaxDsgValue(*instance.graph, minus_y, ToKernel(spec.algo));
    finish_exact({best.set, best.value}, 1);
  } else {
    const SolverConfig cfg = MakeConfig(spec, h->n());
    ExactMaxSolver exact;
    if (h->n() <= kBruteForceMaxN) {
      exact = [](const SetFunction& fn) { return BruteMaxValue(fn); };
    }
    MembershipDecision d =
        DecideMembership(*h, ToUniversal(spec.algo), cfg, exact);
    const double elapsed = clock.Elapsed();
    out.answer = d.answer;
    out.best_set = d.witness;
    Certification c = Certification::kHeuristic;
    // A YES from the point or the exact solver pins max h to 0 (the empty
    // set); a witness only bounds it from below.
    if (d.certificate == "exact" || d.certificate == "point") {
      c = Certification::kExact;
    } else if (d.run.converged) {
      c = Certification::kGapBound;
    }
    out.trace = std::move(d.run.trace);
    FillSummary(out, spec, d.h_max, d.witness.size(), elapsed,
                d.run.iterations, c);
    if (d.answer == MembershipAnswer::kUndecided) {
      out.note = "UNDECIDED at gap " + FormatReal(d.gap);
      out.exit_code = kExitUncertified;
      return out;
    }
    if (spec.eps > 0.0 && c == Certification::kHeuristic &&
        d.answer == MembershipAnswer::kYes) {
      out.exit_code = kExitUncertified;
    }
  }
  std::string note = std::string("membership ") +
                     MembershipAnswerName(*out.answer);
  if (*out.answer == MembershipAnswer::kNo) {
    note += " witness";
    for (int v : out.best_set.Elements()) note += ' ' + std::to_string(v);
  }
  out.note = note;
  return out;
}

RunOutcome RunMnp(const RunSpec& spec) {
  const GraphPtr graph = LoadGraph(spec);
  const SetFunctionPtr f = MakeDsgOracle(graph);
  RunOutcome out;
  Stopwatch clock(spec.record_time);
  if (IsUniversal(spec.algo)) {
    if (!spec.decomposition_path.empty()) {
      throw IncompatibleError(
          "--decomposition needs an exact algo (flow, exact_flow_baseline, "
          "brute)");
    }
    SolverConfig cfg = MakeConfig(spec, f->n());
    cfg.objective = Objective::kMaxRatio;
    SolveResult r = SolveUniversal(*f, ToUniversal(spec.algo), cfg);
    const double elapsed = clock.Elapsed();
    // The trace reports the smallest |x|^2 seen so far.
    double best = std::numeric_limits<double>::infinity();
    for (auto& rec : r.trace.mutable_records()) {
      if (rec.norm_sq) best = std::min(best, *rec.norm_sq);
      rec.best_obj = best;
    }
    out.trace = std::move(r.trace);
    out.best_set = r.best_set;
    out.point = r.x.x;
    FillSummary(out, spec, r.x.NormSq(), r.best_set.size(), elapsed,
                r.iterations, UniversalCertification(r));
    out.exit_code = UniversalExit(spec, r);
    return out;
  }
  Decomposition d;
  if (spec.algo == AlgoKind::kBrute) {
    RequireBruteSize(f->n(), kBruteForceQpMaxN);
    out.point = BruteMnpQp(*f);
    d = DenseDecomposition(
        f, [](const SetFunction& fn) { return BruteMaxRatio(fn); });
  } else {
    d = FlowDsgDecomposition(graph, {}, ToKernel(spec.algo));
    out.point = d.InducedPoint();
  }
  const double elapsed = clock.Elapsed();
  const double norm_sq = Dot(out.point, out.point);
  out.best_set = d.blocks.front().block;
  out.trace = SingleRow(elapsed, norm_sq, out.best_set.size(), norm_sq,
                        DualityGap(*f, out.point));
  out.decomposition = std::move(d);
  FillSummary(out, spec, norm_sq, out.best_set.size(), elapsed, 1,
              Certification::kExact);
  return out;
}

void WriteFile(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageError("cannot write " + path);
  file << content;
}

}  // namespace

const char* ProblemName(ProblemKind p) {
  for (const auto& e : kProblems) {
    if (e.kind == p) return e.name;
  }
  return "?";
}

const char* AlgoName(AlgoKind a) {
  for (const auto& e : kAlgos) {
    if (e.kind == a) return e.name;
  }
  return "?";
}

std::optional<ProblemKind> ParseProblem(std::string_view name) {
  for (const auto& e : kProblems) {
    if (name == e.name) return e.kind;
  }
  return std::nullopt;
}

std::optional<AlgoKind> ParseAlgo(std::string_view name) {
  for (const auto& e : kAlgos) {
    if (name == e.name) return e.kind;
  }
  return std::nullopt;
}

const std::vector<ProblemKind>& AllProblems() {
  static const std::vector<ProblemKind> all = [] {
    std::vector<ProblemKind> v;
    for (const auto& e : kProblems) v.push_back(e.kind);
    return v;
  }();
  return all;
}

const std::vector<AlgoKind>& AllAlgos() {
  static const std::vector<AlgoKind> all = [] {
    std::vector<AlgoKind> v;
    for (const auto& e : kAlgos) v.push_back(e.kind);
    return v;
  }();
  return all;
}

std::vector<AlgoKind> ValidAlgos(ProblemKind p) {
  std::vector<AlgoKind> out = {AlgoKind::kSuperGreedy, AlgoKind::kFw,
                               AlgoKind::kMnp};
  if (p != ProblemKind::kPMean) {
    out.push_back(AlgoKind::kFlow);
    out.push_back(AlgoKind::kExactFlowBaseline);
  }
  out.push_back(AlgoKind::kBrute);
  return out;
}

std::string RunSummary::Line() const {
  std::ostringstream s;
  s << problem << ',' << algo << ',' << FormatReal(best_obj) << ','
    << set_size << ',' << FormatReal(elapsed_s) << ',' << iterations << ','
    << CertificationName(certified);
  return s.str();
}

RunSummary RunSummary::Parse(const std::string& line) {
  std::vector<std::string> f;
  std::stringstream in(line);
  std::string field;
  while (std::getline(in, field, ',')) f.push_back(field);
  if (f.size() != 7) throw ParseError("summary", 1, 1, "expected 7 fields");
  RunSummary s;
  s.problem = f[0];
  s.algo = f[1];
  try {
    std::size_t used = 0;
    s.best_obj = std::stod(f[2], &used);
    s.set_size = std::stoi(f[3]);
    s.elapsed_s = std::stod(f[4]);
    s.iterations = std::stoi(f[5]);
  } catch (const std::exception&) {
    throw ParseError("summary", 1, 1, "malformed number");
  }
  if (f[6] == "exact") {
    s.certified = Certification::kExact;
  } else if (f[6] == "gap<=eps2") {
    s.certified = Certification::kGapBound;
  } else if (f[6] == "heuristic") {
    s.certified = Certification::kHeuristic;
  } else {
    throw ParseError("summary", 1, 7, "unknown certification '" + f[6] + "'");
  }
  return s;
}

RunOutcome Execute(const RunSpec& spec) {
  const auto valid = ValidAlgos(spec.problem);
  if (std::find(valid.begin(), valid.end(), spec.algo) == valid.end()) {
    std::string names;
    for (AlgoKind a : valid) {
      if (!names.empty()) names += ", ";
      names += AlgoName(a);
    }
    throw IncompatibleError(std::string("algo ") + AlgoName(spec.algo) +
                            " is not available for problem " +
                            ProblemName(spec.problem) + "; valid: " + names);
  }
  if (spec.input.empty()) throw UsageError("--input is required");
  if (!spec.decomposition_path.empty() && spec.problem != ProblemKind::kMnp) {
    throw IncompatibleError("--decomposition is only available for mnp");
  }
  if (!spec.point_path.empty() && spec.problem != ProblemKind::kMnp) {
    throw IncompatibleError("--point is only available for mnp");
  }
  switch (spec.problem) {
    case ProblemKind::kMinCut:
      return RunMinCut(spec);
    case ProblemKind::kMembership:
      return RunMembership(spec);
    case ProblemKind::kMnp:
      return RunMnp(spec);
    default:
      return RunRatio(spec);
  }
}

int RunAndReport(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  RunOutcome outcome;
  try {
    outcome = Execute(spec);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const IncompatibleError& e) {
    err << "incompatible: " << e.what() << '\n';
    return kExitIncompatible;
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    // Domain checks of well-formed input (for example p < 1).
    err << "usage: " << e.what() << '\n';
    return kExitUsage;
  }
  try {
    if (!spec.trace_path.empty()) WriteFile(spec.trace_path, outcome.trace.ToCsv());
    if (!spec.summary_path.empty()) {
      const bool fresh = !std::filesystem::exists(spec.summary_path) ||
                         std::filesystem::file_size(spec.summary_path) == 0;
      std::ofstream file(spec.summary_path, std::ios::app);
      if (!file) throw UsageError("cannot write " + spec.summary_path);
      if (fresh) file << kSummaryHeader << '\n';
      file << outcome.summary.Line() << '\n';
    }
    if (!spec.point_path.empty()) {
      std::ostringstream s;
      WriteVector(outcome.point, s);
      WriteFile(spec.point_path, s.str());
    }
    if (!spec.decomposition_path.empty() && outcome.decomposition) {
      std::ostringstream s;
      outcome.decomposition->WriteCsv(s);
      WriteFile(spec.decomposition_path, s.str());
    }
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << '\n';
    return kExitUsage;
  }
  out << outcome.summary.Line() << '\n';
  if (!outcome.note.empty()) out << outcome.note << '\n';
  if (outcome.exit_code == kExitUncertified) {
    err << "budget exhausted before the requested certificate\n";
  }
  return outcome.exit_code;
}

}  // namespace ratioforge
