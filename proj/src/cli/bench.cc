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


#include "ratioforge/cli/bench.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <map>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "ratioforge/flow/max_flow.h"
#include "ratioforge/problems/io.h"
#include "ratioforge/setfn/text_format.h"

namespace ratioforge {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string Resolve(const std::string& base_dir, const std::string& path) {
  if (path.empty() || fs::path(path).is_absolute() || base_dir.empty()) {
    return path;
  }
  return (fs::path(base_dir) / path).string();
}

// Line and column (1-based) of byte offset `pos` in `text`.
std::pair<int, int> Locate(const std::string& text, std::size_t pos) {
  int line = 1;
  int col = 1;
  for (std::size_t i = 0; i < std::min(pos, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

template <typename T>
T Field(const json& entry, const char* key, T fallback,
        const std::string& source, int index) {
  if (!entry.contains(key)) return fallback;
  try {
    return entry.at(key).get<T>();
  } catch (const json::exception&) {
    throw ParseError(source, 0, 0,
                     "runs[" + std::to_string(index) + "]." + key +
                         " has the wrong type");
  }
}

void WriteText(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
}

}  // namespace

BenchSuite ParseBenchSuite(std::istream& in, const std::string& source,
                           const std::string& base_dir) {
  const std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = Locate(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(source, line, col, "invalid JSON");
  }
  BenchSuite suite;
  if (!doc.is_object() || !doc.contains("runs")) {
    if (doc.is_object() && doc.empty()) return suite;
    throw ParseError(source, 1, 1, "expected an object with a \"runs\" array");
  }
  const json& runs = doc.at("runs");
  if (!runs.is_array()) throw ParseError(source, 1, 1, "\"runs\" must be an array");
  for (int i = 0; i < static_cast<int>(runs.size()); ++i) {
    const json& entry = runs[i];
    const std::string where = "runs[" + std::to_string(i) + "]";
    if (!entry.is_object()) throw ParseError(source, 0, 0, where + " is not an object");
    const auto problem =
        ParseProblem(Field<std::string>(entry, "problem", "", source, i));
    if (!problem) throw ParseError(source, 0, 0, where + ": unknown problem");
    std::vector<std::string> algos;
    if (entry.contains("algos")) {
      algos = Field<std::vector<std::string>>(entry, "algos", {}, source, i);
    }
    if (entry.contains("algo")) {
      algos.push_back(Field<std::string>(entry, "algo", "", source, i));
    }
    if (algos.empty()) throw ParseError(source, 0, 0, where + ": no algo given");
    RunSpec base;
    base.problem = *problem;
    base.input = Resolve(base_dir, Field<std::string>(entry, "input", "", source, i));
    base.anchors =
        Resolve(base_dir, Field<std::string>(entry, "anchors", "", source, i));
    base.y = Resolve(base_dir, Field<std::string>(entry, "y", "", source, i));
    base.iters = Field<int>(entry, "iters", base.iters, source, i);
    base.eps = Field<double>(entry, "eps", base.eps, source, i);
    base.p = Field<double>(entry, "p", base.p, source, i);
    const std::string rule =
        Field<std::string>(entry, "step_rule", "harmonic", source, i);
    if (rule == "harmonic") {
      base.step_rule = StepRule::kHarmonic;
    } else if (rule == "standard") {
      base.step_rule = StepRule::kStandard;
    } else {
      throw ParseError(source, 0, 0, where + ": unknown step_rule " + rule);
    }
    std::string dataset = Field<std::string>(entry, "dataset", "", source, i);
    if (dataset.empty()) dataset = fs::path(base.input).stem().string();
    for (const std::string& name : algos) {
      const auto algo = ParseAlgo(name);
      if (!algo) throw ParseError(source, 0, 0, where + ": unknown algo " + name);
      BenchRun run;
      run.spec = base;
      run.spec.algo = *algo;
      run.dataset = dataset;
      suite.runs.push_back(std::move(run));
    }
  }
  return suite;
}

BenchSuite LoadBenchSuite(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, 0, "cannot open file");
  return ParseBenchSuite(in, path, fs::path(path).parent_path().string());
}

std::string BenchTraceName(const BenchRun& run) {
  return std::string(ProblemName(run.spec.problem)) + "__" +
         AlgoName(run.spec.algo) + "__" + run.dataset + ".csv";
}

int BenchThreads(const BenchOptions& options, int jobs) {
  int threads = options.threads;
  if (threads <= 0) {
    threads = std::max(1u, std::thread::hardware_concurrency());
    if (const char* cap = std::getenv("RATIOFORGE_THREADS")) {
      const int limit = std::atoi(cap);
      if (limit > 0) threads = std::min(threads, limit);
    }
  }
  return std::max(1, std::min(threads, jobs));
}

std::vector<BenchRecord> RunBench(const BenchSuite& suite,
                                  const std::string& out_dir,
                                  const BenchOptions& options) {
  fs::create_directories(out_dir);
  std::vector<BenchRecord> records(suite.runs.size());
  if (suite.runs.empty()) return records;

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < suite.runs.size(); i = next++) {
      BenchRecord& rec = records[i];
      rec.run = suite.runs[i];
      rec.run.spec.record_time = options.record_time;
      rec.run.spec.trace_path =
          (fs::path(out_dir) / BenchTraceName(rec.run)).string();
      std::ostringstream out;
      std::ostringstream err;
      rec.exit_code = RunAndReport(rec.run.spec, out, err);
      if (rec.exit_code == kExitOk || rec.exit_code == kExitUncertified) {
        std::string line;
        std::istringstream lines(out.str());
        std::getline(lines, line);
        rec.summary = RunSummary::Parse(line);
      }
      if (rec.exit_code != kExitOk) {
        rec.error = err.str();
        while (!rec.error.empty() && rec.error.back() == '\n') {
          rec.error.pop_back();
        }
      }
    }
  };
  const int threads = BenchThreads(options, static_cast<int>(suite.runs.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::ostringstream summary;
  summary << "dataset,status," << kSummaryHeader << '\n';
  for (const BenchRecord& rec : records) {
    summary << rec.run.dataset << ',';
    if (rec.exit_code == kExitOk || rec.exit_code == kExitUncertified) {
      summary << (rec.exit_code == kExitOk ? "ok" : "uncertified") << ','
              << rec.summary.Line() << '\n';
    } else {
      summary << "failed," << ProblemName(rec.run.spec.problem) << ','
              << AlgoName(rec.run.spec.algo) << ",,,,,\n";
    }
  }
  WriteText(fs::path(out_dir) / "summary.csv", summary.str());

  // Reference cut values for the min-cut figure.
  std::map<std::string, std::string> mincut_inputs;
  for (const BenchRun& run : suite.runs) {
    if (run.spec.problem == ProblemKind::kMinCut) {
      mincut_inputs.emplace(run.dataset, run.spec.input);
    }
  }
  for (const auto& [dataset, input] : mincut_inputs) {
    try {
      const FlowInstance network = LoadDimacs(input);
      const auto start = std::chrono::steady_clock::now();
      const CutResult cut = EdmondsKarp(network);
      const double elapsed =
          options.record_time
              ? std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count()
              : 0.0;
      WriteText(fs::path(out_dir) /
                    ("mincut__reference__" + dataset + ".csv"),
                "dataset,reference_value,flow_elapsed_s\n" + dataset + ',' +
                    FormatReal(cut.value) + ',' + FormatReal(elapsed) + '\n');
    } catch (const std::exception&) {
      // The failing mincut runs are already recorded in summary.csv.
    }
  }
  return records;
}

}  // namespace ratioforge
