// Copyright 2026 The secgame Authors.
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


// Command-line front end: solve, verify and bench.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "secgame/bench.h"
#include "secgame/errors.h"
#include "secgame/game.h"
#include "secgame/io.h"
#include "secgame/oracle.h"
#include "secgame/solver.h"
#include "secgame/strategy_lift.h"
#include "secgame/tolerance.h"

namespace secgame {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitScale = 3;
constexpr int kExitCrossCheck = 4;

int ExitCodeFor(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kScaleLimit:
      return kExitScale;
    case ErrorCode::kNumericalFailure:
    case ErrorCode::kNoFeasibleCell:
      return kExitCrossCheck;
    default:
      return kExitParse;
  }
}

void Emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
  } else {
    WriteTextFile(path, text);
  }
}

GameInstance LoadInstance(const std::string& path) {
  const InstanceData data = ParseInstance(ReadTextFile(path));
  return Normalize(data.costs, data.attack_budget, data.defense_budget);
}

struct SolveArgs {
  std::string input;
  std::string output;
  std::string mode = "fast";
  bool strategies = false;
  std::int64_t cap = kDefaultMatrixCap;
  bool exact = false;
  bool no_timing = false;
};

int RunSolve(const SolveArgs& args) {
  const GameInstance game = LoadInstance(args.input);
  const auto start = std::chrono::steady_clock::now();
  std::optional<SaddleCertificate> fast;
  std::optional<SaddleCertificate> oracle;
  if (args.mode != "oracle") {
    fast = SolveGame(game, {args.strategies});
  }
  if (args.mode != "fast") {
    oracle = OracleCertificate(game, {args.cap, args.exact, args.strategies});
  }
  const auto stop = std::chrono::steady_clock::now();
  const std::int64_t runtime =
      args.no_timing
          ? 0
          : std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start)
                .count();

  int code = kExitOk;
  if (fast && oracle) {
    const double gap = std::abs(fast->value - oracle->value);
    std::fprintf(stderr, "discrepancy: %.3e (fast %s, oracle %s)\n", gap,
                 FormatDouble(fast->value).c_str(),
                 FormatDouble(oracle->value).c_str());
    if (!RelativelyClose(fast->value, oracle->value, 1e-8)) {
      code = kExitCrossCheck;
    }
  }
  Emit(args.output, EmitCertificate(fast ? *fast : *oracle, runtime));
  return code;
}

struct VerifyArgs {
  std::string input;
  std::string certificate;
  double tol = 1e-9;
  std::int64_t cap = kDefaultVerifyCap;
};

std::string FormatIds(const TargetSubset& subset, const GameInstance& game) {
  std::string out = "{";
  std::vector<int> ids;
  for (int j : subset.members()) ids.push_back(game.original_index(j) + 1);
  std::sort(ids.begin(), ids.end());
  for (std::size_t a = 0; a < ids.size(); ++a) {
    if (a > 0) out += ",";
    out += std::to_string(ids[a]);
  }
  return out + "}";
}

int RunVerify(const VerifyArgs& args) {
  const GameInstance game = LoadInstance(args.input);
  const CertificateRecord record =
      ParseCertificate(ReadTextFile(args.certificate));
  const SaddleCertificate& cert = record.certificate;
  if (!cert.attacker_strategy || !cert.defender_strategy) {
    throw Error(ErrorCode::kParseError,
                "certificate carries no strategies (solve with --strategies)");
  }
  const std::vector<int> to_sorted = game.InversePerm();
  for (const auto* strategy : {&*cert.attacker_strategy, &*cert.defender_strategy}) {
    for (const StrategyAtom& atom : strategy->atoms()) {
      if (!atom.subset.members().empty() &&
          atom.subset.members().back() >= game.num_targets()) {
        throw Error(ErrorCode::kIndexOutOfRange, "strategy names an unknown target");
      }
    }
  }
  const SaddleVerdict verdict = VerifySaddle(
      cert.attacker_strategy->Relabel(to_sorted),
      cert.defender_strategy->Relabel(to_sorted), cert.value, game, args.tol,
      args.cap);
  std::printf("value: %s\n", FormatDouble(cert.value).c_str());
  std::printf("attacker guarantee: %s (worst defense %s)\n",
              FormatDouble(verdict.attacker_guarantee).c_str(),
              FormatIds(verdict.worst_defense, game).c_str());
  std::printf("defender guarantee: %s (best attack %s)\n",
              FormatDouble(verdict.defender_guarantee).c_str(),
              FormatIds(verdict.best_attack, game).c_str());
  std::printf("verdict: %s\n", verdict.pass ? "pass" : "fail");
  return verdict.pass ? kExitOk : kExitFail;
}

struct BenchArgs {
  std::string m_list;
  std::string output;
  int trials = 5;
  std::uint64_t seed = 1;
  std::string dist = "uniform";
  std::optional<double> ka_frac;
  std::optional<double> kd_frac;
  bool with_oracle = false;
  std::int64_t cap = kDefaultMatrixCap;
  bool exact = false;
  bool no_timing = false;
};

std::vector<int> ParseIntList(const std::string& text) {
  std::vector<int> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size() || v < 1 || v > 100'000'000) throw std::out_of_range(item);
      values.push_back(static_cast<int>(v));
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParseError, "bad --m-list entry \"" + item + "\"");
    }
  }
  if (values.empty()) throw Error(ErrorCode::kParseError, "empty --m-list");
  return values;
}

int RunBenchCommand(const BenchArgs& args) {
  BenchOptions options;
  options.m_list = ParseIntList(args.m_list);
  options.trials = args.trials;
  options.seed = args.seed;
  options.dist = args.dist == "lognormal" ? CostDistribution::kLognormal
                                          : CostDistribution::kUniform;
  options.ka_frac = args.ka_frac;
  options.kd_frac = args.kd_frac;
  options.with_oracle = args.with_oracle;
  options.cap = args.cap;
  options.exact = args.exact;
  options.no_timing = args.no_timing;
  const std::vector<BenchRow> rows = RunBench(options, std::cerr);
  for (const BenchRow& row : rows) {
    std::fprintf(stderr, "m=%d  median %.3f ms  p90 %.3f ms  cells U %lld  W %lld\n",
                 row.m, row.median_ns * 1e-6, row.p90_ns * 1e-6,
                 static_cast<long long>(row.cells_u),
                 static_cast<long long>(row.cells_w));
  }
  Emit(args.output, FormatBenchCsv(rows, options.with_oracle));
  return kExitOk;
}

}  // namespace
}  // namespace secgame

int main(int argc, char** argv) {
  using namespace secgame;
  CLI::App app{"Saddle-point solver for security games with additive utility"};
  app.require_subcommand(1);

  SolveArgs solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve an instance");
  solve_cmd->add_option("--input", solve.input, "Instance JSON")->required();
  solve_cmd->add_option("--output", solve.output, "Certificate path (default stdout)");
  solve_cmd->add_option("--mode", solve.mode, "fast, oracle or both")
      ->check(CLI::IsMember({"fast", "oracle", "both"}));
  solve_cmd->add_flag("--strategies", solve.strategies, "Emit mixed strategies");
  solve_cmd->add_option("--cap", solve.cap, "Payoff matrix entry cap");
  solve_cmd->add_flag("--exact", solve.exact, "Rational LP oracle");
  solve_cmd->add_flag("--no-timing", solve.no_timing, "Write runtime_ns as 0");

  VerifyArgs verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Check a certificate's saddle inequalities");
  verify_cmd->add_option("--input", verify.input, "Instance JSON")->required();
  verify_cmd->add_option("--certificate", verify.certificate, "Certificate JSON")
      ->required();
  verify_cmd->add_option("--tol", verify.tol, "Absolute tolerance");
  verify_cmd->add_option("--cap", verify.cap, "Pure-action enumeration cap");

  BenchArgs bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Scaling benchmark");
  bench_cmd->add_option("--m-list", bench.m_list, "Comma-separated sizes")
      ->required();
  bench_cmd->add_option("--output", bench.output, "CSV path (default stdout)");
  bench_cmd->add_option("--trials", bench.trials, "Instances per size");
  bench_cmd->add_option("--seed", bench.seed, "Seed");
  bench_cmd->add_option("--dist", bench.dist, "uniform or lognormal")
      ->check(CLI::IsMember({"uniform", "lognormal"}));
  bench_cmd->add_option("--ka-frac", bench.ka_frac, "Attack budget / m");
  bench_cmd->add_option("--kd-frac", bench.kd_frac, "Defense budget / m");
  bench_cmd->add_flag("--with-oracle", bench.with_oracle, "Compare with the LP oracle");
  bench_cmd->add_option("--cap", bench.cap, "Payoff matrix entry cap");
  bench_cmd->add_flag("--exact", bench.exact, "Rational LP oracle");
  bench_cmd->add_flag("--no-timing", bench.no_timing, "Write timings as 0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (*solve_cmd) return RunSolve(solve);
    if (*verify_cmd) return RunVerify(verify);
    return RunBenchCommand(bench);
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return ExitCodeFor(e);
  }
}
