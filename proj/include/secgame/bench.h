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


#ifndef SECGAME_BENCH_H_
#define SECGAME_BENCH_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace secgame {

enum class CostDistribution { kUniform, kLognormal };

// Costs for one benchmark instance; the stream depends only on
// (seed, m, trial). Uniform draws lie in (0, 1].
std::vector<double> GenerateCosts(int m, CostDistribution dist,
                                  std::uint64_t seed, int trial);

struct BenchOptions {
  std::vector<int> m_list;
  int trials = 5;
  std::uint64_t seed = 1;
  CostDistribution dist = CostDistribution::kUniform;
  std::optional<double> ka_frac;  // default ceil(m / 10)
  std::optional<double> kd_frac;
  bool with_oracle = false;
  std::int64_t cap = 10'000'000;
  bool exact = false;
  bool no_timing = false;
};

// Budget for a fraction of m, rounded up and clamped to [0, m].
int BudgetFor(int m, const std::optional<double>& frac);

struct BenchRow {
  int m = 0;
  std::int64_t median_ns = 0;
  std::int64_t p90_ns = 0;
  std::int64_t cells_u = 0;  // max over trials
  std::int64_t cells_w = 0;
  std::optional<double> max_abs_dv;  // set when the oracle ran on all trials
};

// Runs the sweep; notices (skipped oracle comparisons) go to `log`.
std::vector<BenchRow> RunBench(const BenchOptions& options, std::ostream& log);

std::string FormatBenchCsv(const std::vector<BenchRow>& rows,
                           bool with_oracle);

}  // namespace secgame

#endif  // SECGAME_BENCH_H_
