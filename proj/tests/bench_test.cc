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


#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "secgame/bench.h"
#include "secgame/errors.h"

namespace secgame {
namespace {

TEST_CASE("generated costs are reproducible and in range") {
  const auto a = GenerateCosts(1000, CostDistribution::kUniform, 7, 0);
  CHECK(a == GenerateCosts(1000, CostDistribution::kUniform, 7, 0));
  CHECK(a != GenerateCosts(1000, CostDistribution::kUniform, 7, 1));
  CHECK(a != GenerateCosts(1000, CostDistribution::kUniform, 8, 0));
  for (double c : a) {
    CHECK(c > 0);
    CHECK(c <= 1);
  }
  const auto b = GenerateCosts(500, CostDistribution::kLognormal, 7, 0);
  for (double c : b) CHECK(c > 0);
}

TEST_CASE("budget fractions") {
  CHECK(BudgetFor(1000, std::nullopt) == 100);
  CHECK(BudgetFor(11, std::nullopt) == 2);
  CHECK(BudgetFor(10, 0.5) == 5);
  CHECK(BudgetFor(10, 0.55) == 6);
  CHECK(BudgetFor(10, 1.0) == 10);
  CHECK_THROWS_AS(BudgetFor(10, 1.5), Error);
}

TEST_CASE("bench rows respect the work bounds") {
  BenchOptions options;
  options.m_list = {2000, 1000};
  options.trials = 5;
  options.seed = 7;
  std::ostringstream log;
  const auto rows = RunBench(options, log);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].m == 1000);
  for (const BenchRow& row : rows) {
    const int k = std::max(BudgetFor(row.m, std::nullopt),
                           row.m - BudgetFor(row.m, std::nullopt));
    CHECK(row.cells_u <= 2 * k);
    CHECK(row.cells_w <= 4 * row.m);
    CHECK(row.median_ns <= row.p90_ns);
  }
  const std::string csv = FormatBenchCsv(rows, false);
  CHECK(csv.rfind("m,median_ns,p90_ns,cells_U,cells_W\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
}

TEST_CASE("bench oracle column and determinism") {
  BenchOptions options;
  options.m_list = {10};
  options.trials = 3;
  options.seed = 1;
  options.with_oracle = true;
  options.no_timing = true;
  std::ostringstream log;
  const auto rows = RunBench(options, log);
  REQUIRE(rows[0].max_abs_dv.has_value());
  CHECK(*rows[0].max_abs_dv <= 1e-8);
  const std::string csv = FormatBenchCsv(rows, true);
  CHECK(csv == FormatBenchCsv(RunBench(options, log), true));
  CHECK(csv.find("max_abs_dv") != std::string::npos);

  options.m_list = {40};
  options.kd_frac = 0.5;
  options.ka_frac = 0.5;
  const auto skipped = RunBench(options, log);
  CHECK_FALSE(skipped[0].max_abs_dv.has_value());
  CHECK(log.str().find("skipped") != std::string::npos);
  CHECK(FormatBenchCsv(skipped, true).find(",NA\n") != std::string::npos);
}

}  // namespace
}  // namespace secgame
