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


#include "secgame/bench.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>

#include "secgame/errors.h"
#include "secgame/game.h"
#include "secgame/io.h"
#include "secgame/oracle.h"
#include "secgame/solver.h"

namespace secgame {
namespace {

std::uint64_t SplitMix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Uniform on (0, 1] from the top 53 bits.
double UnitOpenBelow(std::mt19937_64& rng) {
  return 1.0 - static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::vector<double> GenerateCosts(int m, CostDistribution dist,
                                  std::uint64_t seed, int trial) {
  std::uint64_t state = seed;
  state ^= SplitMix64(state) + static_cast<std::uint64_t>(m);
  state ^= SplitMix64(state) + static_cast<std::uint64_t>(trial);
  std::mt19937_64 rng(SplitMix64(state));
  std::vector<double> costs(m);
  for (double& c : costs) {
    if (dist == CostDistribution::kUniform) {
      c = UnitOpenBelow(rng);
    } else {
      const double u1 = UnitOpenBelow(rng);
      const double u2 = UnitOpenBelow(rng);
      c = std::exp(std::sqrt(-2.0 * std::log(u1)) *
                   std::cos(2.0 * std::numbers::pi * u2));
    }
  }
  return costs;
}

int BudgetFor(int m, const std::optional<double>& frac) {
  if (!frac) return (m + 9) / 10;
  if (!(*frac >= 0.0 && *frac <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "budget fraction outside [0, 1]");
  }
  const int k = static_cast<int>(std::ceil(*frac * m - 1e-9));
  return std::clamp(k, 0, m);
}

std::vector<BenchRow> RunBench(const BenchOptions& options, std::ostream& log) {
  if (options.trials < 1) {
    throw Error(ErrorCode::kInvalidArgument, "trials must be positive");
  }
  std::vector<int> sizes = options.m_list;
  std::sort(sizes.begin(), sizes.end());
  std::vector<BenchRow> rows;
  for (int m : sizes) {
    if (m < 1) throw Error(ErrorCode::kInvalidArgument, "m must be positive");
    const int ka = BudgetFor(m, options.ka_frac);
    const int kd = BudgetFor(m, options.kd_frac);
    BenchRow row;
    row.m = m;
    std::vector<std::int64_t> times;
    bool oracle_complete = options.with_oracle;
    double max_dv = 0.0;
    for (int trial = 0; trial < options.trials; ++trial) {
      const std::vector<double> costs =
          GenerateCosts(m, options.dist, options.seed, trial);
      const auto start = std::chrono::steady_clock::now();
      const GameInstance game = Normalize(costs, ka, kd);
      SolveStats stats;
      const SaddleCertificate cert = SolveGame(game, {}, &stats);
      const auto stop = std::chrono::steady_clock::now();
      times.push_back(options.no_timing
                          ? 0
                          : std::chrono::duration_cast<std::chrono::nanoseconds>(
                                stop - start)
                                .count());
      row.cells_u = std::max(row.cells_u, stats.cells_u);
      row.cells_w = std::max(row.cells_w, stats.cells_w);
      if (oracle_complete) {
        try {
          const SaddleCertificate oracle =
              OracleCertificate(game, {options.cap, options.exact, false});
          max_dv = std::max(max_dv, std::abs(cert.value - oracle.value));
        } catch (const Error& e) {
          if (e.code() != ErrorCode::kScaleLimit) throw;
          log << "notice: oracle comparison skipped for m=" << m << " ("
              << e.what() << ")\n";
          oracle_complete = false;
        }
      }
    }
    std::sort(times.begin(), times.end());
    const std::size_t n = times.size();
    row.median_ns = times[(n - 1) / 2];
    row.p90_ns = times[static_cast<std::size_t>(std::ceil(0.9 * n)) - 1];
    if (oracle_complete) row.max_abs_dv = max_dv;
    rows.push_back(row);
  }
  return rows;
}

std::string FormatBenchCsv(const std::vector<BenchRow>& rows,
                           bool with_oracle) {
  std::string out = "m,median_ns,p90_ns,cells_U,cells_W";
  if (with_oracle) out += ",max_abs_dv";
  out += '\n';
  for (const BenchRow& row : rows) {
    out += std::to_string(row.m) + ',' + std::to_string(row.median_ns) + ',' +
           std::to_string(row.p90_ns) + ',' + std::to_string(row.cells_u) + ',' +
           std::to_string(row.cells_w);
    if (with_oracle) {
      out += ',';
      out += row.max_abs_dv ? FormatDouble(*row.max_abs_dv) : "NA";
    }
    out += '\n';
  }
  return out;
}

}  // namespace secgame
