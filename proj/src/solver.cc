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


#include "secgame/solver.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "certificate_util.h"
#include "secgame/attacker_solver.h"
#include "secgame/defender_solver.h"
#include "secgame/strategy_lift.h"
#include "secgame/tolerance.h"

namespace secgame {
namespace {

constexpr double kSupportTolerance = 1e-12;

// Solution on the positive-cost targets, in their sorted order.
struct ReducedSolution {
  double value = 0.0;
  std::vector<double> alpha;
  std::vector<double> beta;
  bool structural = false;  // came from the table searches
  CandidateCell cell;
};

double SumRange(std::span<const double> costs, int lo, int hi) {
  long double sum = 0;
  for (int j = lo; j < hi; ++j) sum += costs[j];
  return static_cast<double>(sum);
}

ReducedSolution SolveReduced(const GameInstance& game, SolveStats& stats) {
  const int m = game.num_targets();
  const int ka = game.attack_budget();
  const int kd = game.defense_budget();
  const int n = m - kd;
  const auto costs = game.costs();
  ReducedSolution out;
  out.alpha.assign(m, 0.0);
  out.beta.assign(m, 0.0);
  auto fill = [](std::vector<double>& v, int lo, int hi, double x) {
    std::fill(v.begin() + lo, v.begin() + hi, x);
  };

  if (ka == 0) {
    fill(out.beta, 0, n, 1.0);
  } else if (kd == m) {
    fill(out.alpha, m - ka, m, 1.0);
  } else if (kd == 0) {
    fill(out.alpha, m - ka, m, 1.0);
    fill(out.beta, 0, m, 1.0);
    out.value = SumRange(costs, m - ka, m);
  } else if (ka == m) {
    fill(out.alpha, 0, m, 1.0);
    fill(out.beta, 0, n, 1.0);
    out.value = SumRange(costs, 0, n);
  } else {
    AttackerSearchStats attacker_stats;
    DefenderSearchStats defender_stats;
    AttackerSolution attacker = SolveAttacker(game, &attacker_stats);
    DefenderSolution defender = SolveDefender(game, &defender_stats);
    stats.cells_u = attacker_stats.ui_cells;
    stats.cells_uii = attacker_stats.uii_cells;
    stats.cells_w = defender_stats.w_cells;
    stats.attacker_value = attacker.value;
    stats.defender_value = defender.value;
    if (!RelativelyClose(attacker.value, defender.value, kCrossCheckTolerance)) {
      throw Error(ErrorCode::kNumericalFailure,
                  "attacker value " + std::to_string(attacker.value) +
                      " and defender value " + std::to_string(defender.value) +
                      " disagree");
    }
    out.value = attacker.value;
    out.alpha.assign(attacker.alpha.values().begin(),
                     attacker.alpha.values().end());
    out.beta.assign(defender.beta.values().begin(),
                    defender.beta.values().end());
    out.structural = true;
    out.cell = attacker.cell;
    return out;
  }
  stats.attacker_value = out.value;
  stats.defender_value = out.value;
  return out;
}

}  // namespace

SaddleCertificate SolveGame(const GameInstance& game,
                            const SolveOptions& options, SolveStats* stats) {
  const int m = game.num_targets();
  const int ka = game.attack_budget();
  const int kd = game.defense_budget();
  const auto costs = game.costs();
  const int zeros = static_cast<int>(
      std::count_if(costs.begin(), costs.end(), [](double c) { return c == 0; }));
  const int positive = m - zeros;
  const int ka_r = std::min(ka, positive);
  const int kd_r = std::min(kd, positive);

  SolveStats local;
  ReducedSolution reduced;
  if (positive > 0) {
    GameInstance sub(std::vector<double>(costs.begin() + zeros, costs.end()),
                     ka_r, kd_r, internal::IdentityPerm(positive));
    reduced = SolveReduced(sub, local);
  }

  // Budget the positive targets cannot absorb is spread over the zeros.
  std::vector<double> alpha(m), beta(m);
  const double zero_attack = zeros > 0 ? double(ka - ka_r) / zeros : 0.0;
  const double zero_open = zeros > 0 ? 1.0 - double(kd - kd_r) / zeros : 0.0;
  for (int j = 0; j < m; ++j) {
    alpha[j] = j < zeros ? zero_attack : reduced.alpha[j - zeros];
    beta[j] = j < zeros ? zero_open : reduced.beta[j - zeros];
  }

  SaddleCertificate cert;
  cert.value = reduced.value;
  cert.method = SolveMethod::kLinear;
  if (reduced.structural) {
    const int s = reduced.cell.s;
    const int first_attacked = s - reduced.cell.r;
    const int n_r = positive - kd_r;
    cert.s_star = s + zeros;
    cert.r_star = reduced.cell.r;
    cert.defender_pure = s > n_r;
    const int first_defended = cert.defender_pure ? n_r + 1 : s;
    for (int j = first_attacked; j <= positive; ++j) {
      cert.attacker_active.push_back(game.original_index(zeros + j - 1));
    }
    for (int j = first_defended; j <= positive; ++j) {
      cert.defender_active.push_back(game.original_index(zeros + j - 1));
    }
    std::sort(cert.attacker_active.begin(), cert.attacker_active.end());
    std::sort(cert.defender_active.begin(), cert.defender_active.end());
  } else {
    const AttackStructure st = internal::ClampedStructure(alpha, game, cert.value);
    cert.s_star = st.s;
    cert.r_star = st.r;
    cert.defender_pure = std::all_of(beta.begin(), beta.end(), [](double b) {
      return b < kSupportTolerance || b > 1.0 - kSupportTolerance;
    });
  }
  // A game nobody can score in has no active targets.
  if (!reduced.structural && cert.value > 0) {
    cert.attacker_active = internal::SupportIds(
        alpha, game, [](double a) { return a > kSupportTolerance; });
    cert.defender_active = internal::SupportIds(
        beta, game, [](double b) { return b < 1.0 - kSupportTolerance; });
  }

  const MarginalVector sorted_alpha(alpha, ka);
  const MarginalVector sorted_beta(beta, m - kd);
  cert.alpha = MarginalVector(game.ToOriginalOrder(alpha), ka);
  cert.beta = MarginalVector(game.ToOriginalOrder(beta), m - kd);
  if (options.with_strategies) {
    cert.attacker_strategy = LiftMarginal(sorted_alpha, ka).Relabel(game.perm());
    cert.defender_strategy =
        LiftDefender(sorted_beta, kd, m).Relabel(game.perm());
  }
  if (stats != nullptr) *stats = local;
  return cert;
}

}  // namespace secgame
