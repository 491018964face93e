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


#include "secgame/strategy_lift.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

#include "combinations.h"

namespace secgame {
namespace {

struct SweepEvent {
  long double position;
  int target;  // 0-based; the point moves on to target + 1
  int point;
};

}  // namespace

SparseMixedStrategy LiftMarginal(const MarginalVector& marginal, int k) {
  const int m = marginal.size();
  if (k < 0 || k > m) {
    throw Error(ErrorCode::kInfeasibleMarginal,
                "subset size " + std::to_string(k) + " outside [0, " +
                    std::to_string(m) + "]");
  }
  const double sum = marginal.Sum();
  if (std::abs(sum - k) > MarginalVector::kSumTolerance * std::max(1, m)) {
    throw Error(ErrorCode::kInfeasibleMarginal,
                "marginals sum to " + std::to_string(sum) + ", expected " +
                    std::to_string(k));
  }
  if (k == 0) {
    return SparseMixedStrategy({{TargetSubset(), 1.0}}, 0);
  }

  std::vector<long double> prefix(m + 1, 0.0L);
  for (int j = 0; j < m; ++j) {
    prefix[j + 1] = prefix[j] + std::clamp(marginal[j], 0.0, 1.0);
  }
  const long double scale = k / prefix[m];
  for (long double& p : prefix) p *= scale;
  prefix[m] = k;

  // Point l + u (u in [0, 1)) is held by target j when
  // prefix[j] <= l + u < prefix[j + 1].
  std::vector<int> holders(k);
  for (int point = 0, j = 0; point < k; ++point) {
    while (j < m - 1 && prefix[j + 1] <= point) ++j;
    holders[point] = j;
  }
  std::vector<SweepEvent> events;
  for (int j = 0; j + 1 < m; ++j) {
    const long double whole = std::floor(prefix[j + 1]);
    const long double frac = prefix[j + 1] - whole;
    if (frac > 0 && whole < k) {
      events.push_back({frac, j, static_cast<int>(whole)});
    }
  }
  std::sort(events.begin(), events.end(),
            [](const SweepEvent& a, const SweepEvent& b) {
              return std::tie(a.position, a.target) <
                     std::tie(b.position, b.target);
            });

  std::vector<std::vector<int>> subsets;
  std::vector<long double> weights;
  auto emit = [&](long double weight) {
    std::vector<int> members = holders;
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
      return;
    }
    subsets.push_back(std::move(members));
    weights.push_back(weight);
  };

  long double previous = 0;
  for (std::size_t e = 0; e < events.size();) {
    const long double position = events[e].position;
    if (position > previous) emit(position - previous);
    for (; e < events.size() && events[e].position == position; ++e) {
      holders[events[e].point] = events[e].target + 1;
    }
    previous = position;
  }
  if (previous < 1) emit(1 - previous);
  if (subsets.empty()) {
    throw Error(ErrorCode::kInfeasibleMarginal, "sweep produced no atoms");
  }

  long double total = 0;
  for (long double w : weights) total += w;
  std::vector<StrategyAtom> atoms;
  atoms.reserve(subsets.size());
  for (std::size_t a = 0; a < subsets.size(); ++a) {
    atoms.push_back({TargetSubset(std::move(subsets[a])),
                     static_cast<double>(weights[a] / total)});
  }
  return SparseMixedStrategy(std::move(atoms), k);
}

SparseMixedStrategy LiftDefender(const MarginalVector& beta, int k_d, int m) {
  if (beta.size() != m) {
    throw Error(ErrorCode::kInfeasibleMarginal,
                "beta has " + std::to_string(beta.size()) + " entries, m = " +
                    std::to_string(m));
  }
  std::vector<double> protection(m);
  for (int j = 0; j < m; ++j) protection[j] = std::clamp(1.0 - beta[j], 0.0, 1.0);
  return LiftMarginal(MarginalVector(std::move(protection), k_d), k_d);
}

std::int64_t BinomialCapped(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
  std::int64_t result = 1;
  for (int j = 1; j <= k; ++j) {
    // result * (n - k + j) / j is an integer; divide first to stay in range.
    const std::int64_t g = std::gcd(result, static_cast<std::int64_t>(j));
    const std::int64_t factor = (n - k + j) / (j / g);
    result /= g;
    if (result > kMax / factor) return kMax;
    result *= factor;
  }
  return result;
}

SaddleVerdict VerifySaddle(const SparseMixedStrategy& p,
                           const SparseMixedStrategy& q, double value,
                           const GameInstance& game, double tol,
                           std::int64_t cap) {
  const int m = game.num_targets();
  const int ka = game.attack_budget();
  const int kd = game.defense_budget();
  if (p.subset_size() != ka || q.subset_size() != kd) {
    throw Error(ErrorCode::kCardinalityMismatch,
                "strategy subset sizes do not match the budgets");
  }
  for (auto [n_actions, label] :
       {std::pair{BinomialCapped(m, ka), "attack"},
        std::pair{BinomialCapped(m, kd), "defense"}}) {
    if (n_actions > cap) {
      throw Error(ErrorCode::kScaleLimit,
                  std::string(label) + " enumeration of " +
                      std::to_string(n_actions) + " actions exceeds cap " +
                      std::to_string(cap));
    }
  }

  const MarginalVector alpha = MarginalOfStrategy(p, m, false);
  const MarginalVector beta = MarginalOfStrategy(q, m, true);
  std::vector<double> attack_weight(m), open_weight(m);
  long double attack_total = 0;
  for (int j = 0; j < m; ++j) {
    attack_weight[j] = alpha[j] * game.cost(j);
    open_weight[j] = beta[j] * game.cost(j);
    attack_total += attack_weight[j];
  }

  SaddleVerdict verdict;
  verdict.attacker_guarantee = std::numeric_limits<double>::infinity();
  internal::CombinationWalker defenses(m, kd);
  do {
    long double covered = 0;
    for (int j : defenses.current()) covered += attack_weight[j];
    const double payoff = static_cast<double>(attack_total - covered);
    if (payoff < verdict.attacker_guarantee) {
      verdict.attacker_guarantee = payoff;
      verdict.worst_defense = TargetSubset(defenses.current());
    }
  } while (defenses.Next());

  verdict.defender_guarantee = -std::numeric_limits<double>::infinity();
  internal::CombinationWalker attacks(m, ka);
  do {
    long double gain = 0;
    for (int j : attacks.current()) gain += open_weight[j];
    const double payoff = static_cast<double>(gain);
    if (payoff >= verdict.defender_guarantee) {
      verdict.defender_guarantee = payoff;
      verdict.best_attack = TargetSubset(attacks.current());
    }
  } while (attacks.Next());

  verdict.pass = verdict.attacker_guarantee >= value - tol &&
                 verdict.defender_guarantee <= value + tol;
  return verdict;
}

}  // namespace secgame
