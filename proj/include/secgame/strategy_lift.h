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


#ifndef SECGAME_STRATEGY_LIFT_H_
#define SECGAME_STRATEGY_LIFT_H_

#include <cstdint>

#include "secgame/game.h"

namespace secgame {

// Mixed strategy over k-subsets whose membership marginals equal `marginal`.
// Systematic sweep: at most m atoms. Indices follow the marginal's own
// order. Throws kInfeasibleMarginal if the entries do not sum to k.
SparseMixedStrategy LiftMarginal(const MarginalVector& marginal, int k);

// Mixed strategy over protection sets of size k_d whose non-protection
// marginals equal `beta`.
SparseMixedStrategy LiftDefender(const MarginalVector& beta, int k_d, int m);

struct SaddleVerdict {
  bool pass = false;
  // min over pure defenses of the payoff under p, and the defense reaching it
  double attacker_guarantee = 0.0;
  TargetSubset worst_defense;
  // max over pure attacks of the payoff under q, and the attack reaching it
  double defender_guarantee = 0.0;
  TargetSubset best_attack;
};

inline constexpr std::int64_t kDefaultVerifyCap = 1'000'000;

// Checks both saddle inequalities by enumerating pure actions. Strategy
// indices are in the instance's sorted order. Throws kScaleLimit when
// C(m, k_a) or C(m, k_d) exceeds `cap`.
SaddleVerdict VerifySaddle(const SparseMixedStrategy& p,
                           const SparseMixedStrategy& q, double value,
                           const GameInstance& game, double tol,
                           std::int64_t cap = kDefaultVerifyCap);

// C(n, k), saturating at INT64_MAX.
std::int64_t BinomialCapped(int n, int k);

}  // namespace secgame

#endif  // SECGAME_STRATEGY_LIFT_H_
