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


#ifndef SECGAME_SRC_CERTIFICATE_UTIL_H_
#define SECGAME_SRC_CERTIFICATE_UTIL_H_

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "secgame/game.h"

namespace secgame::internal {

// Structural indices read from sorted attack marginals, clamped into the
// table's index range.
inline AttackStructure ClampedStructure(std::span<const double> sorted_alpha,
                                        const GameInstance& game,
                                        double value) {
  AttackStructure st = ReadAttackStructure(
      sorted_alpha, game.costs(), 1e-9 * std::max(1.0, std::abs(value)));
  const int k = std::max(
      1, std::max(game.attack_budget(), game.uncovered_count()));
  st.s = std::clamp(st.s, 1, k);
  st.r = std::clamp(st.r, 0, st.s - 1);
  return st;
}

// Original ids (ascending) of sorted positions j with keep(values[j]).
template <typename Pred>
std::vector<int> SupportIds(std::span<const double> sorted_values,
                            const GameInstance& game, Pred keep) {
  std::vector<int> ids;
  for (int j = 0; j < static_cast<int>(sorted_values.size()); ++j) {
    if (keep(sorted_values[j])) ids.push_back(game.original_index(j));
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

inline std::vector<int> IdentityPerm(int m) {
  std::vector<int> perm(m);
  for (int j = 0; j < m; ++j) perm[j] = j;
  return perm;
}

}  // namespace secgame::internal

#endif  // SECGAME_SRC_CERTIFICATE_UTIL_H_
