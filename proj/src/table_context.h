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


#ifndef SECGAME_SRC_TABLE_CONTEXT_H_
#define SECGAME_SRC_TABLE_CONTEXT_H_

#include <algorithm>
#include <vector>

#include "secgame/errors.h"
#include "secgame/game.h"

namespace secgame::internal {

// Costs in 1-based sorted order with phi(0) = 0, plus long double prefix
// sums, shared by both table searches.
class TableContext {
 public:
  explicit TableContext(const GameInstance& game)
      : m_(game.num_targets()),
        ka_(game.attack_budget()),
        kd_(game.defense_budget()),
        phi_(m_ + 1, 0.0),
        prefix_(m_ + 1, 0.0L) {
    for (int j = 1; j <= m_; ++j) {
      phi_[j] = game.cost(j - 1);
      if (!(phi_[j] > 0)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "table search needs strictly positive costs");
      }
      prefix_[j] = prefix_[j - 1] + phi_[j];
    }
  }

  int m() const { return m_; }
  int ka() const { return ka_; }
  int kd() const { return kd_; }
  int n() const { return m_ - kd_; }
  int k() const { return std::max(ka_, m_ - kd_); }

  double phi(int j) const { return phi_[j]; }
  // Sum of phi_lo .. phi_hi, zero when the range is empty.
  double RangeSum(int lo, int hi) const {
    if (hi < lo) return 0.0;
    return static_cast<double>(prefix_[hi] - prefix_[lo - 1]);
  }
  // Sum of 1/phi_j for j = s..m, computed directly.
  long double TailReciprocal(int s) const {
    long double c = 0;
    for (int j = m_; j >= s; --j) c += 1.0L / phi_[j];
    return c;
  }

 private:
  int m_;
  int ka_;
  int kd_;
  std::vector<double> phi_;
  std::vector<long double> prefix_;
};

inline void RequireNondegenerate(const GameInstance& game) {
  const int m = game.num_targets();
  if (game.attack_budget() < 1 || game.attack_budget() > m - 1 ||
      game.defense_budget() < 1 || game.defense_budget() > m - 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "table search needs 1 <= k_a, k_d <= m - 1");
  }
}

}  // namespace secgame::internal

#endif  // SECGAME_SRC_TABLE_CONTEXT_H_
