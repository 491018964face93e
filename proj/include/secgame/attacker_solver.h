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


#ifndef SECGAME_ATTACKER_SOLVER_H_
#define SECGAME_ATTACKER_SOLVER_H_

#include <cstdint>
#include <vector>

#include "secgame/game.h"

namespace secgame {

enum class CellFamily { kUI, kUII, kDiagonal };

// One entry of the attacker's U table. Row i and offset r are 1-based /
// 0-based as in the table layout: s = k - i + 1 with k = max(k_a, m - k_d),
// and the cell mixes targets s - r .. m.
struct CandidateCell {
  int i = 0;
  int r = 0;
  int s = 0;
  double c = 0.0;      // sum of 1/phi_j over j = s..m
  int tail_count = 0;  // t = m - k_d - s + 1, may be <= 0
  double value = 0.0;
  CellFamily family = CellFamily::kDiagonal;
  bool feasible = false;
};

struct AttackerSolution {
  double value = 0.0;
  MarginalVector alpha;  // sorted order
  CandidateCell cell;
};

struct AttackerSearchStats {
  std::int64_t ui_cells = 0;   // staircase visits, diagonal included
  std::int64_t uii_cells = 0;  // one probe per row at most
};

// Single-cell evaluation. The instance must have strictly positive costs.
// Throws kIndexOutOfRange unless 1 <= i <= k and 0 <= r <= s - 1.
// r = 0 yields the diagonal cell.
CandidateCell CellValueUI(int i, int r, const GameInstance& game);
// r = 0 yields the diagonal cell. Rows with t <= 0 carry no U^II entry
// (reported infeasible).
CandidateCell CellValueUII(int i, int r, const GameInstance& game);

// Staircase search over the U table. Requires positive costs,
// 1 <= k_a <= m - 1 and 1 <= k_d <= m - 1 (kInvalidArgument otherwise).
AttackerSolution SolveAttacker(const GameInstance& game,
                               AttackerSearchStats* stats = nullptr);

// Marginals of the cell's attacker strategy, in sorted order.
std::vector<double> CellAlpha(const CandidateCell& cell,
                              const GameInstance& game);

struct ActiveSets {
  std::vector<int> attacker;  // original ids, ascending
  std::vector<int> defender;
  bool defender_pure = false;
};

ActiveSets ComputeActiveSets(const AttackerSolution& solution,
                             const GameInstance& game);

}  // namespace secgame

#endif  // SECGAME_ATTACKER_SOLVER_H_
