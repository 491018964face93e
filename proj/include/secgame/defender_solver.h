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


#ifndef SECGAME_DEFENDER_SOLVER_H_
#define SECGAME_DEFENDER_SOLVER_H_

#include <cstdint>
#include <vector>

#include "secgame/game.h"

namespace secgame {

enum class DualFamily { kWa, kWb };

// One entry of the defender's W table: row i = m - s + 1, offset r.
// Structure (a) keeps beta = 1 below s and beta_j * phi_j = level above.
// Structure (b) adds a fractional bridge entry at s - 1.
struct DualCell {
  int i = 0;
  int r = 0;
  int s = 0;
  double c = 0.0;      // sum of 1/phi_j over j = s..m
  double level = 0.0;  // common product beta_j * phi_j for j >= s
  double bridge = 0.0;  // beta_{s-1}, structure (b) only
  double value = 0.0;
  DualFamily family = DualFamily::kWa;
  bool feasible = false;
};

struct DefenderSolution {
  double value = 0.0;
  MarginalVector beta;  // sorted order
  DualCell cell;
};

struct DefenderSearchStats {
  std::int64_t w_cells = 0;
};

// Throws kIndexOutOfRange unless 1 <= i <= m and 0 <= r <= s - 1
// (1 <= r for structure (b)). Costs must be positive.
DualCell CellValueWa(int i, int r, const GameInstance& game);
DualCell CellValueWb(int i, int r, const GameInstance& game);

// Same preconditions as SolveAttacker.
DefenderSolution SolveDefender(const GameInstance& game,
                               DefenderSearchStats* stats = nullptr);

std::vector<double> CellBeta(const DualCell& cell, const GameInstance& game);

}  // namespace secgame

#endif  // SECGAME_DEFENDER_SOLVER_H_
