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


#ifndef SECGAME_SOLVER_H_
#define SECGAME_SOLVER_H_

#include <cstdint>

#include "secgame/game.h"

namespace secgame {

struct SolveOptions {
  bool with_strategies = false;
};

struct SolveStats {
  std::int64_t cells_u = 0;
  std::int64_t cells_uii = 0;
  std::int64_t cells_w = 0;
  double attacker_value = 0.0;
  double defender_value = 0.0;
};

inline constexpr double kCrossCheckTolerance = 1e-9;

// Fast path: strips zero-cost targets, short-circuits degenerate budgets,
// and otherwise runs both table searches. Throws kNumericalFailure when the
// attacker and defender values disagree beyond kCrossCheckTolerance.
SaddleCertificate SolveGame(const GameInstance& game,
                            const SolveOptions& options = {},
                            SolveStats* stats = nullptr);

}  // namespace secgame

#endif  // SECGAME_SOLVER_H_
