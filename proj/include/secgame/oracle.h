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


#ifndef SECGAME_ORACLE_H_
#define SECGAME_ORACLE_H_

#include <cstdint>
#include <vector>

#include "secgame/game.h"

namespace secgame {

// Full payoff matrix with subsets in lexicographic order.
struct PayoffMatrix {
  std::vector<TargetSubset> rows;  // attack sets
  std::vector<TargetSubset> cols;  // protection sets
  std::vector<double> entries;     // row-major

  int num_rows() const { return static_cast<int>(rows.size()); }
  int num_cols() const { return static_cast<int>(cols.size()); }
  double At(int row, int col) const {
    return entries[static_cast<std::size_t>(row) * cols.size() + col];
  }
};

inline constexpr std::int64_t kDefaultMatrixCap = 10'000'000;

// Throws kScaleLimit when C(m,k_a) * C(m,k_d) exceeds `cap`.
PayoffMatrix EnumerateMatrix(const GameInstance& game,
                             std::int64_t cap = kDefaultMatrixCap);

struct MatrixGameSolution {
  double value = 0.0;     // row player's (maximizer's) value
  std::vector<double> p;  // row player
  std::vector<double> q;  // column player
};

// Both players' LPs are solved by the simplex method with Bland's rule.
// `exact` switches to rational arithmetic when built with GMP (otherwise
// kInvalidArgument). Throws kNumericalFailure when the two values differ
// by more than 1e-8 relative.
MatrixGameSolution SolveMatrixGame(int rows, int cols,
                                   const std::vector<double>& entries,
                                   bool exact = false);
MatrixGameSolution SolveMatrixGame(const PayoffMatrix& matrix,
                                   bool exact = false);

bool ExactArithmeticAvailable();

struct OracleOptions {
  std::int64_t cap = kDefaultMatrixCap;
  bool exact = false;
  bool with_strategies = false;
};

// Certificate in the common shape, method = kOracle. Marginals come from
// the LP strategies; active sets are the strategy supports.
SaddleCertificate OracleCertificate(const GameInstance& game,
                                    const OracleOptions& options = {});

}  // namespace secgame

#endif  // SECGAME_ORACLE_H_
