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


#ifndef SECGAME_SRC_SIMPLEX_H_
#define SECGAME_SRC_SIMPLEX_H_

#include <cmath>
#include <cstddef>
#include <vector>

#include "secgame/errors.h"

#if SECGAME_WITH_GMP
#include <gmpxx.h>
#endif

namespace secgame::internal {

inline bool IsPositive(double v) { return v > 1e-12; }
#if SECGAME_WITH_GMP
inline bool IsPositive(const mpq_class& v) { return sgn(v) > 0; }
#endif

template <typename Scalar>
struct PackingSolution {
  Scalar objective;
  std::vector<Scalar> y;
};

// Solves max 1'y s.t. B y <= 1, y >= 0 for a matrix B with positive
// entries, by a dense tableau simplex with Bland's rule. The slack basis
// is feasible from the start. B is row-major, rows x cols.
template <typename Scalar>
PackingSolution<Scalar> SolvePacking(int rows, int cols,
                                     const std::vector<Scalar>& b) {
  const int width = cols + rows + 1;  // variables, slacks, right-hand side
  std::vector<Scalar> tab(static_cast<std::size_t>(rows + 1) * width, Scalar(0));
  auto at = [&](int r, int c) -> Scalar& {
    return tab[static_cast<std::size_t>(r) * width + c];
  };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) at(r, c) = b[static_cast<std::size_t>(r) * cols + c];
    at(r, cols + r) = Scalar(1);
    at(r, width - 1) = Scalar(1);
  }
  // Objective row stores reduced costs; a positive entry can enter.
  for (int c = 0; c < cols; ++c) at(rows, c) = Scalar(1);
  std::vector<int> basis(rows);
  for (int r = 0; r < rows; ++r) basis[r] = cols + r;

  const long long max_pivots = 50LL * (rows + cols) + 1000;
  for (long long pivots = 0;; ++pivots) {
    if (pivots > max_pivots) {
      throw Error(ErrorCode::kNumericalFailure, "simplex pivot limit reached");
    }
    int enter = -1;
    for (int c = 0; c < width - 1; ++c) {
      if (IsPositive(at(rows, c))) {
        enter = c;
        break;
      }
    }
    if (enter < 0) break;
    int leave = -1;
    Scalar best_ratio(0);
    for (int r = 0; r < rows; ++r) {
      if (!IsPositive(at(r, enter))) continue;
      Scalar ratio = at(r, width - 1) / at(r, enter);
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave < 0) {
      throw Error(ErrorCode::kNumericalFailure, "packing LP reported unbounded");
    }
    const Scalar pivot = at(leave, enter);
    for (int c = 0; c < width; ++c) at(leave, c) /= pivot;
    for (int r = 0; r <= rows; ++r) {
      if (r == leave) continue;
      const Scalar factor = at(r, enter);
      if (factor == Scalar(0)) continue;
      for (int c = 0; c < width; ++c) at(r, c) -= factor * at(leave, c);
    }
    basis[leave] = enter;
  }

  PackingSolution<Scalar> solution{Scalar(0), std::vector<Scalar>(cols, Scalar(0))};
  for (int r = 0; r < rows; ++r) {
    if (basis[r] < cols) solution.y[basis[r]] = at(r, width - 1);
  }
  for (const Scalar& v : solution.y) solution.objective += v;
  return solution;
}

}  // namespace secgame::internal

#endif  // SECGAME_SRC_SIMPLEX_H_
