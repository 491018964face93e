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


#include "secgame/oracle.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "certificate_util.h"
#include "combinations.h"
#include "secgame/strategy_lift.h"
#include "secgame/tolerance.h"
#include "simplex.h"

namespace secgame {
namespace {

template <typename Scalar>
double ToDouble(const Scalar& v) {
  if constexpr (std::is_same_v<Scalar, double>) {
    return v;
  } else {
    return v.get_d();
  }
}

// B = A + shift >= 1 elementwise. The column player's LP on B gives q and
// 1 / w; the row player's LP runs on (K - B)' so that it is again a packing
// problem with positive entries.
template <typename Scalar>
MatrixGameSolution SolveShifted(int rows, int cols,
                                const std::vector<double>& entries) {
  const double low = *std::min_element(entries.begin(), entries.end());
  const Scalar shift = Scalar(1) - Scalar(low);
  std::vector<Scalar> b(entries.size());
  Scalar high = Scalar(0);
  for (std::size_t e = 0; e < entries.size(); ++e) {
    b[e] = Scalar(entries[e]) + shift;
    if (e == 0 || b[e] > high) high = b[e];
  }
  const Scalar top = high + Scalar(1);
  std::vector<Scalar> flipped(entries.size());
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      flipped[static_cast<std::size_t>(c) * rows + r] =
          top - b[static_cast<std::size_t>(r) * cols + c];
    }
  }

  const auto column_lp = internal::SolvePacking<Scalar>(rows, cols, b);
  const auto row_lp = internal::SolvePacking<Scalar>(cols, rows, flipped);
  const Scalar column_value = Scalar(1) / column_lp.objective - shift;
  const Scalar row_value = top - Scalar(1) / row_lp.objective - shift;

  MatrixGameSolution solution;
  solution.value = ToDouble(row_value);
  const double dual_value = ToDouble(column_value);
  if (!RelativelyClose(solution.value, dual_value, 1e-8)) {
    throw Error(ErrorCode::kNumericalFailure,
                "LP values disagree: " + std::to_string(solution.value) +
                    " vs " + std::to_string(dual_value));
  }
  solution.p.resize(rows);
  for (int r = 0; r < rows; ++r) {
    solution.p[r] = ToDouble(Scalar(row_lp.y[r] / row_lp.objective));
  }
  solution.q.resize(cols);
  for (int c = 0; c < cols; ++c) {
    solution.q[c] = ToDouble(Scalar(column_lp.y[c] / column_lp.objective));
  }
  return solution;
}

SparseMixedStrategy SupportStrategy(const std::vector<TargetSubset>& actions,
                                    const std::vector<double>& probs,
                                    int subset_size) {
  constexpr double kDrop = 1e-14;
  long double total = 0;
  for (double p : probs) {
    if (p > kDrop) total += p;
  }
  std::vector<StrategyAtom> atoms;
  for (std::size_t a = 0; a < actions.size(); ++a) {
    if (probs[a] > kDrop) {
      atoms.push_back({actions[a], static_cast<double>(probs[a] / total)});
    }
  }
  return SparseMixedStrategy(std::move(atoms), subset_size);
}

std::vector<int> UnionIds(const SparseMixedStrategy& strategy,
                          const GameInstance& game) {
  std::set<int> ids;
  for (const StrategyAtom& atom : strategy.atoms()) {
    for (int j : atom.subset.members()) ids.insert(game.original_index(j));
  }
  return {ids.begin(), ids.end()};
}

}  // namespace

bool ExactArithmeticAvailable() { return SECGAME_WITH_GMP != 0; }

PayoffMatrix EnumerateMatrix(const GameInstance& game, std::int64_t cap) {
  const int m = game.num_targets();
  const std::int64_t rows = BinomialCapped(m, game.attack_budget());
  const std::int64_t cols = BinomialCapped(m, game.defense_budget());
  if (rows > cap / cols) {
    throw Error(ErrorCode::kScaleLimit,
                "payoff matrix of " + std::to_string(rows) + " x " +
                    std::to_string(cols) + " exceeds cap " + std::to_string(cap));
  }
  PayoffMatrix matrix;
  internal::CombinationWalker attacks(m, game.attack_budget());
  do matrix.rows.emplace_back(attacks.current());
  while (attacks.Next());
  internal::CombinationWalker defenses(m, game.defense_budget());
  do matrix.cols.emplace_back(defenses.current());
  while (defenses.Next());

  matrix.entries.reserve(static_cast<std::size_t>(rows * cols));
  std::vector<char> covered(m);
  for (const TargetSubset& x : matrix.rows) {
    for (const TargetSubset& y : matrix.cols) {
      std::fill(covered.begin(), covered.end(), 0);
      for (int j : y.members()) covered[j] = 1;
      double payoff = 0;
      for (int j : x.members()) {
        if (!covered[j]) payoff += game.cost(j);
      }
      matrix.entries.push_back(payoff);
    }
  }
  return matrix;
}

MatrixGameSolution SolveMatrixGame(int rows, int cols,
                                   const std::vector<double>& entries,
                                   bool exact) {
  if (rows < 1 || cols < 1 ||
      entries.size() != static_cast<std::size_t>(rows) * cols) {
    throw Error(ErrorCode::kInvalidArgument, "matrix shape mismatch");
  }
  for (double v : entries) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::kInvalidArgument, "non-finite matrix entry");
    }
  }
  if (exact) {
#if SECGAME_WITH_GMP
    return SolveShifted<mpq_class>(rows, cols, entries);
#else
    throw Error(ErrorCode::kInvalidArgument,
                "built without rational arithmetic support");
#endif
  }
  return SolveShifted<double>(rows, cols, entries);
}

MatrixGameSolution SolveMatrixGame(const PayoffMatrix& matrix, bool exact) {
  return SolveMatrixGame(matrix.num_rows(), matrix.num_cols(), matrix.entries,
                         exact);
}

SaddleCertificate OracleCertificate(const GameInstance& game,
                                    const OracleOptions& options) {
  const PayoffMatrix matrix = EnumerateMatrix(game, options.cap);
  const MatrixGameSolution lp = SolveMatrixGame(matrix, options.exact);
  const int m = game.num_targets();

  SparseMixedStrategy p =
      SupportStrategy(matrix.rows, lp.p, game.attack_budget());
  SparseMixedStrategy q =
      SupportStrategy(matrix.cols, lp.q, game.defense_budget());
  const MarginalVector alpha = MarginalOfStrategy(p, m, false);
  const MarginalVector beta = MarginalOfStrategy(q, m, true);

  SaddleCertificate cert;
  cert.value = lp.value;
  cert.method = SolveMethod::kOracle;
  cert.alpha = MarginalVector(game.ToOriginalOrder(alpha.values()),
                              game.attack_budget());
  cert.beta = MarginalVector(game.ToOriginalOrder(beta.values()),
                             game.uncovered_count());
  const AttackStructure st =
      internal::ClampedStructure(alpha.values(), game, lp.value);
  cert.s_star = st.s;
  cert.r_star = st.r;
  cert.attacker_active = UnionIds(p, game);
  cert.defender_active = UnionIds(q, game);
  cert.defender_pure = q.num_atoms() == 1;
  if (options.with_strategies) {
    const std::vector<int> perm(game.perm().begin(), game.perm().end());
    cert.attacker_strategy = p.Relabel(perm);
    cert.defender_strategy = q.Relabel(perm);
  }
  return cert;
}

}  // namespace secgame
