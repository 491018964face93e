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


#include "secgame/attacker_solver.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "secgame/tolerance.h"
#include "table_context.h"

namespace secgame {
namespace {

using internal::TableContext;

CandidateCell BaseCell(const TableContext& ctx, int s, int r, long double c) {
  CandidateCell cell;
  cell.s = s;
  cell.r = r;
  cell.i = ctx.k() - s + 1;
  cell.c = static_cast<double>(c);
  cell.tail_count = ctx.n() - s + 1;
  return cell;
}

CandidateCell EvalDiagonal(const TableContext& ctx, int s, long double c) {
  CandidateCell cell = BaseCell(ctx, s, 0, c);
  cell.family = CellFamily::kDiagonal;
  const int t = cell.tail_count;
  cell.feasible = AtLeast(cell.c * ctx.phi(s), ctx.ka());
  cell.value = t > 0 ? static_cast<double>(static_cast<long double>(ctx.ka()) * t / c)
                     : 0.0;
  return cell;
}

CandidateCell EvalUI(const TableContext& ctx, int s, int r, long double c) {
  if (r == 0) return EvalDiagonal(ctx, s, c);
  CandidateCell cell = BaseCell(ctx, s, r, c);
  cell.family = CellFamily::kUI;
  const int a = s - r;
  const int t = cell.tail_count;
  const double lhs = ctx.ka() - r;
  const bool upper = AtLeast(cell.c * ctx.phi(s), lhs);
  const bool lower = StrictlyAbove(lhs, cell.c * ctx.phi(s - 1));
  const bool spread = t <= 0 || StrictlyAbove(cell.c * ctx.phi(a), t);
  cell.feasible = upper && lower && spread;
  if (t > 0) {
    cell.value = ctx.RangeSum(a, s - 1) + static_cast<double>(lhs * t / c);
  } else {
    cell.value = ctx.RangeSum(a, ctx.n());
  }
  return cell;
}

CandidateCell EvalUII(const TableContext& ctx, int s, int r, long double c) {
  if (r == 0) return EvalDiagonal(ctx, s, c);
  CandidateCell cell = BaseCell(ctx, s, r, c);
  cell.family = CellFamily::kUII;
  const int t = cell.tail_count;
  if (t <= 0) return cell;
  const int a = s - r;
  const double x = cell.c * ctx.phi(s);
  const double lhs = ctx.ka() - r;
  const double delta = std::min(1.0, lhs - (x - 1.0));
  cell.feasible = AtLeast(x, lhs) && StrictlyAbove(lhs, x - 1.0) &&
                  delta > 0 && AtMost(cell.c * ctx.phi(a), t);
  cell.value = std::max(0.0, delta) * ctx.phi(a) + ctx.RangeSum(a + 1, s - 1) +
               t * ctx.phi(s);
  return cell;
}

// Higher value wins; exact ties go to the smaller row, then smaller offset.
bool Improves(const CandidateCell& candidate, const CandidateCell& best) {
  if (!candidate.feasible) return false;
  if (!best.feasible) return true;
  if (candidate.value != best.value) return candidate.value > best.value;
  if (candidate.i != best.i) return candidate.i < best.i;
  return candidate.r < best.r;
}

int CheckRow(const TableContext& ctx, int i, int r) {
  const int k = ctx.k();
  if (i < 1 || i > k) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "row " + std::to_string(i) + " outside [1, " +
                    std::to_string(k) + "]");
  }
  const int s = k - i + 1;
  if (r < 0 || r > s - 1) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "offset " + std::to_string(r) + " outside [0, " +
                    std::to_string(s - 1) + "]");
  }
  return s;
}

}  // namespace

CandidateCell CellValueUI(int i, int r, const GameInstance& game) {
  TableContext ctx(game);
  const int s = CheckRow(ctx, i, r);
  return EvalUI(ctx, s, r, ctx.TailReciprocal(s));
}

CandidateCell CellValueUII(int i, int r, const GameInstance& game) {
  TableContext ctx(game);
  const int s = CheckRow(ctx, i, r);
  return EvalUII(ctx, s, r, ctx.TailReciprocal(s));
}

AttackerSolution SolveAttacker(const GameInstance& game,
                               AttackerSearchStats* stats) {
  internal::RequireNondegenerate(game);
  TableContext ctx(game);
  const int k = ctx.k();
  const int ka = ctx.ka();
  AttackerSearchStats local;
  CandidateCell best;

  long double c = ctx.TailReciprocal(k);
  int a = k;
  for (int s = k; s >= 1; --s) {
    if (s < k) c += 1.0L / ctx.phi(s);
    const double cd = static_cast<double>(c);
    a = std::min(a, s);

    if (ctx.n() - s + 1 >= 1) {
      ++local.uii_cells;
      const double x = cd * ctx.phi(s);
      const int q = static_cast<int>(std::floor(x + FeasibilitySlack(x, 0.0)));
      const int r = ka - q;
      if (r >= 1 && r <= s - 1) {
        CandidateCell cell = EvalUII(ctx, s, r, c);
        if (Improves(cell, best)) best = cell;
      }
    }

    while (true) {
      ++local.ui_cells;
      const int r = s - a;
      CandidateCell cell = EvalUI(ctx, s, r, c);
      if (Improves(cell, best)) best = cell;
      const bool lower = StrictlyAbove(ka - r, cd * ctx.phi(s - 1));
      if (lower && a > 1) {
        --a;
      } else {
        break;
      }
    }
  }

  if (stats != nullptr) *stats = local;
  if (!best.feasible) {
    throw Error(ErrorCode::kNoFeasibleCell, "U table search found no cell");
  }
  std::vector<double> alpha = CellAlpha(best, game);
  return {best.value, MarginalVector(std::move(alpha), ka), best};
}

std::vector<double> CellAlpha(const CandidateCell& cell,
                              const GameInstance& game) {
  const int m = game.num_targets();
  const int ka = game.attack_budget();
  const int s = cell.s;
  const int a = s - cell.r;
  const long double c = cell.c;
  auto phi = [&](int j) { return game.cost(j - 1); };
  std::vector<double> alpha(m, 0.0);
  auto set = [&](int j, double v) { alpha[j - 1] = std::clamp(v, 0.0, 1.0); };

  if (cell.family == CellFamily::kUII) {
    const double x = cell.c * phi(s);
    set(a, std::min(1.0, ka - cell.r - (x - 1.0)));
    for (int j = a + 1; j <= s; ++j) set(j, 1.0);
    for (int j = s + 1; j <= m; ++j) set(j, phi(s) / phi(j));
  } else {
    for (int j = a; j <= s - 1; ++j) set(j, 1.0);
    const long double mass = ka - cell.r;
    for (int j = s; j <= m; ++j) {
      set(j, static_cast<double>(mass / (c * phi(j))));
    }
  }
  return alpha;
}

ActiveSets ComputeActiveSets(const AttackerSolution& solution,
                             const GameInstance& game) {
  const int m = game.num_targets();
  const int n = game.uncovered_count();
  const int s = solution.cell.s;
  const int a = s - solution.cell.r;
  ActiveSets sets;
  for (int j = a; j <= m; ++j) sets.attacker.push_back(game.original_index(j - 1));
  sets.defender_pure = s > n;
  const int first = sets.defender_pure ? n + 1 : s;
  for (int j = first; j <= m; ++j) {
    sets.defender.push_back(game.original_index(j - 1));
  }
  std::sort(sets.attacker.begin(), sets.attacker.end());
  std::sort(sets.defender.begin(), sets.defender.end());
  return sets;
}

}  // namespace secgame
