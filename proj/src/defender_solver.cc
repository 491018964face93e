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


#include "secgame/defender_solver.h"

#include <algorithm>
#include <string>

#include "secgame/tolerance.h"
#include "table_context.h"

namespace secgame {
namespace {

using internal::TableContext;

bool MixAllowed(const TableContext& ctx, int r, int upper) {
  const int count = ctx.ka() - r;
  return count >= 1 && count <= upper;
}

DualCell EvalWa(const TableContext& ctx, int s, int r, long double c) {
  DualCell cell;
  cell.family = DualFamily::kWa;
  cell.s = s;
  cell.r = r;
  cell.i = ctx.m() - s + 1;
  cell.c = static_cast<double>(c);
  const int excess = cell.i - ctx.kd();
  const double level = static_cast<double>(excess / c);
  cell.level = level;
  cell.value = (ctx.ka() - r) * level + ctx.RangeSum(s - r, s - 1);
  cell.feasible = excess >= 0 && AtMost(level, ctx.phi(s - r)) &&
                  AtLeast(level, ctx.phi(s - r - 1)) &&
                  MixAllowed(ctx, r, ctx.m() - s);
  return cell;
}

double Bridge(const TableContext& ctx, int s, double level, long double c) {
  return static_cast<double>(ctx.n() - s + 2 - level * c);
}

DualCell EvalWb(const TableContext& ctx, int s, int r, long double c) {
  DualCell cell;
  cell.family = DualFamily::kWb;
  cell.s = s;
  cell.r = r;
  cell.i = ctx.m() - s + 1;
  cell.c = static_cast<double>(c);
  const double level = ctx.phi(s - r - 1);
  const double bridge = Bridge(ctx, s, level, c);
  cell.level = level;
  cell.bridge = bridge;
  cell.value = (ctx.ka() - r) * level + ctx.RangeSum(s - r, s - 2) +
               bridge * ctx.phi(s - 1);
  cell.feasible = StrictlyBelow(bridge, 1.0) &&
                  AtLeast(bridge, level / ctx.phi(s - 1)) &&
                  MixAllowed(ctx, r, ctx.m() - s + 1);
  return cell;
}

// Lower value wins; exact ties go to the smaller row, then smaller offset,
// then structure (a).
bool Improves(const DualCell& candidate, const DualCell& best) {
  if (!candidate.feasible) return false;
  if (!best.feasible) return true;
  if (candidate.value != best.value) return candidate.value < best.value;
  if (candidate.i != best.i) return candidate.i < best.i;
  if (candidate.r != best.r) return candidate.r < best.r;
  return candidate.family == DualFamily::kWa &&
         best.family == DualFamily::kWb;
}

int CheckCell(const TableContext& ctx, int i, int r, int min_r) {
  if (i < 1 || i > ctx.m()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "row " + std::to_string(i) + " outside [1, " +
                    std::to_string(ctx.m()) + "]");
  }
  const int s = ctx.m() - i + 1;
  if (r < min_r || r > s - 1) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "offset " + std::to_string(r) + " outside [" +
                    std::to_string(min_r) + ", " + std::to_string(s - 1) + "]");
  }
  return s;
}

}  // namespace

DualCell CellValueWa(int i, int r, const GameInstance& game) {
  TableContext ctx(game);
  const int s = CheckCell(ctx, i, r, 0);
  return EvalWa(ctx, s, r, ctx.TailReciprocal(s));
}

DualCell CellValueWb(int i, int r, const GameInstance& game) {
  TableContext ctx(game);
  const int s = CheckCell(ctx, i, r, 1);
  return EvalWb(ctx, s, r, ctx.TailReciprocal(s));
}

DefenderSolution SolveDefender(const GameInstance& game,
                               DefenderSearchStats* stats) {
  internal::RequireNondegenerate(game);
  TableContext ctx(game);
  const int m = ctx.m();
  std::int64_t cells = 0;
  DualCell best;

  // Structure (a): each row pins its offset through the count of costs at
  // or below the level.
  long double c = 0;
  int below = 0;
  for (int s = m; s >= 1; --s) {
    c += 1.0L / ctx.phi(s);
    ++cells;
    const int i = m - s + 1;
    if (i < ctx.kd()) continue;
    const double level = static_cast<double>((i - ctx.kd()) / c);
    if (StrictlyAbove(level, ctx.phi(s))) continue;
    while (below + 1 <= m && ctx.phi(below + 1) <= level) {
      ++below;
      ++cells;
    }
    while (below > 0 && ctx.phi(below) > level) {
      --below;
      ++cells;
    }
    const int r = s - 1 - std::min(below, s - 1);
    DualCell cell = EvalWa(ctx, s, r, c);
    if (Improves(cell, best)) best = cell;
  }

  // Structure (b): the level runs through phi_0 = 0, phi_1, ...; s only
  // moves down.
  int s = m;
  c = 1.0L / ctx.phi(m);
  for (int j = 0; j < m; ++j) {
    const double level = ctx.phi(j);
    while (s >= j + 2) {
      ++cells;
      const double bridge = Bridge(ctx, s, level, c);
      if (AtLeast(bridge, level / ctx.phi(s - 1))) break;
      --s;
      c += 1.0L / ctx.phi(s);
    }
    if (s < j + 2) break;
    DualCell cell = EvalWb(ctx, s, s - 1 - j, c);
    if (Improves(cell, best)) best = cell;
  }

  if (stats != nullptr) stats->w_cells = cells;
  if (!best.feasible) {
    throw Error(ErrorCode::kNoFeasibleCell, "W table search found no cell");
  }
  std::vector<double> beta = CellBeta(best, game);
  return {best.value, MarginalVector(std::move(beta), game.uncovered_count()),
          best};
}

std::vector<double> CellBeta(const DualCell& cell, const GameInstance& game) {
  const int m = game.num_targets();
  const int s = cell.s;
  std::vector<double> beta(m, 0.0);
  auto set = [&](int j, double v) { beta[j - 1] = std::clamp(v, 0.0, 1.0); };
  const int ones_end = cell.family == DualFamily::kWa ? s - 1 : s - 2;
  for (int j = 1; j <= ones_end; ++j) set(j, 1.0);
  if (cell.family == DualFamily::kWb) set(s - 1, cell.bridge);
  for (int j = s; j <= m; ++j) set(j, cell.level / game.cost(j - 1));
  return beta;
}

}  // namespace secgame
