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


#include <map>
#include <random>
#include <vector>

#include "doctest.h"
#include "secgame/attacker_solver.h"
#include "secgame/game.h"
#include "test_support.h"

namespace secgame {
namespace {

using doctest::Approx;

GameInstance Sorted(std::vector<double> costs, int ka, int kd) {
  return Normalize(costs, ka, kd);
}

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInvalidArgument;
}

TEST_CASE("U cells on (1,2,3)") {
  const GameInstance g11 = Sorted({1, 2, 3}, 1, 1);
  CandidateCell cell = CellValueUI(1, 0, g11);
  CHECK(cell.s == 2);
  CHECK(cell.c == Approx(5.0 / 6).epsilon(1e-15));
  CHECK(cell.tail_count == 1);
  CHECK(cell.family == CellFamily::kDiagonal);
  CHECK(cell.feasible);
  CHECK(cell.value == Approx(1.2).epsilon(1e-15));

  cell = CellValueUI(2, 0, g11);
  CHECK(cell.s == 1);
  CHECK(cell.c == Approx(11.0 / 6).epsilon(1e-15));
  CHECK(cell.tail_count == 2);
  CHECK(cell.feasible);
  CHECK(cell.value == Approx(12.0 / 11).epsilon(1e-15));

  const GameInstance g21 = Sorted({1, 2, 3}, 2, 1);
  CHECK_FALSE(CellValueUI(1, 0, g21).feasible);

  cell = CellValueUII(1, 1, g21);
  CHECK(cell.family == CellFamily::kUII);
  CHECK(cell.feasible);
  CHECK(cell.value == Approx(7.0 / 3).epsilon(1e-15));
  const std::vector<double> alpha = CellAlpha(cell, g21);
  CHECK(alpha[0] == Approx(1.0 / 3).epsilon(1e-15));
  CHECK(alpha[1] == 1.0);
  CHECK(alpha[2] == Approx(2.0 / 3).epsilon(1e-15));

  CHECK_FALSE(CellValueUII(1, 1, g11).feasible);

  const GameInstance g12 = Sorted({1, 2}, 1, 1);
  cell = CellValueUII(1, 0, g12);
  CHECK(cell.family == CellFamily::kDiagonal);
  CHECK(cell.feasible);
  CHECK(cell.value == Approx(2.0 / 3).epsilon(1e-15));
}

TEST_CASE("diagonal values with large budgets") {
  // k_a * t exceeds the int range here.
  const GameInstance g =
      Normalize(std::vector<double>(150000, 1.0), 50000, 50000);
  const CandidateCell cell = CellValueUI(50000, 0, g);
  CHECK(cell.s == 50001);
  CHECK(cell.tail_count == 50000);
  CHECK(cell.feasible);
  CHECK(cell.value == Approx(25000.0).epsilon(1e-12));
}

TEST_CASE("U cell indices are checked") {
  const GameInstance g = Sorted({1, 2, 3}, 1, 1);
  CHECK(CodeOf([&] { CellValueUI(0, 0, g); }) == ErrorCode::kIndexOutOfRange);
  CHECK(CodeOf([&] { CellValueUI(3, 0, g); }) == ErrorCode::kIndexOutOfRange);
  CHECK(CodeOf([&] { CellValueUI(1, 2, g); }) == ErrorCode::kIndexOutOfRange);
  CHECK(CodeOf([&] { CellValueUII(2, -1, g); }) == ErrorCode::kIndexOutOfRange);
}

TEST_CASE("attacker solutions on the worked instances") {
  struct Case {
    std::vector<double> phi;
    int ka, kd;
    double value;
    std::vector<double> alpha;
  };
  const std::vector<Case> cases = {
      {{1, 2}, 1, 1, 2.0 / 3, {2.0 / 3, 1.0 / 3}},
      {{1, 2, 3}, 1, 1, 6.0 / 5, {0, 3.0 / 5, 2.0 / 5}},
      {{1, 2, 3}, 2, 1, 7.0 / 3, {1.0 / 3, 1, 2.0 / 3}},
      {{1, 2, 3}, 2, 2, 1.0, {1, 3.0 / 5, 2.0 / 5}},
      {{1, 1}, 1, 1, 0.5, {0.5, 0.5}},
  };
  for (const Case& c : cases) {
    CAPTURE(c.value);
    const GameInstance g = Sorted(c.phi, c.ka, c.kd);
    const AttackerSolution sol = SolveAttacker(g);
    CHECK(sol.value == Approx(c.value).epsilon(1e-12));
    for (int j = 0; j < g.num_targets(); ++j) {
      CHECK(sol.alpha[j] == Approx(c.alpha[j]).epsilon(1e-12));
    }
  }
  CHECK(CodeOf([] { SolveAttacker(Sorted({1, 2, 3}, 2, 0)); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(CodeOf([] { SolveAttacker(Sorted({0, 2, 3}, 1, 1)); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("active sets") {
  auto sets_of = [](std::vector<double> phi, int ka, int kd) {
    const GameInstance g = Sorted(phi, ka, kd);
    return ComputeActiveSets(SolveAttacker(g), g);
  };
  ActiveSets e2 = sets_of({1, 2, 3}, 1, 1);
  CHECK(e2.attacker == std::vector<int>{1, 2});
  CHECK(e2.defender == std::vector<int>{1, 2});
  CHECK_FALSE(e2.defender_pure);

  ActiveSets e4 = sets_of({1, 2, 3}, 2, 2);
  CHECK(e4.attacker == std::vector<int>{0, 1, 2});
  CHECK(e4.defender == std::vector<int>{1, 2});
  CHECK(e4.defender_pure);

  ActiveSets e3 = sets_of({1, 2, 3}, 2, 1);
  CHECK(e3.attacker == std::vector<int>{0, 1, 2});
  CHECK(e3.defender == std::vector<int>{1, 2});
  CHECK_FALSE(e3.defender_pure);

  // Ids come back in the caller's order.
  ActiveSets permuted = sets_of({3, 1, 2}, 1, 1);
  CHECK(permuted.attacker == std::vector<int>{0, 2});
}

// The staircase must find the best cell of the whole table; every U^I
// column holds at most one feasible cell.
TEST_CASE("staircase search agrees with full table enumeration") {
  std::mt19937_64 rng(2024);
  int checked = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 8);
    const int ka = 1 + static_cast<int>(rng() % (m - 1));
    const int kd = 1 + static_cast<int>(rng() % (m - 1));
    std::vector<double> costs = testing::UniformCosts(rng, m, 0.0, 10.0);
    if (trial % 3 == 0) {
      for (double& c : costs) c = 1 + static_cast<int>(c) % 3;
    }
    const GameInstance g = Normalize(costs, ka, kd);
    const int k = std::max(ka, m - kd);
    double best = -1;
    std::map<int, int> feasible_per_column;
    for (int i = 1; i <= k; ++i) {
      const int s = k - i + 1;
      for (int r = 0; r <= s - 1; ++r) {
        const CandidateCell ui = CellValueUI(i, r, g);
        if (ui.feasible) {
          best = std::max(best, ui.value);
          if (r > 0) ++feasible_per_column[s - r];
        }
        const CandidateCell uii = CellValueUII(i, r, g);
        if (uii.feasible) best = std::max(best, uii.value);
      }
    }
    AttackerSearchStats stats;
    const AttackerSolution sol = SolveAttacker(g, &stats);
    CAPTURE(trial);
    CHECK(sol.value == Approx(best).epsilon(1e-12));
    CHECK(stats.ui_cells <= 2 * k);
    CHECK(stats.uii_cells <= k);
    if (trial % 3 != 0) {
      for (auto [column, count] : feasible_per_column) CHECK(count <= 1);
    }
    const std::vector<double> phi(g.costs().begin(), g.costs().end());
    CHECK(DefenderBestResponseValue(sol.alpha, g) ==
          Approx(sol.value).epsilon(1e-9));
    CHECK(sol.alpha.Sum() == Approx(ka).epsilon(1e-12));
    ++checked;
  }
  CHECK(checked == 3000);
}

}  // namespace
}  // namespace secgame
