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


#include <random>
#include <vector>

#include "doctest.h"
#include "secgame/game.h"
#include "secgame/strategy_lift.h"
#include "test_support.h"

namespace secgame {
namespace {

using doctest::Approx;
using Atom = std::pair<std::vector<int>, double>;

std::vector<Atom> AtomsOf(const SparseMixedStrategy& s) {
  std::vector<Atom> out;
  for (const StrategyAtom& a : s.atoms()) {
    out.push_back({{a.subset.members().begin(), a.subset.members().end()},
                   a.probability});
  }
  std::sort(out.begin(), out.end());
  return out;
}

void CheckAtoms(const SparseMixedStrategy& s, std::vector<Atom> want) {
  const std::vector<Atom> got = AtomsOf(s);
  std::sort(want.begin(), want.end());
  REQUIRE(got.size() == want.size());
  for (std::size_t a = 0; a < got.size(); ++a) {
    CHECK(got[a].first == want[a].first);
    CHECK(got[a].second == Approx(want[a].second).epsilon(1e-12));
  }
}

TEST_CASE("lift examples") {
  CheckAtoms(LiftMarginal(MarginalVector({0, 0.6, 0.4}, 1), 1),
             {{{1}, 0.6}, {{2}, 0.4}});
  CheckAtoms(LiftMarginal(MarginalVector({1.0 / 3, 1, 2.0 / 3}, 2), 2),
             {{{0, 1}, 1.0 / 3}, {{1, 2}, 2.0 / 3}});
  CheckAtoms(LiftMarginal(MarginalVector({1, 1}, 2), 2), {{{0, 1}, 1.0}});
  CheckAtoms(LiftMarginal(MarginalVector({0, 0, 0}, 0), 0), {{{}, 1.0}});
}

TEST_CASE("defender lift examples") {
  CheckAtoms(LiftDefender(MarginalVector({1, 0.6, 0.4}, 2), 1, 3),
             {{{1}, 0.4}, {{2}, 0.6}});
  CheckAtoms(LiftDefender(MarginalVector({1, 0, 0}, 1), 2, 3), {{{1, 2}, 1.0}});
  CheckAtoms(LiftDefender(MarginalVector({2.0 / 3, 1.0 / 3}, 1), 1, 2),
             {{{0}, 1.0 / 3}, {{1}, 2.0 / 3}});
}

TEST_CASE("lift rejects infeasible marginals") {
  try {
    LiftMarginal(MarginalVector({0.5, 0.5, 0.5}, 1.5), 2);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInfeasibleMarginal);
  }
  CHECK_THROWS_AS(LiftDefender(MarginalVector({0.5, 0.5}, 1), 0, 2), Error);
}

TEST_CASE("lift round trips with at most m atoms") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 40);
    const int k = static_cast<int>(rng() % (m + 1));
    std::vector<double> v = testing::RandomMarginal(rng, m, k);
    if (trial % 4 == 0) {
      for (double& x : v) x = std::round(x * 4) / 4;  // coarse values, many ties
      double sum = 0;
      for (double x : v) sum += x;
      if (std::abs(sum - k) > 1e-12) continue;
    }
    const MarginalVector alpha(v, k);
    const SparseMixedStrategy s = LiftMarginal(alpha, k);
    CHECK(s.num_atoms() <= m);
    const MarginalVector back = MarginalOfStrategy(s, m, false);
    for (int j = 0; j < m; ++j) CHECK(std::abs(back[j] - v[j]) <= 1e-12);

    const SparseMixedStrategy q = LiftDefender(MarginalVector(v, k), m - k, m);
    const MarginalVector open = MarginalOfStrategy(q, m, true);
    for (int j = 0; j < m; ++j) CHECK(std::abs(open[j] - v[j]) <= 1e-12);
  }
}

TEST_CASE("sweep and inductive splitting agree where the latter applies") {
  std::mt19937_64 rng(9);
  int compared = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 5);
    const int k = 1 + static_cast<int>(rng() % (m - 1));
    const std::vector<double> v = testing::RandomMarginal(rng, m, k);
    const auto recursive = testing::RecursiveLift(v, k);
    if (!recursive) continue;
    std::vector<double> from_recursion(m, 0.0);
    for (const auto& [set, p] : *recursive) {
      CHECK(static_cast<int>(set.size()) == k);
      for (int j : set) from_recursion[j] += p;
    }
    const MarginalVector sweep =
        MarginalOfStrategy(LiftMarginal(MarginalVector(v, k), k), m, false);
    for (int j = 0; j < m; ++j) {
      CHECK(from_recursion[j] == Approx(v[j]).epsilon(1e-9));
      CHECK(sweep[j] == Approx(from_recursion[j]).epsilon(1e-9));
    }
    ++compared;
  }
  CHECK(compared > 50);
}

TEST_CASE("saddle verification") {
  const GameInstance e2 = Normalize(std::vector<double>{1, 2, 3}, 1, 1);
  const SparseMixedStrategy p = LiftMarginal(MarginalVector({0, 0.6, 0.4}, 1), 1);
  const SparseMixedStrategy q = LiftDefender(MarginalVector({1, 0.6, 0.4}, 2), 1, 3);
  SaddleVerdict verdict = VerifySaddle(p, q, 1.2, e2, 1e-9);
  CHECK(verdict.pass);
  CHECK(verdict.attacker_guarantee == Approx(1.2).epsilon(1e-12));
  CHECK(verdict.defender_guarantee == Approx(1.2).epsilon(1e-12));

  const SparseMixedStrategy uniform(
      {{TargetSubset({0}), 1.0 / 3}, {TargetSubset({1}), 1.0 / 3},
       {TargetSubset({2}), 1.0 / 3}},
      1);
  verdict = VerifySaddle(p, uniform, 1.2, e2, 1e-9);
  CHECK_FALSE(verdict.pass);
  CHECK(verdict.best_attack == TargetSubset({2}));
  CHECK(verdict.defender_guarantee == Approx(2.0).epsilon(1e-12));

  verdict = VerifySaddle(p, q, 1.3, e2, 1e-9);
  CHECK_FALSE(verdict.pass);

  const GameInstance open = Normalize(std::vector<double>{1, 2, 3}, 2, 0);
  const SparseMixedStrategy top({{TargetSubset({1, 2}), 1.0}}, 2);
  const SparseMixedStrategy none({{TargetSubset(), 1.0}}, 0);
  CHECK(VerifySaddle(top, none, 5.0, open, 1e-9).pass);

  std::vector<double> costs(30);
  for (int j = 0; j < 30; ++j) costs[j] = j + 1;
  const GameInstance big = Normalize(costs, 10, 1);
  const SparseMixedStrategy wide({{TargetSubset({0, 1, 2, 3, 4, 5, 6, 7, 8, 9}), 1.0}}, 10);
  const SparseMixedStrategy one({{TargetSubset({0}), 1.0}}, 1);
  try {
    VerifySaddle(wide, one, 0.0, big, 1e-9);
    FAIL("expected ScaleLimit");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kScaleLimit);
  }
}

TEST_CASE("binomial with saturation") {
  CHECK(BinomialCapped(5, 2) == 10);
  CHECK(BinomialCapped(30, 10) == 30045015);
  CHECK(BinomialCapped(4, 5) == 0);
  CHECK(BinomialCapped(200, 100) == std::numeric_limits<std::int64_t>::max());
  CHECK(BinomialCapped(62, 31) == 465428353255261088LL);
}

}  // namespace
}  // namespace secgame
