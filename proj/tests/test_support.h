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


#ifndef SECGAME_TESTS_TEST_SUPPORT_H_
#define SECGAME_TESTS_TEST_SUPPORT_H_

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "secgame/game.h"

namespace secgame::testing {

inline std::vector<std::vector<int>> AllSubsets(int m, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> pick(k);
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (depth == k) {
      out.push_back(pick);
      return;
    }
    for (int j = start; j <= m - (k - depth); ++j) {
      pick[depth] = j;
      self(self, j + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

// min over protection sets y of sum_{l not in y} alpha_l phi_l.
inline double BruteMinUncovered(const std::vector<double>& alpha,
                                const std::vector<double>& phi, int k_d) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& y : AllSubsets(static_cast<int>(phi.size()), k_d)) {
    double total = 0;
    for (int l = 0; l < static_cast<int>(phi.size()); ++l) {
      if (std::find(y.begin(), y.end(), l) == y.end()) total += alpha[l] * phi[l];
    }
    best = std::min(best, total);
  }
  return best;
}

// max over attack sets x of sum_{l in x} beta_l phi_l.
inline double BruteMaxAttack(const std::vector<double>& beta,
                             const std::vector<double>& phi, int k_a) {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& x : AllSubsets(static_cast<int>(phi.size()), k_a)) {
    double total = 0;
    for (int l : x) total += beta[l] * phi[l];
    best = std::max(best, total);
  }
  return best;
}

inline std::vector<double> UniformCosts(std::mt19937_64& rng, int m, double lo,
                                        double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> costs(m);
  for (double& c : costs) {
    c = dist(rng);
    if (c <= 0) c = hi;
  }
  return costs;
}

// Random marginal vector in [0,1]^m summing to k.
inline std::vector<double> RandomMarginal(std::mt19937_64& rng, int m, int k) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> v(m);
  for (double& x : v) x = unit(rng);
  // Bisection on a common scale t so that sum min(1, t * v_j) = k.
  double lo = 0, hi = 1;
  auto mass = [&](double t) {
    double s = 0;
    for (double x : v) s += std::min(1.0, t * x);
    return s;
  };
  while (mass(hi) < k && hi < 1e18) hi *= 2;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (mass(mid) < k ? lo : hi) = mid;
  }
  for (double& x : v) x = std::min(1.0, hi * x);
  // Push the rounding residue onto entries with room.
  double residue = k;
  for (double x : v) residue -= x;
  for (double& x : v) {
    const double room = residue > 0 ? 1.0 - x : -x;
    const double step = residue > 0 ? std::min(residue, room) : std::max(residue, room);
    x += step;
    residue -= step;
  }
  return v;
}

// Splitting on the first target as in the classical inductive proof; returns
// nullopt when a rescaled sub-marginal leaves [0, 1].
inline std::optional<std::vector<std::pair<std::vector<int>, double>>>
RecursiveLift(const std::vector<double>& alpha, int k, int offset = 0) {
  using Atoms = std::vector<std::pair<std::vector<int>, double>>;
  const int m = static_cast<int>(alpha.size());
  constexpr double kSlack = 1e-12;
  if (k == 0) return Atoms{{{}, 1.0}};
  if (k == m) {
    std::vector<int> all(m);
    for (int j = 0; j < m; ++j) all[j] = offset + j;
    return Atoms{{all, 1.0}};
  }
  if (k == 1) {
    Atoms atoms;
    for (int j = 0; j < m; ++j) {
      if (alpha[j] > 0) atoms.push_back({{offset + j}, alpha[j]});
    }
    return atoms;
  }
  const double a1 = alpha[0];
  std::vector<double> rest(alpha.begin() + 1, alpha.end());
  Atoms atoms;
  auto branch = [&](double weight, int sub_k, double scale) -> bool {
    if (weight <= 0) return true;
    std::vector<double> sub(rest);
    for (double& x : sub) {
      x *= scale;
      if (x > 1 + kSlack) return false;
      x = std::min(1.0, x);
    }
    auto inner = RecursiveLift(sub, sub_k, offset + 1);
    if (!inner) return false;
    for (auto& [set, p] : *inner) {
      std::vector<int> members = set;
      if (sub_k < k) members.insert(members.begin(), offset);
      atoms.push_back({members, weight * p});
    }
    return true;
  };
  if (!branch(a1, k - 1, (k - 1) / (k - a1))) return std::nullopt;
  if (!branch(1 - a1, k, k / (k - a1))) return std::nullopt;
  return atoms;
}

}  // namespace secgame::testing

#endif  // SECGAME_TESTS_TEST_SUPPORT_H_
