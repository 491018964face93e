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

#ifndef SECGAME_GAME_H_
#define SECGAME_GAME_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "secgame/errors.h"

namespace secgame {

// A security game with additive utility: the attacker picks `attack_budget`
// targets, the defender protects `defense_budget` of them, and the attacker
// collects the cost of every attacked target left unprotected.
//
// Costs are stored in ascending order. perm()[j] is the position, in the
// caller's original input, of the target at sorted position j. All indices
// are 0-based.
class GameInstance {
 public:
  GameInstance(std::vector<double> sorted_costs, int attack_budget,
               int defense_budget, std::vector<int> perm);

  int num_targets() const { return static_cast<int>(costs_.size()); }
  int attack_budget() const { return attack_budget_; }
  int defense_budget() const { return defense_budget_; }
  // Number of targets a pure defense leaves uncovered, m - k_d.
  int uncovered_count() const { return num_targets() - defense_budget_; }

  std::span<const double> costs() const { return costs_; }
  double cost(int j) const { return costs_[j]; }
  std::span<const int> perm() const { return perm_; }
  int original_index(int sorted_index) const { return perm_[sorted_index]; }

  // Reorders a per-target vector from sorted positions to original positions.
  std::vector<double> ToOriginalOrder(std::span<const double> sorted) const;
  // Reorders a per-target vector from original positions to sorted positions.
  std::vector<double> ToSortedOrder(std::span<const double> original) const;
  std::vector<int> InversePerm() const;

 private:
  std::vector<double> costs_;
  int attack_budget_;
  int defense_budget_;
  std::vector<int> perm_;
};

// Stable ascending sort of the raw costs; throws kEmptyInstance,
// kNegativeCost or kBudgetOutOfRange.
GameInstance Normalize(std::span<const double> raw_costs, int attack_budget,
                       int defense_budget);

// A k-subset of targets, kept sorted and duplicate free.
class TargetSubset {
 public:
  TargetSubset() = default;
  explicit TargetSubset(std::vector<int> members);

  std::span<const int> members() const { return members_; }
  int cardinality() const { return static_cast<int>(members_.size()); }
  bool Contains(int target) const;

  friend bool operator==(const TargetSubset&, const TargetSubset&) = default;
  friend auto operator<=>(const TargetSubset&, const TargetSubset&) = default;

 private:
  std::vector<int> members_;
};

// Per-target probability mass: attack marginals (budget k_a) or
// non-protection marginals (budget m - k_d).
class MarginalVector {
 public:
  // Entries must lie in [0, 1] and sum to `budget`, both within
  // kBoundTolerance / kSumTolerance * m; otherwise kInfeasibleMarginal.
  MarginalVector() = default;
  MarginalVector(std::vector<double> values, double budget);

  static constexpr double kBoundTolerance = 1e-9;
  static constexpr double kSumTolerance = 1e-9;

  std::span<const double> values() const { return values_; }
  double operator[](int j) const { return values_[j]; }
  int size() const { return static_cast<int>(values_.size()); }
  double budget() const { return budget_; }
  double Sum() const;

 private:
  std::vector<double> values_;
  double budget_ = 0.0;
};

struct StrategyAtom {
  TargetSubset subset;
  double probability;
};

// A mixed strategy over k-subsets listed by support.
class SparseMixedStrategy {
 public:
  // Probabilities must be positive and sum to 1 within 1e-12 (after which
  // they are renormalized); every subset must have `subset_size` members.
  SparseMixedStrategy(std::vector<StrategyAtom> atoms, int subset_size);

  std::span<const StrategyAtom> atoms() const { return atoms_; }
  int subset_size() const { return subset_size_; }
  int num_atoms() const { return static_cast<int>(atoms_.size()); }

  // Relabels every member through `map` (e.g. sorted -> original position).
  SparseMixedStrategy Relabel(std::span<const int> map) const;

 private:
  std::vector<StrategyAtom> atoms_;
  int subset_size_;
};

enum class SolveMethod { kLinear, kOracle };
std::string_view SolveMethodName(SolveMethod method);

// Everything a solve reports. Marginals, active sets and strategies use
// original target positions; s_star and r_star are 1-based structural
// indices in sorted-cost space.
struct SaddleCertificate {
  double value = 0.0;
  MarginalVector alpha;
  MarginalVector beta;
  int s_star = 0;
  int r_star = 0;
  std::vector<int> attacker_active;
  std::vector<int> defender_active;
  bool defender_pure = false;
  SolveMethod method = SolveMethod::kLinear;
  std::optional<SparseMixedStrategy> attacker_strategy;
  std::optional<SparseMixedStrategy> defender_strategy;
};

// Sum of costs over x minus y. Sizes must match the budgets
// (kCardinalityMismatch) and members must be targets (kIndexOutOfRange).
double PayoffEntry(const TargetSubset& x, const TargetSubset& y,
                   const GameInstance& game);

// Sum of the m - k_d smallest alpha_l * phi_l: what the attacker collects
// against a best-responding defender.
double DefenderBestResponseValue(const MarginalVector& alpha,
                                 const GameInstance& game);

// Sum of the k_a largest beta_l * phi_l: what a best-responding attacker
// collects against the defense.
double AttackerBestResponseValue(const MarginalVector& beta,
                                 const GameInstance& game);

// Membership marginals of a mixed strategy. With complement=true each atom
// contributes to the targets it does NOT contain, and the budget is
// m - subset_size.
MarginalVector MarginalOfStrategy(const SparseMixedStrategy& strategy, int m,
                                  bool complement);

// Structural indices (s, r) read off sorted attack marginals: products
// alpha_j * phi_j are level from s up, and alpha vanishes below s - r.
struct AttackStructure {
  int s = 1;
  int r = 0;
};
AttackStructure ReadAttackStructure(std::span<const double> sorted_alpha,
                                    std::span<const double> sorted_costs,
                                    double tolerance);

}  // namespace secgame

#endif  // SECGAME_GAME_H_
