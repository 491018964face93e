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

#include "secgame/game.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>
#include <string>

namespace secgame {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNegativeCost: return "NegativeCost";
    case ErrorCode::kBudgetOutOfRange: return "BudgetOutOfRange";
    case ErrorCode::kEmptyInstance: return "EmptyInstance";
    case ErrorCode::kCardinalityMismatch: return "CardinalityMismatch";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kNoFeasibleCell: return "NoFeasibleCell";
    case ErrorCode::kInfeasibleMarginal: return "InfeasibleMarginal";
    case ErrorCode::kScaleLimit: return "ScaleLimit";
    case ErrorCode::kNumericalFailure: return "NumericalFailure";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

std::string_view SolveMethodName(SolveMethod method) {
  return method == SolveMethod::kLinear ? "linear" : "oracle";
}

GameInstance::GameInstance(std::vector<double> sorted_costs, int attack_budget,
                           int defense_budget, std::vector<int> perm)
    : costs_(std::move(sorted_costs)),
      attack_budget_(attack_budget),
      defense_budget_(defense_budget),
      perm_(std::move(perm)) {
  const int m = num_targets();
  if (m == 0) throw Error(ErrorCode::kEmptyInstance, "no targets");
  if (attack_budget_ < 0 || attack_budget_ > m || defense_budget_ < 0 ||
      defense_budget_ > m) {
    throw Error(ErrorCode::kBudgetOutOfRange,
                "budgets must lie in [0, " + std::to_string(m) + "]");
  }
  for (int j = 0; j < m; ++j) {
    if (!std::isfinite(costs_[j])) {
      throw Error(ErrorCode::kInvalidArgument, "non-finite cost");
    }
    if (costs_[j] < 0) throw Error(ErrorCode::kNegativeCost, "cost below zero");
    if (j > 0 && costs_[j] < costs_[j - 1]) {
      throw Error(ErrorCode::kInvalidArgument, "costs are not sorted");
    }
  }
  if (static_cast<int>(perm_.size()) != m) {
    throw Error(ErrorCode::kInvalidArgument, "perm has the wrong length");
  }
  std::vector<char> seen(m, 0);
  for (int p : perm_) {
    if (p < 0 || p >= m || seen[p]) {
      throw Error(ErrorCode::kInvalidArgument, "perm is not a bijection");
    }
    seen[p] = 1;
  }
}

std::vector<double> GameInstance::ToOriginalOrder(
    std::span<const double> sorted) const {
  std::vector<double> out(sorted.size());
  for (size_t j = 0; j < sorted.size(); ++j) out[perm_[j]] = sorted[j];
  return out;
}

std::vector<double> GameInstance::ToSortedOrder(
    std::span<const double> original) const {
  std::vector<double> out(original.size());
  for (size_t j = 0; j < original.size(); ++j) out[j] = original[perm_[j]];
  return out;
}

std::vector<int> GameInstance::InversePerm() const {
  std::vector<int> inv(perm_.size());
  for (size_t j = 0; j < perm_.size(); ++j) inv[perm_[j]] = static_cast<int>(j);
  return inv;
}

GameInstance Normalize(std::span<const double> raw_costs, int attack_budget,
                       int defense_budget) {
  const int m = static_cast<int>(raw_costs.size());
  if (m == 0) throw Error(ErrorCode::kEmptyInstance, "no targets");
  for (double c : raw_costs) {
    if (std::isnan(c) || std::isinf(c)) {
      throw Error(ErrorCode::kInvalidArgument, "non-finite cost");
    }
    if (c < 0) throw Error(ErrorCode::kNegativeCost, "cost below zero");
  }
  if (attack_budget < 0 || attack_budget > m || defense_budget < 0 ||
      defense_budget > m) {
    throw Error(ErrorCode::kBudgetOutOfRange,
                "budgets must lie in [0, " + std::to_string(m) + "]");
  }
  // Sorting (cost, position) pairs keeps equal costs in input order.
  std::vector<std::pair<double, int>> keyed(m);
  for (int j = 0; j < m; ++j) keyed[j] = {raw_costs[j], j};
  std::sort(keyed.begin(), keyed.end());
  std::vector<int> perm(m);
  std::vector<double> sorted(m);
  for (int j = 0; j < m; ++j) {
    sorted[j] = keyed[j].first;
    perm[j] = keyed[j].second;
  }
  return GameInstance(std::move(sorted), attack_budget, defense_budget,
                      std::move(perm));
}

TargetSubset::TargetSubset(std::vector<int> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw Error(ErrorCode::kInvalidArgument, "duplicate target in subset");
  }
  if (!members_.empty() && members_.front() < 0) {
    throw Error(ErrorCode::kIndexOutOfRange, "negative target index");
  }
}

bool TargetSubset::Contains(int target) const {
  return std::binary_search(members_.begin(), members_.end(), target);
}

MarginalVector::MarginalVector(std::vector<double> values, double budget)
    : values_(std::move(values)), budget_(budget) {
  for (double v : values_) {
    if (!(v >= -kBoundTolerance && v <= 1.0 + kBoundTolerance)) {
      throw Error(ErrorCode::kInfeasibleMarginal,
                  "marginal entry outside [0, 1]: " + std::to_string(v));
    }
  }
  const double sum = Sum();
  const double m = std::max<double>(1.0, static_cast<double>(values_.size()));
  if (std::abs(sum - budget_) > kSumTolerance * m) {
    throw Error(ErrorCode::kInfeasibleMarginal,
                "marginals sum to " + std::to_string(sum) + ", expected " +
                    std::to_string(budget_));
  }
}

double MarginalVector::Sum() const {
  long double sum = 0;
  for (double v : values_) sum += v;
  return static_cast<double>(sum);
}

SparseMixedStrategy::SparseMixedStrategy(std::vector<StrategyAtom> atoms,
                                         int subset_size)
    : atoms_(std::move(atoms)), subset_size_(subset_size) {
  if (atoms_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "strategy has no atoms");
  }
  long double total = 0;
  for (const StrategyAtom& atom : atoms_) {
    if (!(atom.probability > 0)) {
      throw Error(ErrorCode::kInvalidArgument, "non-positive atom probability");
    }
    if (atom.subset.cardinality() != subset_size_) {
      throw Error(ErrorCode::kCardinalityMismatch,
                  "atom size differs from subset_size");
    }
    total += atom.probability;
  }
  if (std::abs(static_cast<double>(total) - 1.0) > 1e-12) {
    throw Error(ErrorCode::kInvalidArgument, "probabilities do not sum to 1");
  }
  for (StrategyAtom& atom : atoms_) {
    atom.probability = static_cast<double>(atom.probability / total);
  }
}

SparseMixedStrategy SparseMixedStrategy::Relabel(std::span<const int> map) const {
  std::vector<StrategyAtom> out;
  out.reserve(atoms_.size());
  for (const StrategyAtom& atom : atoms_) {
    std::vector<int> members;
    members.reserve(atom.subset.members().size());
    for (int j : atom.subset.members()) members.push_back(map[j]);
    out.push_back({TargetSubset(std::move(members)), atom.probability});
  }
  return SparseMixedStrategy(std::move(out), subset_size_);
}

namespace {

void CheckSubset(const TargetSubset& subset, int expected_size, int m,
                 const char* what) {
  if (subset.cardinality() != expected_size) {
    throw Error(ErrorCode::kCardinalityMismatch,
                std::string(what) + " has " +
                    std::to_string(subset.cardinality()) + " targets, expected " +
                    std::to_string(expected_size));
  }
  if (!subset.members().empty() && subset.members().back() >= m) {
    throw Error(ErrorCode::kIndexOutOfRange, std::string(what) +
                                                 " names a target beyond m");
  }
}

std::vector<double> WeightedProducts(const MarginalVector& marginal,
                                     const GameInstance& game) {
  if (marginal.size() != game.num_targets()) {
    throw Error(ErrorCode::kInvalidArgument, "marginal length differs from m");
  }
  std::vector<double> products(marginal.size());
  for (int j = 0; j < marginal.size(); ++j) {
    products[j] = marginal[j] * game.cost(j);
  }
  return products;
}

double SumOf(std::span<const double> values) {
  long double sum = 0;
  for (double v : values) sum += v;
  return static_cast<double>(sum);
}

void CheckBudget(const MarginalVector& marginal, double expected) {
  const double m = std::max(1, marginal.size());
  if (std::abs(marginal.budget() - expected) > MarginalVector::kSumTolerance * m) {
    throw Error(ErrorCode::kInvalidArgument,
                "marginal budget " + std::to_string(marginal.budget()) +
                    " does not match the game (" + std::to_string(expected) + ")");
  }
}

}  // namespace

double PayoffEntry(const TargetSubset& x, const TargetSubset& y,
                   const GameInstance& game) {
  CheckSubset(x, game.attack_budget(), game.num_targets(), "attack set");
  CheckSubset(y, game.defense_budget(), game.num_targets(), "defense set");
  double total = 0;
  for (int l : x.members()) {
    if (!y.Contains(l)) total += game.cost(l);
  }
  return total;
}

double DefenderBestResponseValue(const MarginalVector& alpha,
                                 const GameInstance& game) {
  CheckBudget(alpha, game.attack_budget());
  std::vector<double> products = WeightedProducts(alpha, game);
  const int keep = game.uncovered_count();
  std::nth_element(products.begin(), products.begin() + keep, products.end());
  return SumOf(std::span<const double>(products).first(keep));
}

double AttackerBestResponseValue(const MarginalVector& beta,
                                 const GameInstance& game) {
  CheckBudget(beta, game.uncovered_count());
  std::vector<double> products = WeightedProducts(beta, game);
  const int keep = game.attack_budget();
  std::nth_element(products.begin(), products.begin() + keep, products.end(),
                   std::greater<>());
  return SumOf(std::span<const double>(products).first(keep));
}

MarginalVector MarginalOfStrategy(const SparseMixedStrategy& strategy, int m,
                                  bool complement) {
  std::vector<long double> acc(m, 0.0L);
  long double total = 0;
  for (const StrategyAtom& atom : strategy.atoms()) {
    for (int j : atom.subset.members()) {
      if (j >= m) {
        throw Error(ErrorCode::kIndexOutOfRange, "atom names a target beyond m");
      }
      acc[j] += atom.probability;
    }
    total += atom.probability;
  }
  std::vector<double> values(m);
  for (int j = 0; j < m; ++j) {
    values[j] = static_cast<double>(complement ? total - acc[j] : acc[j]);
  }
  const int budget =
      complement ? m - strategy.subset_size() : strategy.subset_size();
  return MarginalVector(std::move(values), budget);
}

AttackStructure ReadAttackStructure(std::span<const double> sorted_alpha,
                                    std::span<const double> sorted_costs,
                                    double tolerance) {
  const int m = static_cast<int>(sorted_alpha.size());
  if (m == 0) return {};
  const double top = sorted_alpha[m - 1] * sorted_costs[m - 1];
  int s = m;  // 1-based
  while (s > 1 &&
         std::abs(sorted_alpha[s - 2] * sorted_costs[s - 2] - top) <= tolerance) {
    --s;
  }
  int lowest = s;  // 1-based index of the lowest positive alpha at or below s
  while (lowest > 1 && sorted_alpha[lowest - 2] > tolerance) --lowest;
  return {s, s - lowest};
}

}  // namespace secgame
