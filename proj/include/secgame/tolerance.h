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

#ifndef SECGAME_TOLERANCE_H_
#define SECGAME_TOLERANCE_H_

#include <algorithm>
#include <cmath>

namespace secgame {

// Relative slack used by every feasibility inequality of the U and W tables.
inline double FeasibilitySlack(double lhs, double rhs) {
  return 1e-12 * std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

// Weak inequalities include the boundary band; strict ones exclude it.
inline bool AtLeast(double lhs, double rhs) {
  return lhs >= rhs - FeasibilitySlack(lhs, rhs);
}
inline bool AtMost(double lhs, double rhs) {
  return lhs <= rhs + FeasibilitySlack(lhs, rhs);
}
inline bool StrictlyAbove(double lhs, double rhs) {
  return lhs > rhs + FeasibilitySlack(lhs, rhs);
}
inline bool StrictlyBelow(double lhs, double rhs) {
  return lhs < rhs - FeasibilitySlack(lhs, rhs);
}

inline bool RelativelyClose(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

}  // namespace secgame

#endif  // SECGAME_TOLERANCE_H_
