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


#ifndef SECGAME_SRC_COMBINATIONS_H_
#define SECGAME_SRC_COMBINATIONS_H_

#include <numeric>
#include <vector>

namespace secgame::internal {

// Lexicographic k-subsets of {0..n-1}.
class CombinationWalker {
 public:
  CombinationWalker(int n, int k) : n_(n), current_(k) {
    std::iota(current_.begin(), current_.end(), 0);
  }

  const std::vector<int>& current() const { return current_; }

  // Advances to the next subset; false after the last one.
  bool Next() {
    const int k = static_cast<int>(current_.size());
    int pos = k - 1;
    while (pos >= 0 && current_[pos] == n_ - k + pos) --pos;
    if (pos < 0) return false;
    ++current_[pos];
    for (int j = pos + 1; j < k; ++j) current_[j] = current_[j - 1] + 1;
    return true;
  }

 private:
  int n_;
  std::vector<int> current_;
};

}  // namespace secgame::internal

#endif  // SECGAME_SRC_COMBINATIONS_H_
