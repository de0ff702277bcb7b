// Copyright 2026 The tpg authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TPG_COALITION_HPP
#define TPG_COALITION_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace tpg {

/// Non-empty set of team indices, stored strictly increasing.
class Coalition {
 public:
  /// Builds a coalition from 0-based team indices. Input order does not
  /// matter; duplicates and out-of-range indices are rejected.
  static Coalition of(std::vector<int> members, int team_count) {
    if (members.empty()) throw std::invalid_argument("coalition must be non-empty");
    std::sort(members.begin(), members.end());
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (members[i] < 0 || members[i] >= team_count) {
        throw std::invalid_argument("coalition member " + std::to_string(members[i]) +
                                    " out of range");
      }
      if (i > 0 && members[i] == members[i - 1]) {
        throw std::invalid_argument("duplicate coalition member " +
                                    std::to_string(members[i]));
      }
    }
    Coalition c;
    c.members_ = std::move(members);
    return c;
  }

  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }

  bool contains(int team) const {
    return std::binary_search(members_.begin(), members_.end(), team);
  }

  bool operator==(const Coalition&) const = default;

 private:
  Coalition() = default;
  std::vector<int> members_;
};

}  // namespace tpg

#endif  // TPG_COALITION_HPP
