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

#ifndef TPG_GAME_HPP
#define TPG_GAME_HPP

#include <vector>

#include "tpg/matrix.hpp"
#include "tpg/rational.hpp"

namespace tpg {

/// One cell where a declaration exceeds the true availability. A shape
/// mismatch is reported as a single violation with team == slot == -1.
struct ProfileViolation {
  int team = -1;
  int slot = -1;
  long long declared = 0;
  long long available = 0;
};

struct ProfileCheck {
  bool valid = false;
  std::vector<ProfileViolation> violations;
};

/// Valid iff shapes match and 0 <= b <= a elementwise.
ProfileCheck validate_profile(const AvailabilityMatrix& truth, const Profile& declared);

/// Throws std::invalid_argument listing the violations when invalid.
void require_valid_profile(const AvailabilityMatrix& truth, const Profile& declared);

/// All slots attaining the maximum declared column sum, ascending. Never
/// empty; when every column sums to zero all slots co-win.
std::vector<int> winners(const Profile& declared);

/// Declared share of team `team` at slot `slot`: b[i][j] / column_sum(j).
/// A zero-sum column yields 0 by convention, which keeps the all-zero
/// profile well defined.
Rational team_power(const Profile& declared, int team, int slot);

/// Maximin pay-off: minimum relative power over all co-winning slots.
Rational payoff(const Profile& declared, int team);

/// Pay-offs of all teams in one pass.
std::vector<Rational> payoffs(const Profile& declared);

}  // namespace tpg

#endif  // TPG_GAME_HPP
