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

#include "tpg/game.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tpg {

ProfileCheck validate_profile(const AvailabilityMatrix& truth, const Profile& declared) {
  ProfileCheck check;
  if (truth.teams() != declared.teams() || truth.slots() != declared.slots()) {
    check.violations.push_back({-1, -1, 0, 0});
    return check;
  }
  for (int i = 0; i < truth.teams(); ++i) {
    for (int j = 0; j < truth.slots(); ++j) {
      if (declared.at(i, j) > truth.at(i, j)) {
        check.violations.push_back({i, j, declared.at(i, j), truth.at(i, j)});
      }
    }
  }
  check.valid = check.violations.empty();
  return check;
}

void require_valid_profile(const AvailabilityMatrix& truth, const Profile& declared) {
  ProfileCheck check = validate_profile(truth, declared);
  if (check.valid) return;
  std::string message = "invalid profile:";
  for (const ProfileViolation& v : check.violations) {
    if (v.team < 0) {
      message += " shape mismatch;";
    } else {
      message += " team " + std::to_string(v.team + 1) + " declares " +
                 std::to_string(v.declared) + " > " + std::to_string(v.available) +
                 " at slot " + std::to_string(v.slot + 1) + ";";
    }
  }
  throw std::invalid_argument(message);
}

std::vector<int> winners(const Profile& declared) {
  long long best = -1;
  std::vector<int> result;
  for (int j = 0; j < declared.slots(); ++j) {
    long long sum = declared.column_sum(j);
    if (sum > best) {
      best = sum;
      result.clear();
    }
    if (sum == best) result.push_back(j);
  }
  return result;
}

Rational team_power(const Profile& declared, int team, int slot) {
  long long sum = declared.column_sum(slot);
  long long mine = declared.at(team, slot);
  if (sum == 0) return Rational(0);
  return Rational(BigInt(mine), BigInt(sum));
}

// Co-winners share the maximum column sum, so the maximin pay-off is the
// minimum declared cell over the winning slots divided by that common sum.
Rational payoff(const Profile& declared, int team) {
  long long best = 0;
  for (int j = 0; j < declared.slots(); ++j) best = std::max(best, declared.column_sum(j));
  if (best == 0) return Rational(0);
  long long min_cell = -1;
  for (int j = 0; j < declared.slots(); ++j) {
    if (declared.column_sum(j) != best) continue;
    long long cell = declared.at(team, j);
    if (min_cell < 0 || cell < min_cell) min_cell = cell;
  }
  return Rational(BigInt(min_cell), BigInt(best));
}

std::vector<Rational> payoffs(const Profile& declared) {
  std::vector<Rational> result;
  result.reserve(declared.teams());
  for (int i = 0; i < declared.teams(); ++i) result.push_back(payoff(declared, i));
  return result;
}

}  // namespace tpg
