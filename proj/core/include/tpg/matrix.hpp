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

#ifndef TPG_MATRIX_HPP
#define TPG_MATRIX_HPP

#include <cstdint>
#include <vector>

namespace tpg {

/// n x m matrix of non-negative integer availabilities. Row i is team i's
/// availability vector over the m time slots. The same type carries declared
/// profiles; binding a profile to an instance happens via validate_profile.
///
/// Entries are bounded so that any column sum (and the matrix total) stays
/// exact in 64-bit arithmetic.
class AvailabilityMatrix {
 public:
  static constexpr long long kMaxEntry = 1'000'000'000'000LL;  // 1e12
  static constexpr long long kMaxTotal = 1'000'000'000'000'000LL;  // 1e15
  static constexpr long long kMaxCells = 100'000'000LL;  // 1e8

  AvailabilityMatrix(int teams, int slots);
  AvailabilityMatrix(int teams, int slots, std::vector<long long> entries);

  int teams() const { return teams_; }
  int slots() const { return slots_; }

  long long at(int team, int slot) const { return cells_[index(team, slot)]; }
  void set(int team, int slot, long long value);

  long long column_sum(int slot) const;
  /// Sum of all entries (the symbol written s elsewhere).
  long long total() const;
  long long max_entry() const;
  /// Maximum column sum (the symbol written x elsewhere).
  long long max_column_sum() const;

  bool is_zero() const { return total() == 0; }

  const std::vector<long long>& entries() const { return cells_; }

  bool operator==(const AvailabilityMatrix&) const = default;

 private:
  std::size_t index(int team, int slot) const;

  int teams_ = 0;
  int slots_ = 0;
  std::vector<long long> cells_;
};

/// A declared availability matrix. Structurally identical to an instance;
/// validity against an instance (same shape, 0 <= b <= a) is checked by
/// validate_profile.
using Profile = AvailabilityMatrix;

}  // namespace tpg

#endif  // TPG_MATRIX_HPP
