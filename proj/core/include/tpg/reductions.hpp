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

#ifndef TPG_REDUCTIONS_HPP
#define TPG_REDUCTIONS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tpg/matrix.hpp"

namespace tpg {

inline constexpr long long kDefaultCoverBudget = 10'000'000;

/// Set cover instance: family of subsets of a universe plus a cover size.
/// Elements are 0-based internally (1-based in the .cov text format).
class SetCoverInstance {
 public:
  SetCoverInstance(int universe_size, std::vector<std::vector<int>> sets, int cover_size);

  int universe_size() const { return universe_size_; }
  int family_size() const { return static_cast<int>(sets_.size()); }
  int cover_size() const { return cover_size_; }
  const std::vector<std::vector<int>>& sets() const { return sets_; }

  /// Number of sets containing the element.
  int frequency(int element) const;
  int max_frequency() const;

 private:
  int universe_size_;
  std::vector<std::vector<int>> sets_;  // each sorted ascending
  int cover_size_;
};

/// Restricted exact-cover instance: 3n sets of size exactly 3 over 3n
/// elements, n >= 2, every element in exactly 3 sets.
class ExactCoverInstance {
 public:
  ExactCoverInstance(int n, std::vector<std::array<int, 3>> sets);

  int n() const { return n_; }
  int element_count() const { return 3 * n_; }
  const std::vector<std::array<int, 3>>& sets() const { return sets_; }

 private:
  int n_;
  std::vector<std::array<int, 3>> sets_;  // each sorted ascending
};

/// Game produced from a set cover instance. Slots are the element slots
/// 0..n_u-1, then alpha (index n_u), then beta (index n_u+1). Teams are the
/// set teams 0..m-1, then the element dummies grouped by (element, copy),
/// then the alpha dummies, then the beta dummies. Every team declares its
/// truth except the set teams, which declare 0 at beta.
struct ReducedSetCoverGame {
  AvailabilityMatrix truth;
  Profile declared;
  int coalition_bound = 0;  // = the instance's cover size
  int set_team_count = 0;
  int alpha_slot = 0;
  int beta_slot = 0;
};

ReducedSetCoverGame setcover_to_tpg(const SetCoverInstance& instance);

/// Game produced from an exact-cover instance: slots e_1..e_{3n} then alpha;
/// team j has availability n at each of its elements and 1 at alpha.
struct ReducedExactCoverGame {
  AvailabilityMatrix truth;
  int coalition_bound = 0;  // = 2n
  int alpha_slot = 0;
};

ReducedExactCoverGame x3c_to_tpg(const ExactCoverInstance& instance);

/// Profile in which every team declares truth at its element slots and 0 at
/// alpha, so all element slots co-win and every pay-off is 0.
Profile x3c_canonical_profile(const ExactCoverInstance& instance);

/// First size-k cover in lexicographic order, or nullopt. C(m, k) must stay
/// within budget, else budget_error.
std::optional<std::vector<int>> brute_force_set_cover(const SetCoverInstance& instance,
                                                      long long budget = kDefaultCoverBudget);

/// First size-n exact (disjoint) cover in lexicographic order, or nullopt.
std::optional<std::vector<int>> brute_force_exact_cover(
    const ExactCoverInstance& instance, long long budget = kDefaultCoverBudget);

/// Seeded deterministic instance generator: entries i.i.d. uniform on
/// [0, max_availability]. Identical seed gives identical matrices on every
/// platform.
AvailabilityMatrix random_instance(int teams, int slots, long long max_availability,
                                   std::uint64_t seed);

using CoverProblem = std::variant<SetCoverInstance, ExactCoverInstance>;

// The `.cov` text format:
//   line 1: `setcover v1 <n_u> <m_f> <k>`  or  `x3c v1 <n>`
//   one set per following line, space-separated 1-based element indices
// `#` comment lines are skipped; trailing newline required.
CoverProblem parse_cover(std::string_view text);
CoverProblem load_cover(const std::string& path);

}  // namespace tpg

#endif  // TPG_REDUCTIONS_HPP
