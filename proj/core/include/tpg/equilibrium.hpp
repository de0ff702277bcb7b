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

#ifndef TPG_EQUILIBRIUM_HPP
#define TPG_EQUILIBRIUM_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "tpg/matrix.hpp"
#include "tpg/solver.hpp"

namespace tpg {

inline constexpr long long kDefaultSearchBudget = 100'000'000;

struct NeVerdict {
  bool is_equilibrium = false;
  std::optional<ImprovementStep> witness;  // present iff not an equilibrium
};

/// No coalition of at most `strength` teams has an improvement step.
NeVerdict is_t_strong_ne(const AvailabilityMatrix& truth, const Profile& declared,
                         int strength, const SearchOptions& options = {});

struct SafeSingleSlot {
  int slot = -1;
  int team = -1;
  long long availability = 0;
};

/// First slot where exactly one team is available, with availability at
/// least every other team's maximum entry anywhere.
std::optional<SafeSingleSlot> find_safe_single_team_slot(const AvailabilityMatrix& truth);

/// First slot with >= 2 available teams where no team can prevent the slot
/// from co-winning: a[i][j'] <= sum_{i' != i} a[i'][j] for all i and j' != j.
std::optional<int> find_safe_multiple_team_slot(const AvailabilityMatrix& truth);

/// Constructs a profile with no single-team improvement step. Supported for
/// max entry <= 3; larger instances raise unsupported_error (no construction
/// is known there). The output is always re-verified; a verification failure
/// is a hard std::logic_error carrying the instance.
Profile construct_1strong_ne(const AvailabilityMatrix& truth);

enum class ConstructionPath { direct, exhaustive_fallback };

struct ConstructedProfile {
  Profile profile;
  ConstructionPath path = ConstructionPath::direct;
};

/// Constructs a profile with no improvement step for coalitions of at most
/// two teams, for instances with max entry <= 1. Tries a ladder of direct
/// candidates, each verified; if all fail, falls back to exhaustive search
/// and reports which path produced the result.
ConstructedProfile construct_2strong_ne_amax1(const AvailabilityMatrix& truth,
                                              long long budget = kDefaultSearchBudget,
                                              const SearchOptions& options = {});

/// Enumerates profiles in lexicographic order over the flattened entries
/// (smallest first) and returns the first `strength`-strong equilibrium, or
/// nullopt when the space is exhausted. Profiles in which some winning slot
/// has an under-declaring team are pruned. The space size prod (a[i][j]+1)
/// must stay within budget, else budget_error.
std::optional<Profile> exhaustive_ne_search(const AvailabilityMatrix& truth, int strength,
                                            long long budget = kDefaultSearchBudget,
                                            const SearchOptions& options = {});

enum class DynamicsStatus { equilibrium_reached, cycle_detected, step_budget_exhausted };

/// Improvement dynamics under the deterministic lexicographic step policy.
/// Consecutive profiles differ exactly by the recorded step.
struct DynamicsTrace {
  explicit DynamicsTrace(Profile initial_) : initial(std::move(initial_)) {}

  Profile initial;
  std::vector<ImprovementStep> steps;
  DynamicsStatus status = DynamicsStatus::equilibrium_reached;
  /// On a cycle: index (0 = initial profile, k = profile after step k) where
  /// the repeated profile first occurred.
  std::optional<std::size_t> cycle_start;

  const Profile& final_profile() const {
    return steps.empty() ? initial : steps.back().result;
  }
};

/// Repeatedly applies find_improvement_any until no coalition of at most
/// max_coalition teams can improve, a profile repeats, or max_steps steps
/// have been taken.
DynamicsTrace run_dynamics(const AvailabilityMatrix& truth, const Profile& start,
                           int max_coalition, std::size_t max_steps,
                           const SearchOptions& options = {});

}  // namespace tpg

#endif  // TPG_EQUILIBRIUM_HPP
