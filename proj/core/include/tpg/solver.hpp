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

#ifndef TPG_SOLVER_HPP
#define TPG_SOLVER_HPP

#include <optional>
#include <vector>

#include "tpg/coalition.hpp"
#include "tpg/game.hpp"
#include "tpg/matrix.hpp"
#include "tpg/rational.hpp"

namespace tpg {

inline constexpr long long kDefaultBruteForceBudget = 10'000'000;
/// Cap on the instance total for the pseudo-polynomial improvement solver:
/// its running time is quadratic in the total, so larger inputs are rejected
/// with a diagnostic rather than ground through.
inline constexpr long long kSolverTotalCap = 1'000'000;

struct SearchOptions {
  int workers = 1;  // >1 splits the search deterministically (order-aware merge)
};

/// Single-slot feasibility subproblem behind an improvement step at one
/// candidate slot. For a coalition of t teams at slot k:
///   capacities  a_i  - true availabilities of the members at k (each >= 1)
///   thresholds  p_i  - the members' current pay-offs, each in [0,1), sum <= 1
///   outsider_mass p  - declared sum of the non-members at k
///   winner_margin M  - max declared column sum over the other slots after
///                      zeroing the coalition rows (0 when m == 1)
/// A solution is an integer vector x with 1 <= x_i <= a_i,
/// x_i / (p + sum x) > p_i exactly, and p + sum x > M so that slot k ends up
/// the unique winner.
struct ThresholdCoveringInstance {
  ThresholdCoveringInstance(std::vector<long long> capacities,
                            std::vector<Rational> thresholds,
                            long long outsider_mass, long long winner_margin);

  std::vector<long long> capacities;
  std::vector<Rational> thresholds;
  long long outsider_mass = 0;
  long long winner_margin = 0;
};

/// A joint deviation by a coalition in which every member strictly improves.
/// Steps produced by the threshold solver are in single-slot normal form
/// (every member row supported on target_slot alone); brute-force steps may
/// use several slots, in which case target_slot is empty.
struct ImprovementStep {
  ImprovementStep(Coalition coalition_, std::optional<int> target_slot_,
                  std::vector<std::vector<long long>> new_rows_, Profile result_,
                  std::vector<Rational> old_payoffs_, std::vector<Rational> new_payoffs_)
      : coalition(std::move(coalition_)),
        target_slot(target_slot_),
        new_rows(std::move(new_rows_)),
        result(std::move(result_)),
        old_payoffs(std::move(old_payoffs_)),
        new_payoffs(std::move(new_payoffs_)) {}

  Coalition coalition;
  std::optional<int> target_slot;
  std::vector<std::vector<long long>> new_rows;  // one row per member, length m
  Profile result;                                // full profile after the step
  std::vector<Rational> old_payoffs;             // per member, before
  std::vector<Rational> new_payoffs;             // per member, after
};

/// Slots where every coalition member has positive true availability,
/// ascending. Only these can host a single-slot improvement.
std::vector<int> candidate_slots(const AvailabilityMatrix& truth, const Coalition& coalition);

/// Assembles the threshold instance for one candidate slot. Preconditions:
/// valid profile, slot in candidate_slots, and every member pay-off < 1.
ThresholdCoveringInstance build_threshold_instance(const AvailabilityMatrix& truth,
                                                   const Profile& declared,
                                                   const Coalition& coalition, int slot);

/// Unary-encoding solver: tries every total w = sum x_i from t up to
/// sum a_i ascending; for each w takes the minimal x_i strictly above
/// p_i * (p + w), rejects w if a minimum exceeds its capacity, the minima
/// exceed w, or p + w <= M, and otherwise pads the minimal vector greedily
/// (lowest index first) so the total equals w exactly. Deterministic:
/// returns the solution for the smallest feasible w, or nullopt.
std::optional<std::vector<long long>> solve_threshold_unary(
    const ThresholdCoveringInstance& instance);

/// Finds an improvement step for the given coalition, scanning candidate
/// slots ascending and solving each threshold instance. Returned steps are
/// re-checked with verify_improvement; an unverifiable step is a bug and
/// throws std::logic_error. Inputs whose total exceeds kSolverTotalCap are
/// rejected with budget_error.
std::optional<ImprovementStep> find_improvement_step(const AvailabilityMatrix& truth,
                                                     const Profile& declared,
                                                     const Coalition& coalition);

/// First coalition (size ascending, then lexicographic by member indices)
/// of at most max_coalition teams that has an improvement step.
std::optional<ImprovementStep> find_improvement_any(const AvailabilityMatrix& truth,
                                                    const Profile& declared,
                                                    int max_coalition,
                                                    const SearchOptions& options = {});

/// Ground-truth oracle: enumerates every joint replacement of the coalition
/// rows (not only single-slot ones) in lexicographic order and returns the
/// first strict improvement. The enumeration size prod (a[i][j]+1) over the
/// member cells must stay within budget, else budget_error.
std::optional<ImprovementStep> brute_force_improvement(
    const AvailabilityMatrix& truth, const Profile& declared, const Coalition& coalition,
    long long budget = kDefaultBruteForceBudget);

/// True iff the step's profile is valid against the instance, differs from
/// `declared` exactly on the coalition rows as recorded, and every member's
/// pay-off strictly increases.
bool verify_improvement(const AvailabilityMatrix& truth, const Profile& declared,
                        const ImprovementStep& step);

}  // namespace tpg

#endif  // TPG_SOLVER_HPP
