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

#include "tpg/solver.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "tpg/errors.hpp"
#include "tpg/format.hpp"

namespace tpg {

namespace {

// Exact a/b > c/d for non-negative 64-bit operands. Safe because matrix
// totals are capped at 1e15, so cross products stay below 1e30.
bool frac_greater(long long a_num, long long a_den, long long c_num, long long c_den) {
  return static_cast<__int128>(a_num) * c_den > static_cast<__int128>(c_num) * a_den;
}

void check_coalition(const AvailabilityMatrix& truth, const Coalition& coalition) {
  if (coalition.members().back() >= truth.teams()) {
    throw std::invalid_argument("coalition member out of range for this instance");
  }
}

void check_solver_cap(const AvailabilityMatrix& truth) {
  if (truth.total() > kSolverTotalCap) {
    throw budget_error(
        "instance total " + std::to_string(truth.total()) +
        " exceeds the unary solver cap " + std::to_string(kSolverTotalCap) +
        "; the pseudo-polynomial algorithm is quadratic in the total");
  }
}

// Smallest integer strictly above threshold * denom, never below 1.
long long minimal_declaration(const Rational& threshold, long long denom) {
  BigInt bound = (threshold.numerator() * denom) / threshold.denominator();
  BigInt min_x = bound + 1;
  // Thresholds are < 1 and denom <= p + total, so this always fits.
  return min_x.convert_to<long long>();
}

// Single-slot search for one coalition with the profile's pay-offs already
// computed. Shared by find_improvement_step and find_improvement_any.
std::optional<ImprovementStep> step_for_coalition(const AvailabilityMatrix& truth,
                                                  const Profile& declared,
                                                  const std::vector<Rational>& current,
                                                  const Coalition& coalition) {
  const std::vector<int>& members = coalition.members();
  const Rational one(1);
  std::vector<Rational> member_payoffs;
  member_payoffs.reserve(members.size());
  for (int i : members) {
    if (current[i] >= one) return std::nullopt;  // a pay-off of 1 cannot improve
    member_payoffs.push_back(current[i]);
  }

  for (int k : candidate_slots(truth, coalition)) {
    std::vector<long long> capacities;
    capacities.reserve(members.size());
    for (int i : members) capacities.push_back(truth.at(i, k));

    long long outsider = declared.column_sum(k);
    for (int i : members) outsider -= declared.at(i, k);

    long long margin = 0;
    for (int j = 0; j < declared.slots(); ++j) {
      if (j == k) continue;
      long long sum = declared.column_sum(j);
      for (int i : members) sum -= declared.at(i, j);
      margin = std::max(margin, sum);
    }

    ThresholdCoveringInstance instance(std::move(capacities), member_payoffs, outsider,
                                       margin);
    std::optional<std::vector<long long>> solution = solve_threshold_unary(instance);
    if (!solution) continue;

    Profile result = declared;
    std::vector<std::vector<long long>> rows;
    rows.reserve(members.size());
    for (std::size_t idx = 0; idx < members.size(); ++idx) {
      std::vector<long long> row(declared.slots(), 0);
      row[k] = (*solution)[idx];
      for (int j = 0; j < declared.slots(); ++j) result.set(members[idx], j, row[j]);
      rows.push_back(std::move(row));
    }
    std::vector<Rational> after;
    after.reserve(members.size());
    for (int i : members) after.push_back(payoff(result, i));

    ImprovementStep step(coalition, k, std::move(rows), std::move(result), member_payoffs,
                         std::move(after));
    if (!verify_improvement(truth, declared, step)) {
      throw std::logic_error(
          "internal inconsistency: threshold solver produced a step that does not "
          "verify\ninstance:\n" +
          serialize_instance(truth) + "profile:\n" + serialize_instance(declared));
    }
    return step;
  }
  return std::nullopt;
}

// Coalitions of size 1..max_size over [0, n), size ascending then
// lexicographic by member indices.
class CoalitionSequence {
 public:
  CoalitionSequence(int team_count, int max_size)
      : team_count_(team_count), max_size_(max_size) {}

  std::optional<std::vector<int>> next() {
    if (size_ == 0) {
      size_ = 1;
      current_ = {0};
      return current_;
    }
    int i = size_ - 1;
    while (i >= 0 && current_[i] == team_count_ - size_ + i) --i;
    if (i < 0) {
      ++size_;
      if (size_ > max_size_ || size_ > team_count_) return std::nullopt;
      current_.resize(size_);
      std::iota(current_.begin(), current_.end(), 0);
      return current_;
    }
    ++current_[i];
    for (int j = i + 1; j < size_; ++j) current_[j] = current_[j - 1] + 1;
    return current_;
  }

 private:
  int team_count_;
  int max_size_;
  int size_ = 0;
  std::vector<int> current_;
};

}  // namespace

ThresholdCoveringInstance::ThresholdCoveringInstance(std::vector<long long> capacities_,
                                                     std::vector<Rational> thresholds_,
                                                     long long outsider_mass_,
                                                     long long winner_margin_)
    : capacities(std::move(capacities_)),
      thresholds(std::move(thresholds_)),
      outsider_mass(outsider_mass_),
      winner_margin(winner_margin_) {
  if (capacities.empty()) throw std::invalid_argument("threshold instance needs t >= 1");
  if (thresholds.size() != capacities.size()) {
    throw std::invalid_argument("capacity/threshold length mismatch");
  }
  long long total = 0;
  for (long long c : capacities) {
    if (c < 1) throw std::invalid_argument("capacities must be positive");
    total += c;
    if (total > AvailabilityMatrix::kMaxTotal) {
      throw std::invalid_argument("capacities exceed supported range");
    }
  }
  Rational sum(0);
  const Rational zero(0), one(1);
  for (const Rational& t : thresholds) {
    if (t < zero || t >= one) throw std::invalid_argument("thresholds must lie in [0, 1)");
    sum = sum + t;
  }
  if (sum > one) throw std::invalid_argument("thresholds must sum to at most 1");
  if (outsider_mass < 0) throw std::invalid_argument("outsider mass must be non-negative");
  if (winner_margin < 0) throw std::invalid_argument("winner margin must be non-negative");
}

std::vector<int> candidate_slots(const AvailabilityMatrix& truth, const Coalition& coalition) {
  check_coalition(truth, coalition);
  std::vector<int> slots;
  for (int k = 0; k < truth.slots(); ++k) {
    bool all_positive = true;
    for (int i : coalition.members()) {
      if (truth.at(i, k) < 1) {
        all_positive = false;
        break;
      }
    }
    if (all_positive) slots.push_back(k);
  }
  return slots;
}

ThresholdCoveringInstance build_threshold_instance(const AvailabilityMatrix& truth,
                                                   const Profile& declared,
                                                   const Coalition& coalition, int slot) {
  require_valid_profile(truth, declared);
  check_coalition(truth, coalition);
  std::vector<int> slots = candidate_slots(truth, coalition);
  if (!std::binary_search(slots.begin(), slots.end(), slot)) {
    throw std::invalid_argument("slot " + std::to_string(slot + 1) +
                                " is not a candidate slot for this coalition");
  }

  std::vector<long long> capacities;
  std::vector<Rational> thresholds;
  for (int i : coalition.members()) {
    capacities.push_back(truth.at(i, slot));
    thresholds.push_back(payoff(declared, i));
  }
  long long outsider = declared.column_sum(slot);
  for (int i : coalition.members()) outsider -= declared.at(i, slot);
  long long margin = 0;
  for (int j = 0; j < declared.slots(); ++j) {
    if (j == slot) continue;
    long long sum = declared.column_sum(j);
    for (int i : coalition.members()) sum -= declared.at(i, j);
    margin = std::max(margin, sum);
  }
  return ThresholdCoveringInstance(std::move(capacities), std::move(thresholds), outsider,
                                   margin);
}

std::optional<std::vector<long long>> solve_threshold_unary(
    const ThresholdCoveringInstance& instance) {
  const std::size_t t = instance.capacities.size();
  long long capacity_total = 0;
  for (long long c : instance.capacities) capacity_total += c;
  if (capacity_total > kSolverTotalCap) {
    throw budget_error("threshold instance too large for the unary algorithm");
  }

  std::vector<long long> minimal(t);
  for (long long w = static_cast<long long>(t); w <= capacity_total; ++w) {
    if (instance.outsider_mass + w <= instance.winner_margin) continue;
    long long denom = instance.outsider_mass + w;
    bool feasible = true;
    long long sum = 0;
    for (std::size_t i = 0; i < t; ++i) {
      long long need = minimal_declaration(instance.thresholds[i], denom);
      if (need > instance.capacities[i]) {
        feasible = false;
        break;
      }
      minimal[i] = need;
      sum += need;
    }
    if (!feasible || sum > w) continue;

    // Pad to exactly w so the realized denominator matches the guess.
    long long deficit = w - sum;
    for (std::size_t i = 0; i < t && deficit > 0; ++i) {
      long long room = instance.capacities[i] - minimal[i];
      long long add = std::min(room, deficit);
      minimal[i] += add;
      deficit -= add;
    }
    return minimal;
  }
  return std::nullopt;
}

std::optional<ImprovementStep> find_improvement_step(const AvailabilityMatrix& truth,
                                                     const Profile& declared,
                                                     const Coalition& coalition) {
  require_valid_profile(truth, declared);
  check_coalition(truth, coalition);
  check_solver_cap(truth);
  return step_for_coalition(truth, declared, payoffs(declared), coalition);
}

std::optional<ImprovementStep> find_improvement_any(const AvailabilityMatrix& truth,
                                                    const Profile& declared,
                                                    int max_coalition,
                                                    const SearchOptions& options) {
  require_valid_profile(truth, declared);
  if (max_coalition < 1 || max_coalition > truth.teams()) {
    throw std::invalid_argument("max coalition size must lie in [1, n]");
  }
  check_solver_cap(truth);

  const std::vector<Rational> current = payoffs(declared);
  CoalitionSequence sequence(truth.teams(), max_coalition);
  const int workers = std::max(1, options.workers);

  if (workers == 1) {
    while (std::optional<std::vector<int>> members = sequence.next()) {
      Coalition c = Coalition::of(*members, truth.teams());
      if (std::optional<ImprovementStep> step = step_for_coalition(truth, declared, current, c)) {
        return step;
      }
    }
    return std::nullopt;
  }

  // Parallel blocks: evaluate a block of coalitions concurrently, then merge
  // in enumeration order so the reported witness is schedule-independent.
  const std::size_t block_size = static_cast<std::size_t>(workers) * 256;
  while (true) {
    std::vector<Coalition> block;
    block.reserve(block_size);
    while (block.size() < block_size) {
      std::optional<std::vector<int>> members = sequence.next();
      if (!members) break;
      block.push_back(Coalition::of(*members, truth.teams()));
    }
    if (block.empty()) return std::nullopt;

    std::vector<std::optional<ImprovementStep>> found(block.size());
    std::atomic<std::size_t> cursor{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&]() {
        try {
          for (std::size_t i = cursor.fetch_add(1); i < block.size(); i = cursor.fetch_add(1)) {
            found[i] = step_for_coalition(truth, declared, current, block[i]);
          }
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    for (std::optional<ImprovementStep>& step : found) {
      if (step) return std::move(*step);
    }
    if (block.size() < block_size) return std::nullopt;  // sequence exhausted
  }
}

std::optional<ImprovementStep> brute_force_improvement(const AvailabilityMatrix& truth,
                                                       const Profile& declared,
                                                       const Coalition& coalition,
                                                       long long budget) {
  require_valid_profile(truth, declared);
  check_coalition(truth, coalition);
  const std::vector<int>& members = coalition.members();
  const int m = truth.slots();

  BigInt space(1);
  for (int i : members) {
    for (int j = 0; j < m; ++j) space *= BigInt(truth.at(i, j) + 1);
  }
  if (space > budget) {
    throw budget_error("joint deviation space of " + space.str() +
                       " rows exceeds the budget of " + std::to_string(budget));
  }

  // Old pay-offs as int64 fractions; matrix caps keep them exact.
  std::vector<long long> old_num(members.size()), old_den(members.size());
  for (std::size_t idx = 0; idx < members.size(); ++idx) {
    Rational p = payoff(declared, members[idx]);
    old_num[idx] = p.numerator().convert_to<long long>();
    old_den[idx] = p.denominator().convert_to<long long>();
  }

  // Odometer over the member cells, last cell fastest, so assignments are
  // visited in lexicographic order of the concatenated member rows.
  const std::size_t digit_count = members.size() * static_cast<std::size_t>(m);
  std::vector<long long> caps(digit_count), digits(digit_count, 0);
  std::vector<int> digit_slot(digit_count);
  for (std::size_t idx = 0; idx < members.size(); ++idx) {
    for (int j = 0; j < m; ++j) {
      caps[idx * m + j] = truth.at(members[idx], j);
      digit_slot[idx * m + j] = j;
    }
  }

  Profile working = declared;
  for (int i : members) {
    for (int j = 0; j < m; ++j) working.set(i, j, 0);
  }
  std::vector<long long> col_sums(m);
  for (int j = 0; j < m; ++j) col_sums[j] = working.column_sum(j);

  while (true) {
    long long best = 0;
    for (int j = 0; j < m; ++j) best = std::max(best, col_sums[j]);
    if (best > 0) {
      bool all_improve = true;
      for (std::size_t idx = 0; idx < members.size() && all_improve; ++idx) {
        long long min_cell = -1;
        for (int j = 0; j < m; ++j) {
          if (col_sums[j] != best) continue;
          long long cell = digits[idx * m + j];
          if (min_cell < 0 || cell < min_cell) min_cell = cell;
        }
        if (!frac_greater(min_cell, best, old_num[idx], old_den[idx])) all_improve = false;
      }
      if (all_improve) {
        std::vector<std::vector<long long>> rows(members.size(),
                                                 std::vector<long long>(m, 0));
        Profile result = working;
        for (std::size_t idx = 0; idx < members.size(); ++idx) {
          for (int j = 0; j < m; ++j) {
            rows[idx][j] = digits[idx * m + j];
            result.set(members[idx], j, rows[idx][j]);
          }
        }
        // Single-slot normal form: every member row supported on one common slot.
        std::optional<int> target;
        bool single = true;
        for (std::size_t idx = 0; idx < members.size() && single; ++idx) {
          int support = -1;
          for (int j = 0; j < m; ++j) {
            if (rows[idx][j] == 0) continue;
            if (support >= 0) {
              single = false;
              break;
            }
            support = j;
          }
          if (support < 0) single = false;
          if (single && target && *target != support) single = false;
          if (single) target = support;
        }
        if (!single) target.reset();

        std::vector<Rational> before, after;
        for (std::size_t idx = 0; idx < members.size(); ++idx) {
          before.emplace_back(BigInt(old_num[idx]), BigInt(old_den[idx]));
          after.push_back(payoff(result, members[idx]));
        }
        return ImprovementStep(coalition, target, std::move(rows), std::move(result),
                               std::move(before), std::move(after));
      }
    }

    // Advance the odometer.
    std::size_t pos = digit_count;
    while (pos > 0) {
      --pos;
      if (digits[pos] < caps[pos]) break;
      if (pos == 0) return std::nullopt;  // exhausted
    }
    if (digits[pos] >= caps[pos]) return std::nullopt;
    ++digits[pos];
    ++col_sums[digit_slot[pos]];
    for (std::size_t k = pos + 1; k < digit_count; ++k) {
      col_sums[digit_slot[k]] -= digits[k];
      digits[k] = 0;
    }
  }
}

bool verify_improvement(const AvailabilityMatrix& truth, const Profile& declared,
                        const ImprovementStep& step) {
  if (truth.teams() != declared.teams() || truth.slots() != declared.slots()) return false;
  const std::vector<int>& members = step.coalition.members();
  if (members.back() >= truth.teams()) return false;
  if (step.new_rows.size() != members.size()) return false;
  if (!validate_profile(truth, step.result).valid) return false;
  if (step.result.teams() != declared.teams() || step.result.slots() != declared.slots()) {
    return false;
  }

  for (int i = 0; i < declared.teams(); ++i) {
    bool member = step.coalition.contains(i);
    std::size_t idx =
        member ? std::lower_bound(members.begin(), members.end(), i) - members.begin() : 0;
    for (int j = 0; j < declared.slots(); ++j) {
      long long expected = member ? step.new_rows[idx][j] : declared.at(i, j);
      if (step.result.at(i, j) != expected) return false;
    }
  }

  for (int i : members) {
    if (!(payoff(step.result, i) > payoff(declared, i))) return false;
  }
  return true;
}

}  // namespace tpg
