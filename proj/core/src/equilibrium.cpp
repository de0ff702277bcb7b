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

#include "tpg/equilibrium.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "tpg/errors.hpp"
#include "tpg/format.hpp"
#include "tpg/game.hpp"

namespace tpg {

namespace {

Profile zero_profile(const AvailabilityMatrix& truth) {
  return Profile(truth.teams(), truth.slots());
}

// Everyone declares truth at `slot`, zero elsewhere.
Profile truth_at_column(const AvailabilityMatrix& truth, int slot) {
  Profile b = zero_profile(truth);
  for (int i = 0; i < truth.teams(); ++i) b.set(i, slot, truth.at(i, slot));
  return b;
}

Profile truth_everywhere(const AvailabilityMatrix& truth) { return truth; }

// Truth at `slot`; teams not available there declare truth on the rest.
Profile truth_plus_outsider_truth(const AvailabilityMatrix& truth, int slot) {
  Profile b = truth_at_column(truth, slot);
  for (int i = 0; i < truth.teams(); ++i) {
    if (truth.at(i, slot) > 0) continue;
    for (int j = 0; j < truth.slots(); ++j) {
      if (j != slot) b.set(i, j, truth.at(i, j));
    }
  }
  return b;
}

// Truth at `slot`, plus one unit of blocking availability at every other
// slot from the lowest-index team other than `holder` that can provide it.
Profile truth_plus_unit_blocking(const AvailabilityMatrix& truth, int slot, int holder,
                                 int preferred) {
  Profile b = truth_at_column(truth, slot);
  for (int j = 0; j < truth.slots(); ++j) {
    if (j == slot) continue;
    if (preferred >= 0 && truth.at(preferred, j) > 0) {
      b.set(preferred, j, 1);
      continue;
    }
    for (int k = 0; k < truth.teams(); ++k) {
      if (k == holder || truth.at(k, j) < 1) continue;
      b.set(k, j, 1);
      break;
    }
  }
  return b;
}

// Teams with a positive entry at the slot, ascending.
std::vector<int> column_support(const AvailabilityMatrix& truth, int slot) {
  std::vector<int> support;
  for (int i = 0; i < truth.teams(); ++i) {
    if (truth.at(i, slot) > 0) support.push_back(i);
  }
  return support;
}

// Matches a column whose positive entries are exactly `pattern` (sorted
// descending); returns the owning teams in pattern order, lowest index first
// among equal values.
std::optional<std::vector<int>> match_column_pattern(const AvailabilityMatrix& truth,
                                                     int slot,
                                                     const std::vector<long long>& pattern) {
  std::vector<int> support = column_support(truth, slot);
  if (support.size() != pattern.size()) return std::nullopt;
  std::vector<long long> values;
  for (int i : support) values.push_back(truth.at(i, slot));
  std::vector<long long> sorted = values;
  std::sort(sorted.rbegin(), sorted.rend());
  if (sorted != pattern) return std::nullopt;
  std::vector<int> owners;
  std::vector<bool> used(support.size(), false);
  for (long long want : pattern) {
    for (std::size_t s = 0; s < support.size(); ++s) {
      if (used[s] || values[s] != want) continue;
      used[s] = true;
      owners.push_back(support[s]);
      break;
    }
  }
  return owners;
}

// Ladder case for the {2,1} slot: truth at the slot, then one unit of
// blocking at every other slot, preferring the 1-availability team.
Profile case_two_one(const AvailabilityMatrix& truth, int slot, int big, int small) {
  Profile b = truth_at_column(truth, slot);
  for (int j = 0; j < truth.slots(); ++j) {
    if (j == slot) continue;
    if (truth.at(small, j) > 0) {
      b.set(small, j, 1);
      continue;
    }
    for (int k = 0; k < truth.teams(); ++k) {
      if (k == big || truth.at(k, j) < 1) continue;
      b.set(k, j, 1);
      break;
    }
  }
  return b;
}

// Ladder case for a {3,1} slot: blocking at every other slot. An outside
// availability-3 team is declared in full where present; otherwise the
// 1-availability teammate, otherwise the first other available team.
Profile case_three_one(const AvailabilityMatrix& truth, int slot, int big, int small) {
  Profile b = truth_at_column(truth, slot);
  for (int j = 0; j < truth.slots(); ++j) {
    if (j == slot) continue;
    int outside_three = -1;
    for (int k = 0; k < truth.teams(); ++k) {
      if (k == big || k == small) continue;
      if (truth.at(k, j) == 3) {
        outside_three = k;
        break;
      }
    }
    if (outside_three >= 0) {
      b.set(outside_three, j, 3);
    } else if (truth.at(small, j) > 0) {
      b.set(small, j, truth.at(small, j));
    } else {
      for (int k = 0; k < truth.teams(); ++k) {
        if (k == big || k == small || truth.at(k, j) < 1) continue;
        b.set(k, j, truth.at(k, j));
        break;
      }
    }
  }
  return b;
}

// Ladder case for the {3,2} slot: at every other slot where the 3-team is
// available in full force, the remaining teams declare two units in total.
Profile case_three_two(const AvailabilityMatrix& truth, int slot, int big, int small) {
  Profile b = truth_at_column(truth, slot);
  for (int j = 0; j < truth.slots(); ++j) {
    if (j == slot || truth.at(big, j) != 3) continue;
    long long u = truth.at(small, j);
    if (u >= 2) {
      b.set(small, j, u);
    } else if (u == 1) {
      b.set(small, j, 1);
      for (int k = 0; k < truth.teams(); ++k) {
        if (k == big || k == small) continue;
        if (truth.at(k, j) > 0 && truth.at(k, j) < 3) {
          b.set(k, j, truth.at(k, j));
          break;
        }
      }
    } else {
      int declared = 0;
      for (int k = 0; k < truth.teams() && declared == 0; ++k) {
        if (k == big || k == small || truth.at(k, j) <= 1) continue;
        b.set(k, j, truth.at(k, j));
        declared = 1;
      }
      if (declared == 0) {
        int placed = 0;
        for (int k = 0; k < truth.teams() && placed < 2; ++k) {
          if (k == big || k == small || truth.at(k, j) != 1) continue;
          b.set(k, j, 1);
          ++placed;
        }
      }
    }
  }
  return b;
}

// Ladder case for the {3,1,1} slot.
Profile case_three_one_one(const AvailabilityMatrix& truth, int slot, int big, int one_a,
                           int one_b) {
  Profile b = truth_at_column(truth, slot);
  for (int j = 0; j < truth.slots(); ++j) {
    if (j == slot || truth.at(big, j) != 3) continue;
    long long u = truth.at(one_a, j);
    long long v = truth.at(one_b, j);
    if (u >= 1 && v >= 1) {
      b.set(one_a, j, 1);
      b.set(one_b, j, 1);
    } else if (u == 0 && v >= 2) {
      b.set(one_b, j, v);
    } else if (v == 0 && u >= 2) {
      b.set(one_a, j, u);
    } else if (u == 0 && v == 1) {
      b.set(one_b, j, 1);
      for (int k = 0; k < truth.teams(); ++k) {
        if (k == big || k == one_a || k == one_b) continue;
        if (truth.at(k, j) > 0 && truth.at(k, j) < 3) {
          b.set(k, j, truth.at(k, j));
          break;
        }
      }
    } else if (v == 0 && u == 1) {
      b.set(one_a, j, 1);
      for (int k = 0; k < truth.teams(); ++k) {
        if (k == big || k == one_a || k == one_b) continue;
        if (truth.at(k, j) > 0 && truth.at(k, j) < 3) {
          b.set(k, j, truth.at(k, j));
          break;
        }
      }
    } else {
      int placed = 0;
      for (int k = 0; k < truth.teams() && placed < 2; ++k) {
        if (k == big || k == one_a || k == one_b || truth.at(k, j) != 1) continue;
        b.set(k, j, 1);
        ++placed;
      }
    }
  }
  return b;
}

}  // namespace

NeVerdict is_t_strong_ne(const AvailabilityMatrix& truth, const Profile& declared,
                         int strength, const SearchOptions& options) {
  NeVerdict verdict;
  std::optional<ImprovementStep> step =
      find_improvement_any(truth, declared, strength, options);
  verdict.is_equilibrium = !step.has_value();
  verdict.witness = std::move(step);
  return verdict;
}

std::optional<SafeSingleSlot> find_safe_single_team_slot(const AvailabilityMatrix& truth) {
  for (int j = 0; j < truth.slots(); ++j) {
    std::vector<int> support = column_support(truth, j);
    if (support.size() != 1) continue;
    int owner = support[0];
    long long value = truth.at(owner, j);
    bool safe = true;
    for (int i = 0; i < truth.teams() && safe; ++i) {
      if (i == owner) continue;
      for (int l = 0; l < truth.slots(); ++l) {
        if (truth.at(i, l) > value) {
          safe = false;
          break;
        }
      }
    }
    if (safe) return SafeSingleSlot{j, owner, value};
  }
  return std::nullopt;
}

std::optional<int> find_safe_multiple_team_slot(const AvailabilityMatrix& truth) {
  for (int j = 0; j < truth.slots(); ++j) {
    if (column_support(truth, j).size() < 2) continue;
    long long column = truth.column_sum(j);
    bool safe = true;
    for (int i = 0; i < truth.teams() && safe; ++i) {
      long long others = column - truth.at(i, j);
      for (int l = 0; l < truth.slots(); ++l) {
        if (l == j) continue;
        if (truth.at(i, l) > others) {
          safe = false;
          break;
        }
      }
    }
    if (safe) return j;
  }
  return std::nullopt;
}

Profile construct_1strong_ne(const AvailabilityMatrix& truth) {
  if (truth.max_entry() >= 4) {
    throw unsupported_error(
        "no 1-strong equilibrium construction is known for maximum availability >= 4 "
        "(open problem)");
  }

  std::vector<Profile> candidates;
  if (truth.is_zero()) candidates.push_back(zero_profile(truth));
  if (std::optional<SafeSingleSlot> safe = find_safe_single_team_slot(truth)) {
    candidates.push_back(truth_at_column(truth, safe->slot));
  }
  if (std::optional<int> safe = find_safe_multiple_team_slot(truth)) {
    candidates.push_back(truth_at_column(truth, *safe));
  }
  const long long a_max = truth.max_entry();
  if (a_max == 2) {
    for (int j = 0; j < truth.slots(); ++j) {
      if (auto owners = match_column_pattern(truth, j, {2, 1})) {
        candidates.push_back(case_two_one(truth, j, (*owners)[0], (*owners)[1]));
      }
    }
  }
  if (a_max == 3) {
    for (int j = 0; j < truth.slots(); ++j) {
      if (auto owners = match_column_pattern(truth, j, {3, 1})) {
        candidates.push_back(case_three_one(truth, j, (*owners)[0], (*owners)[1]));
      }
    }
    for (int j = 0; j < truth.slots(); ++j) {
      if (auto owners = match_column_pattern(truth, j, {3, 2})) {
        candidates.push_back(case_three_two(truth, j, (*owners)[0], (*owners)[1]));
      }
    }
    for (int j = 0; j < truth.slots(); ++j) {
      if (auto owners = match_column_pattern(truth, j, {3, 1, 1})) {
        candidates.push_back(
            case_three_one_one(truth, j, (*owners)[0], (*owners)[1], (*owners)[2]));
      }
    }
  }
  // Fallback variants; rarely reached, but the ladder above is only as good
  // as the case analysis, and the contract is a verified profile.
  for (int j = 0; j < truth.slots(); ++j) {
    if (truth.column_sum(j) > 0) candidates.push_back(truth_at_column(truth, j));
  }
  if (a_max == 2) {
    for (int j = 0; j < truth.slots(); ++j) {
      if (auto owners = match_column_pattern(truth, j, {2, 1})) {
        candidates.push_back(
            truth_plus_unit_blocking(truth, j, (*owners)[0], (*owners)[1]));
      }
    }
  }
  for (int j = 0; j < truth.slots(); ++j) {
    if (truth.column_sum(j) > 0) {
      std::vector<int> support = column_support(truth, j);
      int holder = support.empty() ? -1 : support[0];
      for (int i : support) {
        if (truth.at(i, j) == truth.max_entry()) {
          holder = i;
          break;
        }
      }
      candidates.push_back(truth_plus_unit_blocking(truth, j, holder, -1));
    }
  }
  candidates.push_back(truth_everywhere(truth));
  for (int j = 0; j < truth.slots(); ++j) {
    if (truth.column_sum(j) > 0) candidates.push_back(truth_plus_outsider_truth(truth, j));
  }

  for (const Profile& candidate : candidates) {
    if (is_t_strong_ne(truth, candidate, 1).is_equilibrium) return candidate;
  }
  throw std::logic_error(
      "1-strong construction failed verification on every ladder case; this "
      "falsifies the case analysis for instance:\n" +
      serialize_instance(truth));
}

ConstructedProfile construct_2strong_ne_amax1(const AvailabilityMatrix& truth,
                                              long long budget,
                                              const SearchOptions& options) {
  if (truth.max_entry() > 1) {
    throw unsupported_error("the 2-strong construction requires maximum availability 1");
  }
  const int strength = std::min(2, truth.teams());

  std::vector<Profile> candidates;
  if (truth.is_zero()) candidates.push_back(zero_profile(truth));
  for (int j = 0; j < truth.slots(); ++j) {
    if (truth.column_sum(j) > 0) candidates.push_back(truth_at_column(truth, j));
  }
  candidates.push_back(truth_everywhere(truth));
  for (int j = 0; j < truth.slots(); ++j) {
    if (truth.column_sum(j) > 0) candidates.push_back(truth_plus_outsider_truth(truth, j));
  }
  for (int j = 0; j < truth.slots(); ++j) {
    if (truth.column_sum(j) > 0) {
      std::vector<int> support = column_support(truth, j);
      candidates.push_back(truth_plus_unit_blocking(truth, j, support[0], -1));
    }
  }

  for (const Profile& candidate : candidates) {
    if (is_t_strong_ne(truth, candidate, strength).is_equilibrium) {
      return ConstructedProfile{candidate, ConstructionPath::direct};
    }
  }

  std::optional<Profile> found = exhaustive_ne_search(truth, strength, budget, options);
  if (!found) {
    throw std::logic_error(
        "exhaustive search found no 2-strong equilibrium for a max-availability-1 "
        "instance; this falsifies the existence result for instance:\n" +
        serialize_instance(truth));
  }
  return ConstructedProfile{std::move(*found), ConstructionPath::exhaustive_fallback};
}

namespace {

// Shared by the sequential and parallel search paths: scan profiles with
// indices in [begin, end) in lexicographic order, returning the first
// equilibrium found, or nullopt. `stop_before` allows workers to abandon
// ranges that can no longer win.
std::optional<std::pair<unsigned long long, Profile>> scan_profiles(
    const AvailabilityMatrix& truth, int strength, unsigned long long begin,
    unsigned long long end, const std::atomic<unsigned long long>* stop_before) {
  const int n = truth.teams();
  const int m = truth.slots();
  const std::size_t cells = static_cast<std::size_t>(n) * m;

  // Decode `begin` into mixed-radix digits, last cell least significant.
  std::vector<long long> digits(cells, 0);
  unsigned long long idx = begin;
  for (std::size_t c = cells; c-- > 0;) {
    unsigned long long radix = static_cast<unsigned long long>(truth.entries()[c]) + 1;
    digits[c] = static_cast<long long>(idx % radix);
    idx /= radix;
  }

  Profile current(n, m, digits);
  std::vector<long long> col_sums(m, 0);
  for (int j = 0; j < m; ++j) col_sums[j] = current.column_sum(j);

  unsigned long long at = begin;
  while (at < end) {
    if (stop_before && at >= stop_before->load(std::memory_order_relaxed)) {
      return std::nullopt;
    }
    long long best = 0;
    for (int j = 0; j < m; ++j) best = std::max(best, col_sums[j]);
    bool pruned = false;
    for (int j = 0; j < m && !pruned; ++j) {
      if (col_sums[j] != best) continue;
      for (int i = 0; i < n; ++i) {
        if (current.at(i, j) < truth.at(i, j)) {
          pruned = true;  // a winning slot with an under-declaring team
          break;
        }
      }
    }
    if (!pruned && is_t_strong_ne(truth, current, strength).is_equilibrium) {
      return std::make_pair(at, current);
    }

    // Advance the odometer.
    ++at;
    std::size_t pos = cells;
    while (pos > 0) {
      --pos;
      int team = static_cast<int>(pos) / m;
      int slot = static_cast<int>(pos) % m;
      if (current.at(team, slot) < truth.at(team, slot)) {
        current.set(team, slot, current.at(team, slot) + 1);
        ++col_sums[slot];
        break;
      }
      col_sums[slot] -= current.at(team, slot);
      current.set(team, slot, 0);
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Profile> exhaustive_ne_search(const AvailabilityMatrix& truth, int strength,
                                            long long budget,
                                            const SearchOptions& options) {
  if (strength < 1 || strength > truth.teams()) {
    throw std::invalid_argument("equilibrium strength must lie in [1, n]");
  }
  BigInt space(1);
  for (long long v : truth.entries()) space *= BigInt(v + 1);
  if (space > budget) {
    throw budget_error("profile space of " + space.str() + " exceeds the budget of " +
                       std::to_string(budget));
  }
  const unsigned long long total = space.convert_to<unsigned long long>();
  const int workers = std::max(1, options.workers);

  if (workers == 1 || total < 1024) {
    std::optional<std::pair<unsigned long long, Profile>> hit =
        scan_profiles(truth, strength, 0, total, nullptr);
    if (hit) return std::move(hit->second);
    return std::nullopt;
  }

  std::atomic<unsigned long long> stop_before{total};
  std::vector<std::optional<std::pair<unsigned long long, Profile>>> hits(workers);
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  const unsigned long long chunk = (total + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      unsigned long long begin = chunk * static_cast<unsigned long long>(w);
      unsigned long long end = std::min(total, begin + chunk);
      if (begin >= end) return;
      try {
        hits[w] = scan_profiles(truth, strength, begin, end, &stop_before);
        if (hits[w]) {
          unsigned long long seen = stop_before.load();
          while (hits[w]->first < seen &&
                 !stop_before.compare_exchange_weak(seen, hits[w]->first)) {
          }
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::optional<std::pair<unsigned long long, Profile>> best;
  for (auto& hit : hits) {
    if (hit && (!best || hit->first < best->first)) best = std::move(hit);
  }
  if (best) return std::move(best->second);
  return std::nullopt;
}

DynamicsTrace run_dynamics(const AvailabilityMatrix& truth, const Profile& start,
                           int max_coalition, std::size_t max_steps,
                           const SearchOptions& options) {
  require_valid_profile(truth, start);
  if (max_coalition < 1 || max_coalition > truth.teams()) {
    throw std::invalid_argument("max coalition size must lie in [1, n]");
  }
  DynamicsTrace trace(start);

  std::map<std::vector<long long>, std::size_t> seen;
  seen.emplace(start.entries(), 0);
  Profile current = start;

  while (true) {
    std::optional<ImprovementStep> step =
        find_improvement_any(truth, current, max_coalition, options);
    if (!step) {
      trace.status = DynamicsStatus::equilibrium_reached;
      return trace;
    }
    if (trace.steps.size() >= max_steps) {
      trace.status = DynamicsStatus::step_budget_exhausted;
      return trace;
    }
    current = step->result;
    trace.steps.push_back(std::move(*step));
    auto [it, inserted] = seen.emplace(current.entries(), trace.steps.size());
    if (!inserted) {
      trace.status = DynamicsStatus::cycle_detected;
      trace.cycle_start = it->second;
      return trace;
    }
  }
}

}  // namespace tpg
