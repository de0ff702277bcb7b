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

#include "tpg/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tpg {

namespace {

void check_shape(int teams, int slots) {
  if (teams < 1) throw std::invalid_argument("team count must be at least 1");
  if (slots < 1) throw std::invalid_argument("slot count must be at least 1");
  if (static_cast<long long>(teams) * slots > AvailabilityMatrix::kMaxCells) {
    throw std::invalid_argument("matrix has too many cells");
  }
}

void check_entry(long long value) {
  if (value < 0) throw std::invalid_argument("negative entry");
  if (value > AvailabilityMatrix::kMaxEntry) {
    throw std::invalid_argument("entry exceeds supported range");
  }
}

}  // namespace

AvailabilityMatrix::AvailabilityMatrix(int teams, int slots)
    : teams_(teams), slots_(slots) {
  check_shape(teams, slots);
  cells_.assign(static_cast<std::size_t>(teams) * slots, 0);
}

AvailabilityMatrix::AvailabilityMatrix(int teams, int slots, std::vector<long long> entries)
    : teams_(teams), slots_(slots), cells_(std::move(entries)) {
  check_shape(teams, slots);
  if (cells_.size() != static_cast<std::size_t>(teams) * slots) {
    throw std::invalid_argument("entry count does not match the matrix shape");
  }
  long long sum = 0;
  for (long long v : cells_) {
    check_entry(v);
    sum += v;
    if (sum > kMaxTotal) throw std::invalid_argument("matrix total exceeds supported range");
  }
}

std::size_t AvailabilityMatrix::index(int team, int slot) const {
  if (team < 0 || team >= teams_) throw std::out_of_range("team index out of range");
  if (slot < 0 || slot >= slots_) throw std::out_of_range("slot index out of range");
  return static_cast<std::size_t>(team) * slots_ + slot;
}

void AvailabilityMatrix::set(int team, int slot, long long value) {
  check_entry(value);
  cells_[index(team, slot)] = value;
}

long long AvailabilityMatrix::column_sum(int slot) const {
  if (slot < 0 || slot >= slots_) throw std::out_of_range("slot index out of range");
  long long sum = 0;
  for (int i = 0; i < teams_; ++i) sum += cells_[static_cast<std::size_t>(i) * slots_ + slot];
  return sum;
}

long long AvailabilityMatrix::total() const {
  return std::accumulate(cells_.begin(), cells_.end(), 0LL);
}

long long AvailabilityMatrix::max_entry() const {
  return *std::max_element(cells_.begin(), cells_.end());
}

long long AvailabilityMatrix::max_column_sum() const {
  long long best = 0;
  for (int j = 0; j < slots_; ++j) best = std::max(best, column_sum(j));
  return best;
}

}  // namespace tpg
