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

#include "tpg/reductions.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "tpg/errors.hpp"
#include "tpg/rational.hpp"

namespace tpg {

namespace {

std::vector<int> sorted_unique(std::vector<int> v, const char* what) {
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end()) {
    throw std::invalid_argument(std::string("duplicate element in ") + what);
  }
  return v;
}

// Next k-combination of [0, n) in lexicographic order; false when done.
bool next_combination(std::vector<int>& c, int n) {
  int k = static_cast<int>(c.size());
  int i = k - 1;
  while (i >= 0 && c[i] == n - k + i) --i;
  if (i < 0) return false;
  ++c[i];
  for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return BigInt(0);
  BigInt result(1);
  for (int i = 0; i < k; ++i) {
    result *= BigInt(n - i);
    result /= BigInt(i + 1);
  }
  return result;
}

// splitmix64: tiny, well-known, identical on every platform.
struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  // Unbiased uniform draw from [0, bound) via rejection.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }
};

}  // namespace

SetCoverInstance::SetCoverInstance(int universe_size, std::vector<std::vector<int>> sets,
                                   int cover_size)
    : universe_size_(universe_size), sets_(std::move(sets)), cover_size_(cover_size) {
  if (universe_size_ < 1) throw std::invalid_argument("universe must be non-empty");
  if (sets_.empty()) throw std::invalid_argument("family must be non-empty");
  if (cover_size_ < 1) throw std::invalid_argument("cover size must be at least 1");
  for (std::vector<int>& set : sets_) {
    if (set.empty()) throw std::invalid_argument("sets must be non-empty");
    set = sorted_unique(std::move(set), "a set");
    if (set.front() < 0 || set.back() >= universe_size_) {
      throw std::invalid_argument("set element out of range");
    }
  }
}

int SetCoverInstance::frequency(int element) const {
  if (element < 0 || element >= universe_size_) {
    throw std::out_of_range("element out of range");
  }
  int count = 0;
  for (const std::vector<int>& set : sets_) {
    if (std::binary_search(set.begin(), set.end(), element)) ++count;
  }
  return count;
}

int SetCoverInstance::max_frequency() const {
  int best = 0;
  for (int u = 0; u < universe_size_; ++u) best = std::max(best, frequency(u));
  return best;
}

ExactCoverInstance::ExactCoverInstance(int n, std::vector<std::array<int, 3>> sets)
    : n_(n), sets_(std::move(sets)) {
  if (n_ < 2) throw std::invalid_argument("restricted exact cover requires n >= 2");
  if (sets_.size() != static_cast<std::size_t>(3 * n_)) {
    throw std::invalid_argument("restricted exact cover requires exactly 3n sets");
  }
  std::vector<int> frequency(3 * n_, 0);
  for (std::array<int, 3>& set : sets_) {
    std::sort(set.begin(), set.end());
    if (set[0] == set[1] || set[1] == set[2]) {
      throw std::invalid_argument("sets must have three distinct elements");
    }
    if (set[0] < 0 || set[2] >= 3 * n_) throw std::invalid_argument("set element out of range");
    for (int e : set) ++frequency[e];
  }
  for (int e = 0; e < 3 * n_; ++e) {
    if (frequency[e] != 3) {
      throw std::invalid_argument("element " + std::to_string(e + 1) +
                                  " must appear in exactly 3 sets");
    }
  }
}

ReducedSetCoverGame setcover_to_tpg(const SetCoverInstance& instance) {
  const int m = instance.family_size();
  const int n_u = instance.universe_size();
  const int k = instance.cover_size();

  if (2 * m - 1 - k < 0) {
    throw std::invalid_argument("cover size too large: 2m-1-k must be non-negative");
  }
  std::vector<int> freq(n_u);
  for (int u = 0; u < n_u; ++u) {
    freq[u] = instance.frequency(u);
    if (2 * m - 1 - freq[u] < 0) {
      throw std::invalid_argument("element frequency too large: 2m-1-#(u) must be non-negative");
    }
  }

  const int alpha = n_u;
  const int beta = n_u + 1;
  const int slots = n_u + 2;
  int teams = m;
  for (int u = 0; u < n_u; ++u) teams += 2 * m - 1 - freq[u];
  teams += m;              // alpha dummies
  teams += 2 * m - 1 - k;  // beta dummies

  AvailabilityMatrix truth(teams, slots);
  Profile declared(teams, slots);

  // Set teams: available at alpha, beta, and their element slots; they
  // declare everything except beta.
  for (int i = 0; i < m; ++i) {
    truth.set(i, alpha, 1);
    truth.set(i, beta, 1);
    declared.set(i, alpha, 1);
    for (int u : instance.sets()[i]) {
      truth.set(i, u, 1);
      declared.set(i, u, 1);
    }
  }
  int team = m;
  for (int u = 0; u < n_u; ++u) {
    for (int copy = 0; copy < 2 * m - 1 - freq[u]; ++copy, ++team) {
      truth.set(team, u, 1);
      declared.set(team, u, 1);
    }
  }
  for (int copy = 0; copy < m; ++copy, ++team) {
    truth.set(team, alpha, 1);
    declared.set(team, alpha, 1);
  }
  for (int copy = 0; copy < 2 * m - 1 - k; ++copy, ++team) {
    truth.set(team, beta, 1);
    declared.set(team, beta, 1);
  }

  return ReducedSetCoverGame{std::move(truth), std::move(declared), k, m, alpha, beta};
}

ReducedExactCoverGame x3c_to_tpg(const ExactCoverInstance& instance) {
  const int n = instance.n();
  const int teams = 3 * n;
  const int alpha = 3 * n;
  AvailabilityMatrix truth(teams, 3 * n + 1);
  for (int j = 0; j < teams; ++j) {
    for (int e : instance.sets()[j]) truth.set(j, e, n);
    truth.set(j, alpha, 1);
  }
  return ReducedExactCoverGame{std::move(truth), 2 * n, alpha};
}

Profile x3c_canonical_profile(const ExactCoverInstance& instance) {
  const int n = instance.n();
  Profile declared(3 * n, 3 * n + 1);
  for (int j = 0; j < 3 * n; ++j) {
    for (int e : instance.sets()[j]) declared.set(j, e, n);
  }
  return declared;
}

std::optional<std::vector<int>> brute_force_set_cover(const SetCoverInstance& instance,
                                                      long long budget) {
  const int m = instance.family_size();
  const int k = instance.cover_size();
  if (k > m) return std::nullopt;
  if (binomial(m, k) > budget) {
    throw budget_error("set cover enumeration exceeds the budget of " +
                       std::to_string(budget));
  }
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  do {
    std::vector<bool> covered(instance.universe_size(), false);
    int count = 0;
    for (int s : pick) {
      for (int u : instance.sets()[s]) {
        if (!covered[u]) {
          covered[u] = true;
          ++count;
        }
      }
    }
    if (count == instance.universe_size()) return pick;
  } while (next_combination(pick, m));
  return std::nullopt;
}

std::optional<std::vector<int>> brute_force_exact_cover(const ExactCoverInstance& instance,
                                                        long long budget) {
  const int total = 3 * instance.n();
  const int k = instance.n();
  if (binomial(total, k) > budget) {
    throw budget_error("exact cover enumeration exceeds the budget of " +
                       std::to_string(budget));
  }
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  do {
    std::vector<bool> covered(total, false);
    bool disjoint = true;
    for (int s : pick) {
      for (int e : instance.sets()[s]) {
        if (covered[e]) {
          disjoint = false;
          break;
        }
        covered[e] = true;
      }
      if (!disjoint) break;
    }
    if (disjoint) return pick;  // n disjoint triples over 3n elements cover them all
  } while (next_combination(pick, total));
  return std::nullopt;
}

AvailabilityMatrix random_instance(int teams, int slots, long long max_availability,
                                   std::uint64_t seed) {
  if (teams < 1 || slots < 1) throw std::invalid_argument("bounds must be positive");
  if (max_availability < 0 || max_availability > AvailabilityMatrix::kMaxEntry) {
    throw std::invalid_argument("max availability out of range");
  }
  AvailabilityMatrix matrix(teams, slots);
  if (max_availability == 0) return matrix;
  SplitMix64 rng{seed};
  for (int i = 0; i < teams; ++i) {
    for (int j = 0; j < slots; ++j) {
      matrix.set(i, j, static_cast<long long>(
                           rng.below(static_cast<std::uint64_t>(max_availability) + 1)));
    }
  }
  return matrix;
}

namespace {

struct CoverLine {
  int number;
  std::string_view text;
};

std::vector<CoverLine> cover_lines(std::string_view text) {
  if (text.empty() || text.back() != '\n') {
    int count = 1;
    for (char c : text)
      if (c == '\n') ++count;
    throw parse_error(count, "missing trailing newline");
  }
  std::vector<CoverLine> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol - pos);
    ++number;
    pos = eol + 1;
    if (!line.empty() && line.front() == '#') continue;
    lines.push_back({number, line});
  }
  return lines;
}

std::vector<long long> cover_ints(const CoverLine& line, std::size_t skip) {
  std::vector<long long> values;
  std::string_view text = line.text;
  std::size_t pos = 0;
  std::size_t field = 0;
  while (pos <= text.size()) {
    std::size_t space = text.find(' ', pos);
    std::string_view token = text.substr(pos, space - pos);
    if (token.empty()) throw parse_error(line.number, "malformed spacing");
    if (field++ >= skip) {
      long long value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw parse_error(line.number, "non-integer token '" + std::string(token) + "'");
      }
      values.push_back(value);
    }
    if (space == std::string_view::npos) break;
    pos = space + 1;
  }
  return values;
}

}  // namespace

CoverProblem parse_cover(std::string_view text) {
  std::vector<CoverLine> lines = cover_lines(text);
  if (lines.empty()) throw parse_error(1, "missing header");
  const CoverLine& header = lines[0];

  auto read_sets = [&](std::size_t expected, int element_count) {
    if (lines.size() - 1 != expected) {
      throw parse_error(lines.back().number,
                        "expected " + std::to_string(expected) + " set lines, found " +
                            std::to_string(lines.size() - 1));
    }
    std::vector<std::vector<int>> sets;
    for (std::size_t s = 1; s < lines.size(); ++s) {
      std::vector<int> set;
      for (long long v : cover_ints(lines[s], 0)) {
        if (v < 1 || v > element_count) {
          throw parse_error(lines[s].number, "element index out of range");
        }
        set.push_back(static_cast<int>(v - 1));
      }
      sets.push_back(std::move(set));
    }
    return sets;
  };

  if (header.text.starts_with("setcover v1 ")) {
    std::vector<long long> params = cover_ints(header, 2);
    if (params.size() != 3) throw parse_error(header.number, "expected '<n_u> <m_f> <k>'");
    long long n_u = params[0], m_f = params[1], k = params[2];
    if (n_u < 1 || n_u > 1'000'000 || m_f < 1 || m_f > 1'000'000 || k < 1) {
      throw parse_error(header.number, "parameters out of range");
    }
    std::vector<std::vector<int>> sets =
        read_sets(static_cast<std::size_t>(m_f), static_cast<int>(n_u));
    try {
      return SetCoverInstance(static_cast<int>(n_u), std::move(sets), static_cast<int>(k));
    } catch (const std::invalid_argument& e) {
      throw parse_error(header.number, e.what());
    }
  }
  if (header.text.starts_with("x3c v1 ")) {
    std::vector<long long> params = cover_ints(header, 2);
    if (params.size() != 1) throw parse_error(header.number, "expected '<n>'");
    long long n = params[0];
    if (n < 2 || n > 100'000) throw parse_error(header.number, "n out of range");
    std::vector<std::vector<int>> sets =
        read_sets(static_cast<std::size_t>(3 * n), static_cast<int>(3 * n));
    std::vector<std::array<int, 3>> triples;
    for (std::size_t s = 0; s < sets.size(); ++s) {
      if (sets[s].size() != 3) {
        throw parse_error(lines[s + 1].number, "each set must have exactly 3 elements");
      }
      triples.push_back({sets[s][0], sets[s][1], sets[s][2]});
    }
    try {
      return ExactCoverInstance(static_cast<int>(n), std::move(triples));
    } catch (const std::invalid_argument& e) {
      throw parse_error(header.number, e.what());
    }
  }
  throw parse_error(header.number, "malformed header, expected 'setcover v1 ...' or 'x3c v1 ...'");
}

CoverProblem load_cover(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error(0, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_cover(buffer.str());
}

}  // namespace tpg
