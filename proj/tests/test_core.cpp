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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "tpg/format.hpp"
#include "tpg/game.hpp"
#include "tpg/matrix.hpp"
#include "tpg/rational.hpp"
#include "tpg/reductions.hpp"

using namespace tpg;

namespace {

AvailabilityMatrix mat(int n, int m, std::vector<long long> cells) {
  return AvailabilityMatrix(n, m, std::move(cells));
}

// The running 3x2 example: two slots, teams with availabilities
// (2,2), (1,2), (3,2).
AvailabilityMatrix intro_matrix() { return mat(3, 2, {2, 2, 1, 2, 3, 2}); }

// Reference pay-off evaluation, independent of the library path: explicit
// argmax winners, minimum power by int64 cross-multiplication.
std::pair<long long, long long> oracle_payoff(const Profile& b, int team) {
  long long best = 0;
  for (int j = 0; j < b.slots(); ++j) best = std::max(best, b.column_sum(j));
  if (best == 0) return {0, 1};
  long long min_cell = -1;
  for (int j = 0; j < b.slots(); ++j) {
    if (b.column_sum(j) == best) {
      long long cell = b.at(team, j);
      if (min_cell < 0 || cell < min_cell) min_cell = cell;
    }
  }
  return {min_cell, best};
}

bool oracle_matches(const Profile& b, int team, const Rational& value) {
  auto [num, den] = oracle_payoff(b, team);
  return value == Rational(BigInt(num), BigInt(den));
}

}  // namespace

TEST_CASE("rational normalization and arithmetic") {
  CHECK(Rational(BigInt(2), BigInt(6)) == Rational(BigInt(1), BigInt(3)));
  CHECK(Rational(BigInt(-2), BigInt(-6)) == Rational(BigInt(1), BigInt(3)));
  CHECK(Rational(BigInt(2), BigInt(-6)).numerator() == -1);
  CHECK(Rational(0).to_string() == "0");
  CHECK(Rational(BigInt(3), BigInt(6)).to_string() == "1/2");
  CHECK(Rational(BigInt(6), BigInt(3)).to_string() == "2");
  CHECK(Rational(BigInt(1), BigInt(3)) < Rational(BigInt(2), BigInt(5)));
  CHECK(Rational(BigInt(2), BigInt(5)) + Rational(BigInt(3), BigInt(5)) == Rational(1));
  CHECK(Rational(BigInt(1), BigInt(6)) * Rational(6) == Rational(1));
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::invalid_argument);
}

TEST_CASE("matrix invariants") {
  AvailabilityMatrix a = intro_matrix();
  CHECK(a.teams() == 3);
  CHECK(a.slots() == 2);
  CHECK(a.total() == 12);
  CHECK(a.max_entry() == 3);
  CHECK(a.max_column_sum() == 6);
  CHECK(a.column_sum(0) == 6);
  CHECK_THROWS_AS(mat(1, 1, {-1}), std::invalid_argument);
  CHECK_THROWS_AS(AvailabilityMatrix(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(AvailabilityMatrix(1, 0), std::invalid_argument);
  // a_max <= x <= s for non-trivial matrices
  CHECK(a.max_entry() <= a.max_column_sum());
  CHECK(a.max_column_sum() <= a.total());
}

TEST_CASE("parse_instance accepts the documented examples") {
  AvailabilityMatrix a = parse_instance("tpg v1\n3 2\n2 2\n1 2\n3 2\n");
  CHECK(a == intro_matrix());
  CHECK(parse_instance("tpg v1\n1 1\n0\n") == mat(1, 1, {0}));
}

TEST_CASE("parse_instance reports errors with line numbers") {
  CHECK_THROWS_WITH_AS(parse_instance("tpg v1\n2 2\n1 -1\n0 0\n"),
                       "line 3: negative entry", parse_error);
  CHECK_THROWS_WITH_AS(parse_instance("tpg v2\n1 1\n0\n"),
                       "line 1: malformed header, expected 'tpg v1'", parse_error);
  CHECK_THROWS_AS(parse_instance("tpg v1\n0 2\n"), parse_error);
  CHECK_THROWS_AS(parse_instance("tpg v1\n1 0\n"), parse_error);
  CHECK_THROWS_AS(parse_instance("tpg v1\n2 2\n1 2 3\n0 0\n"), parse_error);
  CHECK_THROWS_AS(parse_instance("tpg v1\n1 1\nx\n"), parse_error);
  CHECK_THROWS_AS(parse_instance("tpg v1\n1 1\n0"), parse_error);    // no trailing newline
  CHECK_THROWS_AS(parse_instance("tpg v1\n2 1\n0\n"), parse_error);  // missing row
  CHECK_THROWS_AS(parse_instance("tpg v1\n1 1\n0\n1\n"), parse_error);  // trailing content
  // Line numbers account for comment lines.
  try {
    parse_instance("tpg v1\n# note\n2 2\n1 1\n1 -1\n");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.line() == 5);
  }
}

TEST_CASE("comments are skipped anywhere") {
  AvailabilityMatrix a =
      parse_instance("# generated\ntpg v1\n3 2\n2 2\n# middle\n1 2\n3 2\n# end\n");
  CHECK(a == intro_matrix());
}

TEST_CASE("serialize/parse round-trip") {
  CHECK(serialize_instance(intro_matrix()) == "tpg v1\n3 2\n2 2\n1 2\n3 2\n");
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    AvailabilityMatrix a = random_instance(1 + seed % 5, 1 + (seed / 5) % 5, seed % 7, seed);
    CHECK(parse_instance(serialize_instance(a)) == a);
  }
}

TEST_CASE("validate_profile") {
  AvailabilityMatrix a = intro_matrix();
  CHECK(validate_profile(a, mat(3, 2, {2, 2, 1, 2, 3, 0})).valid);
  CHECK(validate_profile(a, a).valid);  // truth-telling is always feasible

  ProfileCheck bad = validate_profile(a, mat(3, 2, {2, 2, 3, 2, 3, 2}));
  REQUIRE_FALSE(bad.valid);
  REQUIRE(bad.violations.size() == 1);
  CHECK(bad.violations[0].team == 1);
  CHECK(bad.violations[0].slot == 0);
  CHECK(bad.violations[0].declared == 3);
  CHECK(bad.violations[0].available == 1);

  ProfileCheck shape = validate_profile(a, mat(2, 2, {0, 0, 0, 0}));
  CHECK_FALSE(shape.valid);
  CHECK(shape.violations.size() == 1);
  CHECK(shape.violations[0].team == -1);
}

TEST_CASE("winners") {
  CHECK(winners(intro_matrix()) == std::vector<int>{0, 1});
  CHECK(winners(mat(3, 2, {2, 2, 0, 2, 3, 2})) == std::vector<int>{1});
  CHECK(winners(mat(3, 2, {0, 0, 0, 0, 0, 0})) == std::vector<int>{0, 1});
}

TEST_CASE("team_power") {
  AvailabilityMatrix b = intro_matrix();
  CHECK(team_power(b, 2, 0) == Rational(BigInt(1), BigInt(2)));
  CHECK(team_power(b, 0, 0) == Rational(BigInt(1), BigInt(3)));
  CHECK(team_power(b, 1, 0) == Rational(BigInt(1), BigInt(6)));
  CHECK(team_power(mat(2, 2, {0, 1, 2, 1}), 0, 0).is_zero());  // zero entry, positive column
  CHECK(team_power(mat(2, 2, {0, 1, 0, 1}), 0, 0).is_zero());  // all-zero column
  CHECK_THROWS_AS(team_power(b, 3, 0), std::out_of_range);
}

TEST_CASE("payoff matches the worked examples") {
  std::vector<Rational> p = payoffs(intro_matrix());
  CHECK(p[0] == Rational(BigInt(1), BigInt(3)));
  CHECK(p[1] == Rational(BigInt(1), BigInt(6)));
  CHECK(p[2] == Rational(BigInt(1), BigInt(3)));

  Profile after = mat(3, 2, {2, 0, 0, 2, 3, 0});
  CHECK(payoff(after, 0) == Rational(BigInt(2), BigInt(5)));
  CHECK(payoff(after, 1).is_zero());
  CHECK(payoff(after, 2) == Rational(BigInt(3), BigInt(5)));

  // Expected values frozen from the independent evaluation above.
  Profile tie = mat(3, 2, {2, 0, 2, 2, 0, 2});
  CHECK(oracle_matches(tie, 0, Rational(0)));
  CHECK(payoff(tie, 0) == Rational(0));
  CHECK(payoff(tie, 1) == Rational(BigInt(1), BigInt(2)));
  CHECK(payoff(tie, 2) == Rational(0));
  CHECK(winners(tie) == std::vector<int>{0, 1});
}

TEST_CASE("power sums to one on positive columns and payoff is a winner minimum") {
  for (std::uint64_t seed = 100; seed < 160; ++seed) {
    AvailabilityMatrix b = random_instance(1 + seed % 4, 1 + (seed / 4) % 4, 3, seed);
    for (int j = 0; j < b.slots(); ++j) {
      if (b.column_sum(j) == 0) continue;
      Rational sum(0);
      for (int i = 0; i < b.teams(); ++i) sum = sum + team_power(b, i, j);
      CHECK(sum == Rational(1));
    }
    for (int i = 0; i < b.teams(); ++i) {
      Rational p = payoff(b, i);
      CHECK(oracle_matches(b, i, p));
      for (int j : winners(b)) CHECK(p <= team_power(b, i, j));
    }
  }
}

TEST_CASE("winners are invariant under row permutation") {
  for (std::uint64_t seed = 200; seed < 230; ++seed) {
    AvailabilityMatrix b = random_instance(3, 3, 3, seed);
    AvailabilityMatrix rotated(3, 3);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) rotated.set((i + 1) % 3, j, b.at(i, j));
    }
    CHECK(winners(b) == winners(rotated));
    for (int i = 0; i < 3; ++i) CHECK(payoff(b, i) == payoff(rotated, (i + 1) % 3));
  }
}
