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

// Command-line front end. Exit codes: 0 found/true, 1 not-found/false,
// 2 usage or input error, 3 resource budget exceeded. Stdout carries the
// payload and is byte-deterministic for fixed inputs; diagnostics go to
// stderr. Team and slot indices are 1-based in all input and output.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tpg/equilibrium.hpp"
#include "tpg/errors.hpp"
#include "tpg/format.hpp"
#include "tpg/game.hpp"
#include "tpg/reductions.hpp"
#include "tpg/solver.hpp"

namespace {

constexpr int kExitFound = 0;
constexpr int kExitNotFound = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

long long default_budget(long long fallback) {
  const char* env = std::getenv("TPG_BUDGET");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  long long value = std::strtoll(env, &end, 10);
  if (end == nullptr || *end != '\0' || value < 1) {
    throw std::invalid_argument("TPG_BUDGET must be a positive integer");
  }
  return value;
}

tpg::Coalition parse_coalition(const std::string& text, int team_count) {
  std::vector<int> members;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    if (token.empty()) throw std::invalid_argument("empty coalition member");
    std::size_t used = 0;
    int value = std::stoi(token, &used);
    if (used != token.size()) {
      throw std::invalid_argument("coalition member '" + token + "' is not an integer");
    }
    if (value < 1) throw std::invalid_argument("coalition members are 1-based");
    members.push_back(value - 1);
  }
  return tpg::Coalition::of(members, team_count);
}

void print_step(std::ostream& out, const tpg::ImprovementStep& step) {
  out << "coalition:";
  for (int i : step.coalition.members()) out << ' ' << (i + 1);
  out << '\n';
  if (step.target_slot) out << "slot: " << (*step.target_slot + 1) << '\n';
  const std::vector<int>& members = step.coalition.members();
  for (std::size_t idx = 0; idx < members.size(); ++idx) {
    out << "row[" << (members[idx] + 1) << "]:";
    for (long long v : step.new_rows[idx]) out << ' ' << v;
    out << '\n';
  }
  for (std::size_t idx = 0; idx < members.size(); ++idx) {
    out << "payoff[" << (members[idx] + 1) << "]: " << step.old_payoffs[idx].to_string()
        << " -> " << step.new_payoffs[idx].to_string() << '\n';
  }
}

int run_payoff(const std::string& instance_path, const std::string& profile_path) {
  tpg::AvailabilityMatrix truth = tpg::load_instance(instance_path);
  tpg::Profile declared = tpg::load_instance(profile_path);
  tpg::require_valid_profile(truth, declared);

  std::cout << "winners:";
  for (int j : tpg::winners(declared)) std::cout << ' ' << (j + 1);
  std::cout << '\n';
  std::vector<tpg::Rational> values = tpg::payoffs(declared);
  for (int i = 0; i < declared.teams(); ++i) {
    std::cout << (i == 0 ? "" : " ") << "payoff[" << (i + 1)
              << "]=" << values[i].to_string();
  }
  std::cout << '\n';
  return kExitFound;
}

int run_improve(const std::string& instance_path, const std::string& profile_path,
                const std::string& coalition_text, bool any, int max_coalition,
                bool oracle, long long budget, int workers) {
  tpg::AvailabilityMatrix truth = tpg::load_instance(instance_path);
  tpg::Profile declared = tpg::load_instance(profile_path);
  tpg::require_valid_profile(truth, declared);

  std::optional<tpg::ImprovementStep> step;
  if (!coalition_text.empty()) {
    tpg::Coalition coalition = parse_coalition(coalition_text, truth.teams());
    step = oracle ? tpg::brute_force_improvement(truth, declared, coalition, budget)
                  : tpg::find_improvement_step(truth, declared, coalition);
  } else if (any) {
    if (max_coalition < 1) {
      throw std::invalid_argument("--any requires --max-coalition");
    }
    if (oracle) {
      // Oracle-backed search: same coalition order, brute-force per coalition.
      for (int size = 1; size <= max_coalition && !step; ++size) {
        std::vector<int> members(size);
        for (int i = 0; i < size; ++i) members[i] = i;
        while (true) {
          tpg::Coalition c = tpg::Coalition::of(members, truth.teams());
          step = tpg::brute_force_improvement(truth, declared, c, budget);
          if (step) break;
          int i = size - 1;
          while (i >= 0 && members[i] == truth.teams() - size + i) --i;
          if (i < 0) break;
          ++members[i];
          for (int j = i + 1; j < size; ++j) members[j] = members[j - 1] + 1;
        }
      }
    } else {
      tpg::SearchOptions options;
      options.workers = workers;
      step = tpg::find_improvement_any(truth, declared, max_coalition, options);
    }
  } else {
    throw std::invalid_argument("pass either --coalition or --any");
  }

  if (!step) {
    std::cout << "none\n";
    return kExitNotFound;
  }
  print_step(std::cout, *step);
  return kExitFound;
}

int run_ne_verify(const std::string& instance_path, const std::string& profile_path,
                  int strength, int workers) {
  tpg::AvailabilityMatrix truth = tpg::load_instance(instance_path);
  tpg::Profile declared = tpg::load_instance(profile_path);
  tpg::require_valid_profile(truth, declared);
  tpg::SearchOptions options;
  options.workers = workers;
  tpg::NeVerdict verdict = tpg::is_t_strong_ne(truth, declared, strength, options);
  if (verdict.is_equilibrium) {
    std::cout << "equilibrium\n";
    return kExitFound;
  }
  std::cout << "not equilibrium\n";
  print_step(std::cout, *verdict.witness);
  return kExitNotFound;
}

int run_ne_construct(const std::string& instance_path, int strength, long long budget) {
  tpg::AvailabilityMatrix truth = tpg::load_instance(instance_path);
  if (strength == 1) {
    std::cout << tpg::serialize_instance(tpg::construct_1strong_ne(truth));
    return kExitFound;
  }
  if (strength == 2) {
    tpg::ConstructedProfile built = tpg::construct_2strong_ne_amax1(truth, budget);
    std::cout << "# path: "
              << (built.path == tpg::ConstructionPath::direct ? "construction"
                                                              : "exhaustive-search")
              << '\n'
              << tpg::serialize_instance(built.profile);
    return kExitFound;
  }
  throw tpg::unsupported_error(
      "construction is available for strength 1 (max availability <= 3) and strength 2 "
      "(max availability 1)");
}

int run_ne_search(const std::string& instance_path, int strength, long long budget,
                  int workers) {
  tpg::AvailabilityMatrix truth = tpg::load_instance(instance_path);
  tpg::SearchOptions options;
  options.workers = workers;
  std::optional<tpg::Profile> found =
      tpg::exhaustive_ne_search(truth, strength, budget, options);
  if (!found) {
    std::cout << "none\n";
    return kExitNotFound;
  }
  std::cout << tpg::serialize_instance(*found);
  return kExitFound;
}

int run_gen_setcover(const std::string& cover_path, const std::string& emit) {
  tpg::CoverProblem problem = tpg::load_cover(cover_path);
  if (!std::holds_alternative<tpg::SetCoverInstance>(problem)) {
    throw std::invalid_argument("input is not a 'setcover v1' file");
  }
  tpg::ReducedSetCoverGame game =
      tpg::setcover_to_tpg(std::get<tpg::SetCoverInstance>(problem));
  bool want_instance = emit == "instance" || emit == "instance,profile";
  bool want_profile = emit == "profile" || emit == "instance,profile";
  if (!want_instance && !want_profile) {
    throw std::invalid_argument("--emit must be instance, profile, or instance,profile");
  }
  if (want_instance) {
    std::cout << tpg::serialize_instance(game.truth)
              << "# coalition-bound " << game.coalition_bound << '\n';
  }
  if (want_profile) std::cout << tpg::serialize_instance(game.declared);
  return kExitFound;
}

int run_gen_x3c(const std::string& cover_path, const std::string& emit) {
  tpg::CoverProblem problem = tpg::load_cover(cover_path);
  if (!std::holds_alternative<tpg::ExactCoverInstance>(problem)) {
    throw std::invalid_argument("input is not an 'x3c v1' file");
  }
  const tpg::ExactCoverInstance& instance = std::get<tpg::ExactCoverInstance>(problem);
  tpg::ReducedExactCoverGame game = tpg::x3c_to_tpg(instance);
  bool want_instance = emit == "instance" || emit == "instance,profile";
  bool want_profile = emit == "profile" || emit == "instance,profile";
  if (!want_instance && !want_profile) {
    throw std::invalid_argument("--emit must be instance, profile, or instance,profile");
  }
  if (want_instance) {
    std::cout << tpg::serialize_instance(game.truth)
              << "# coalition-bound " << game.coalition_bound << '\n';
  }
  if (want_profile) std::cout << tpg::serialize_instance(tpg::x3c_canonical_profile(instance));
  return kExitFound;
}

int run_gen_random(int teams, int slots, long long max_availability, std::uint64_t seed) {
  std::cout << tpg::serialize_instance(
      tpg::random_instance(teams, slots, max_availability, seed));
  return kExitFound;
}

int run_dynamics(const std::string& instance_path, const std::string& profile_path,
                 int max_coalition, long long max_steps, int workers) {
  tpg::AvailabilityMatrix truth = tpg::load_instance(instance_path);
  tpg::Profile start = profile_path.empty() ? truth : tpg::load_instance(profile_path);
  tpg::require_valid_profile(truth, start);
  if (max_steps < 1) throw std::invalid_argument("--max-steps must be positive");
  tpg::SearchOptions options;
  options.workers = workers;
  tpg::DynamicsTrace trace = tpg::run_dynamics(truth, start, max_coalition,
                                               static_cast<std::size_t>(max_steps), options);
  for (std::size_t s = 0; s < trace.steps.size(); ++s) {
    const tpg::ImprovementStep& step = trace.steps[s];
    std::cout << "step " << (s + 1) << ": coalition";
    for (int i : step.coalition.members()) std::cout << ' ' << (i + 1);
    if (step.target_slot) std::cout << " slot " << (*step.target_slot + 1);
    std::cout << '\n';
  }
  switch (trace.status) {
    case tpg::DynamicsStatus::equilibrium_reached:
      std::cout << "equilibrium_reached after " << trace.steps.size() << " steps\n";
      return kExitFound;
    case tpg::DynamicsStatus::cycle_detected:
      std::cout << "cycle_detected after " << trace.steps.size()
                << " steps (profile first seen at step " << *trace.cycle_start << ")\n";
      return kExitNotFound;
    case tpg::DynamicsStatus::step_budget_exhausted:
      std::cout << "step_budget_exhausted after " << trace.steps.size() << " steps\n";
      return kExitBudget;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver and toolkit for team power scheduling games"};
  app.require_subcommand(1);

  std::string instance_path, profile_path, coalition_text, emit = "instance";
  bool any = false, oracle = false;
  int max_coalition = 0, strength = 1, workers = 1;
  int teams = 1, slots = 1;
  long long max_availability = 1, budget = -1, max_steps = 1000;
  std::uint64_t seed = 0;

  CLI::App* payoff = app.add_subcommand("payoff", "Winners and pay-offs of a profile");
  payoff->add_option("instance", instance_path)->required();
  payoff->add_option("profile", profile_path)->required();

  CLI::App* improve = app.add_subcommand("improve", "Search for an improvement step");
  improve->add_option("instance", instance_path)->required();
  improve->add_option("profile", profile_path)->required();
  CLI::Option* coalition_opt =
      improve->add_option("--coalition", coalition_text, "1-based team list, e.g. 1,3");
  CLI::Option* any_opt =
      improve->add_flag("--any", any, "search all coalitions up to --max-coalition");
  improve->add_option("--max-coalition", max_coalition, "coalition size bound for --any");
  improve->add_flag("--oracle", oracle, "use the brute-force oracle");
  improve->add_option("--budget", budget, "oracle enumeration budget");
  improve->add_option("--workers", workers, "parallel workers for --any");
  coalition_opt->excludes(any_opt);
  any_opt->excludes(coalition_opt);

  CLI::App* ne = app.add_subcommand("ne", "Equilibrium verification, construction, search");
  ne->require_subcommand(1);
  CLI::App* verify = ne->add_subcommand("verify", "Check a profile for t-strong stability");
  verify->add_option("instance", instance_path)->required();
  verify->add_option("profile", profile_path)->required();
  verify->add_option("-t,--strength", strength, "coalition size bound")->required();
  verify->add_option("--workers", workers, "parallel workers");
  CLI::App* construct = ne->add_subcommand("construct", "Build a t-strong equilibrium");
  construct->add_option("instance", instance_path)->required();
  construct->add_option("-t,--strength", strength, "equilibrium strength (1 or 2)")
      ->required();
  construct->add_option("--budget", budget, "fallback search budget (strength 2)");
  CLI::App* search = ne->add_subcommand("search", "Exhaustive equilibrium search");
  search->add_option("instance", instance_path)->required();
  search->add_option("-t,--strength", strength, "coalition size bound")->required();
  search->add_option("--budget", budget, "profile space budget");
  search->add_option("--workers", workers, "parallel workers");

  CLI::App* gen = app.add_subcommand("gen", "Instance generators");
  gen->require_subcommand(1);
  CLI::App* gen_sc = gen->add_subcommand("setcover", "Cover-to-game construction");
  gen_sc->add_option("input", instance_path, "a .cov file")->required();
  gen_sc->add_option("--emit", emit, "instance, profile, or instance,profile");
  CLI::App* gen_x3c = gen->add_subcommand("x3c", "Exact-cover-to-game construction");
  gen_x3c->add_option("input", instance_path, "a .cov file")->required();
  gen_x3c->add_option("--emit", emit, "instance, profile, or instance,profile");
  CLI::App* gen_rand = gen->add_subcommand("random", "Seeded uniform random instance");
  gen_rand->add_option("-n,--teams", teams, "team count")->required();
  gen_rand->add_option("-m,--slots", slots, "slot count")->required();
  gen_rand->add_option("--a-max", max_availability, "maximum entry")->required();
  gen_rand->add_option("--seed", seed, "generator seed")->required();

  CLI::App* dynamics = app.add_subcommand("dynamics", "Iterated improvement dynamics");
  dynamics->add_option("instance", instance_path)->required();
  dynamics->add_option("profile", profile_path, "start profile (default: truth)");
  dynamics->add_option("--max-coalition", max_coalition, "coalition size bound")->required();
  dynamics->add_option("--max-steps", max_steps, "step budget");
  dynamics->add_option("--workers", workers, "parallel workers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*payoff) return run_payoff(instance_path, profile_path);
    if (*improve) {
      long long b = budget >= 0 ? budget : default_budget(tpg::kDefaultBruteForceBudget);
      return run_improve(instance_path, profile_path, coalition_text, any, max_coalition,
                         oracle, b, workers);
    }
    if (*verify) return run_ne_verify(instance_path, profile_path, strength, workers);
    if (*construct) {
      long long b = budget >= 0 ? budget : default_budget(tpg::kDefaultSearchBudget);
      return run_ne_construct(instance_path, strength, b);
    }
    if (*search) {
      long long b = budget >= 0 ? budget : default_budget(tpg::kDefaultSearchBudget);
      return run_ne_search(instance_path, strength, b, workers);
    }
    if (*gen_sc) return run_gen_setcover(instance_path, emit);
    if (*gen_x3c) return run_gen_x3c(instance_path, emit);
    if (*gen_rand) return run_gen_random(teams, slots, max_availability, seed);
    if (*dynamics) {
      return run_dynamics(instance_path, profile_path, max_coalition, max_steps, workers);
    }
  } catch (const tpg::budget_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const tpg::parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const tpg::unsupported_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
