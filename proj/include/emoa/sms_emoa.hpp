#ifndef EMOA_SMS_EMOA_HPP_
#define EMOA_SMS_EMOA_HPP_

#include "emoa/core.hpp"
#include "emoa/problems.hpp"
#include "emoa/ranking.hpp"
#include "emoa/update.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace emoa {

enum class Termination { FullFrontCoverage, BudgetOnly };

inline constexpr std::uint64_t default_budget = 1'000'000'000;

struct EmoaConfig {
  ProblemSpec problem;
  std::size_t mu = 0;
  UpdateStrategy strategy = UpdateStrategy::deterministic();
  ReferencePoint reference{0, 0};
  std::uint64_t seed = 0;
  /// Maximum number of generations. 0 means unlimited when stopping on front
  /// coverage; with BudgetOnly it means no generations at all.
  std::uint64_t budget = default_budget;
  Termination termination = Termination::FullFrontCoverage;
};

/// Population-size conditions under which the runtime guarantees for
/// OneJumpZeroJump hold. Violations are reported, never enforced.
inline std::vector<std::string> config_warnings(const EmoaConfig& c) {
  std::vector<std::string> out;
  if (c.problem.name != "ojzj" || c.problem.n < 2 * c.problem.k) return out;
  const std::size_t front_size = c.problem.n - 2 * c.problem.k + 3;
  if (c.strategy.kind == UpdateStrategy::Kind::Deterministic && c.mu < front_size) {
    out.push_back("mu=" + std::to_string(c.mu) + " is below n-2k+3=" +
                  std::to_string(front_size) +
                  "; Pareto-front vectors may be lost under deterministic update");
  }
  if (c.strategy.kind == UpdateStrategy::Kind::Stochastic &&
      c.mu < 2 * (front_size + 1)) {
    out.push_back("mu=" + std::to_string(c.mu) + " is below 2(n-2k+4)=" +
                  std::to_string(2 * (front_size + 1)) +
                  "; Pareto-front vectors may be lost under stochastic update");
  }
  return out;
}

struct Coverage {
  std::size_t covered = 0;
  bool complete = false;
  /// mask[i] is set when oracle.front()[i] is carried by some member.
  std::vector<bool> mask;
};

/// Recomputes `c` in place for population p.
inline void front_coverage_into(const Population& p, const ParetoOracle& oracle,
                                Coverage& c) {
  c.covered = 0;
  c.mask.assign(oracle.front().size(), false);
  for (const auto& ind : p) {
    if (auto i = oracle.index_of(ind.objectives); i && !c.mask[*i]) {
      c.mask[*i] = true;
      ++c.covered;
    }
  }
  c.complete = c.covered == oracle.front().size();
}

/// Which Pareto-front vectors the population carries.
inline Coverage front_coverage(const Population& p, const ParetoOracle& oracle) {
  Coverage c;
  front_coverage_into(p, oracle, c);
  return c;
}

struct RunRecord {
  std::uint64_t generations = 0;
  bool front_found = false;
  std::size_t covered_vectors = 0;
  Population final_population;
  EmoaConfig config_echo;
  std::vector<std::string> warnings;
};

/// State after each generation, handed to an optional observer.
struct GenerationView {
  std::uint64_t generation;
  const Population& population;
  const Coverage& coverage;
  const Individual& offspring;
};

using GenerationObserver = std::function<void(const GenerationView&)>;

/// Steady-state SMS-EMOA: mu uniform random initial solutions (with
/// replacement), then per generation one uniformly chosen parent, bit-wise
/// mutation, one evaluation and removal of one member of P + {offspring} by
/// the configured strategy. Stops once the population covers the Pareto front
/// (checked after every update) or when the budget is spent.
inline RunRecord run_sms_emoa(const EmoaConfig& config,
                              const GenerationObserver& observer = {}) {
  if (config.mu < 1) throw invalid_parameter("mu must be >= 1");
  const BiObjectiveProblem problem = make_problem(config.problem);
  for (const auto& v : problem.oracle.front()) {
    if (v.f1 < config.reference.f1 || v.f2 < config.reference.f2) {
      throw invalid_parameter("reference point is not dominated by the problem's values");
    }
  }

  RunRecord record;
  record.config_echo = config;
  record.warnings = config_warnings(config);

  RandomSource rng(config.seed);
  Population pop;
  pop.reserve(config.mu + 1);
  for (std::size_t i = 0; i < config.mu; ++i) {
    auto x = random_bitstring(problem.n, rng);
    auto f = problem.evaluate(x);
    pop.push_back({std::move(x), f});
  }

  const bool stop_on_cover = config.termination == Termination::FullFrontCoverage;
  Coverage cov = front_coverage(pop, problem.oracle);
  std::uint64_t gen = 0;
  const bool unlimited = stop_on_cover && config.budget == 0;
  while (!(stop_on_cover && cov.complete) && (unlimited || gen < config.budget)) {
    const auto parent = static_cast<std::size_t>(rng.uniform_below(pop.size()));
    auto child = bitwise_mutate(pop[parent].genome, rng);
    const auto f = problem.evaluate(child);
    pop.push_back({std::move(child), f});
    std::optional<Individual> offspring;
    if (observer) offspring = pop.back();
    pop = config.strategy.apply(std::move(pop), config.reference, rng);
    ++gen;
    front_coverage_into(pop, problem.oracle, cov);
    if (observer) observer(GenerationView{gen, pop, cov, *offspring});
  }

  record.generations = gen;
  record.front_found = cov.complete;
  record.covered_vectors = cov.covered;
  record.final_population = std::move(pop);
  return record;
}

}  // namespace emoa

#endif  // EMOA_SMS_EMOA_HPP_
