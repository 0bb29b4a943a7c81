#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rostering/rng.hpp"
#include "rostering/rules.hpp"

namespace rostering {

inline constexpr long long kDefaultOracleBudget = 10'000'000;

struct BaselineResult {
    DecodedPath best;
    bool feasible_found = false;  // true if any iterate was feasible
    long long iterations_used = 0;
};

/// Repeated decoding with every nurse's rule drawn uniformly from rule_set.
BaselineResult run_random_rules(const Instance& instance, std::span<const RuleId> rule_set,
                                long long iterations, const RuleWeights& weights,
                                const FitnessWeights& fitness_weights, RandomStream& rng);

/// Rd-1: pure random search (only the Random rule).
BaselineResult run_rd1(const Instance& instance, long long iterations, const RuleWeights& weights,
                       const FitnessWeights& fitness_weights, RandomStream& rng);

/// Rd-2: every one of the six rules with equal opportunity at every step.
BaselineResult run_rd2(const Instance& instance, long long iterations, const RuleWeights& weights,
                       const FitnessWeights& fitness_weights, RandomStream& rng);

struct OracleResult {
    long long optimum = 0;
    RosterSolution argmin;  // lexicographically first among the optima
};

/// Exhaustive enumeration of the assignment product space with an independent
/// incremental coverage count. Throws when the space exceeds the budget.
OracleResult exact_optimum(const Instance& instance, const FitnessWeights& weights,
                           long long budget = kDefaultOracleBudget);

struct RulePathOptimum {
    long long best_cost = 0;
    RuleSequence best_rules;
};

/// Best fitness over all r^n rule sequences, with Random / KCheapest draws
/// resolved by a fixed per-nurse stream derived from policy_seed. Bounded
/// below by exact_optimum by construction.
RulePathOptimum exact_rule_path_optimum(const Instance& instance, const RuleWeights& weights,
                                        const FitnessWeights& fitness_weights,
                                        std::uint64_t policy_seed,
                                        long long budget = kDefaultOracleBudget);

/// Golden record tying an instance (by canonical hash) to its certified
/// optimum under a penalty weight.
struct GoldenRecord {
    std::string instance_hash;
    long long w5 = 0;
    long long optimum = 0;
    std::vector<int> argmin_assignment;
};

std::string golden_to_json(const GoldenRecord& record);
GoldenRecord golden_from_json(const std::string& bytes);
GoldenRecord load_golden_file(const std::string& path);

}  // namespace rostering
