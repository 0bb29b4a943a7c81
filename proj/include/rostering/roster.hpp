#pragma once

#include <vector>

#include "rostering/instance.hpp"

namespace rostering {

/// One chosen pattern per nurse; assignment[i] indexes nurses[i].patterns.
/// Exactly-one-pattern-per-nurse holds by construction.
struct RosterSolution {
    std::vector<int> assignment;

    bool operator==(const RosterSolution&) const = default;
};

struct CoverageTable {
    GradeTable cover;       // qualified heads on each (slot, grade)
    GradeTable undercover;  // max(demand - cover, 0)
};

struct FitnessWeights {
    long long undercover_penalty = 200;  // w5, per uncovered shift-unit

    void validate() const;
};

CoverageTable compute_coverage(const Instance& instance, const RosterSolution& solution);

/// Sum of chosen pattern preference costs.
long long preference_cost(const Instance& instance, const RosterSolution& solution);

/// Penalty fitness: preference cost plus w5 per uncovered shift-unit.
/// Only undercover is penalized, never overcover. Exact integer.
long long fitness(const Instance& instance, const RosterSolution& solution,
                  const FitnessWeights& weights);

/// True iff every demand cell is covered.
bool is_feasible(const Instance& instance, const RosterSolution& solution);

}  // namespace rostering
