#include "rostering/roster.hpp"

#include <stdexcept>
#include <string>

namespace rostering {

void FitnessWeights::validate() const {
    if (undercover_penalty <= 0)
        throw std::invalid_argument("undercover_penalty: must be positive");
}

namespace {

void check_solution(const Instance& instance, const RosterSolution& solution) {
    if (solution.assignment.size() != instance.nurses.size())
        throw std::invalid_argument("solution: expected one pattern index per nurse");
    for (std::size_t i = 0; i < solution.assignment.size(); ++i) {
        const int idx = solution.assignment[i];
        if (idx < 0 || idx >= static_cast<int>(instance.nurses[i].patterns.size()))
            throw std::invalid_argument("solution: pattern index " + std::to_string(idx) +
                                        " out of range for nurse " +
                                        std::to_string(instance.nurses[i].id));
    }
}

}  // namespace

CoverageTable compute_coverage(const Instance& instance, const RosterSolution& solution) {
    check_solution(instance, solution);
    const int g = instance.num_grades;
    CoverageTable table{GradeTable(g), GradeTable(g)};
    for (int i = 0; i < instance.num_nurses(); ++i) {
        const NurseSpec& nurse = instance.nurses[i];
        const ShiftPattern& pattern = nurse.patterns[solution.assignment[i]].pattern;
        for (int k = 1; k <= kSlotsPerWeek; ++k) {
            if (!pattern.covers(k)) continue;
            // A grade-b nurse serves every band s >= b.
            for (int s = nurse.grade; s <= g; ++s) table.cover.at(k, s) += 1;
        }
    }
    for (int k = 1; k <= kSlotsPerWeek; ++k)
        for (int s = 1; s <= g; ++s)
            table.undercover.at(k, s) = std::max(instance.demand.at(k, s) - table.cover.at(k, s), 0);
    return table;
}

long long preference_cost(const Instance& instance, const RosterSolution& solution) {
    check_solution(instance, solution);
    long long total = 0;
    for (int i = 0; i < instance.num_nurses(); ++i)
        total += instance.nurses[i].patterns[solution.assignment[i]].cost;
    return total;
}

long long fitness(const Instance& instance, const RosterSolution& solution,
                  const FitnessWeights& weights) {
    weights.validate();
    const CoverageTable table = compute_coverage(instance, solution);
    return preference_cost(instance, solution) +
           weights.undercover_penalty * table.undercover.sum();
}

bool is_feasible(const Instance& instance, const RosterSolution& solution) {
    const CoverageTable table = compute_coverage(instance, solution);
    return table.undercover.sum() == 0;
}

}  // namespace rostering
