#pragma once

#include <vector>

#include "rostering/rng.hpp"
#include "rostering/rules.hpp"

namespace rostering {

struct AntParams {
    double evaporation_keep = 0.97;  // rho: fraction of each trail surviving a generation
    double reinforcement = 100.0;    // Q
    double best_bonus = 2.0;         // d: extra multiplier when the solution is a new best
    double initial_on = 10.0;        // B1: trail on nodes of the initial solution
    double initial_off = 1.0;        // B2: trail elsewhere
    int generations = 5;

    void validate() const;
};

/// n x r trail intensities, one per nurse-rule node.
class PheromoneMatrix {
public:
    PheromoneMatrix() = default;
    PheromoneMatrix(int num_nurses, int num_rules, double fill)
        : num_nurses_(num_nurses), num_rules_(num_rules),
          tau_(static_cast<std::size_t>(num_nurses) * num_rules, fill) {}

    int num_nurses() const { return num_nurses_; }
    int num_rules() const { return num_rules_; }
    double at(int nurse, int rule_idx) const { return tau_[index(nurse, rule_idx)]; }
    double& at(int nurse, int rule_idx) { return tau_[index(nurse, rule_idx)]; }

private:
    std::size_t index(int nurse, int rule_idx) const {
        return static_cast<std::size_t>(nurse) * num_rules_ + rule_idx;
    }
    int num_nurses_ = 0;
    int num_rules_ = 0;
    std::vector<double> tau_;
};

/// B1 on the initial path's nodes, B2 everywhere else.
PheromoneMatrix init_trails(const RuleSequence& initial_path, const AntParams& params,
                            int num_rules = kNumRules);

/// One rule per nurse, drawn independently with probability tau / row sum.
RuleSequence select_rules(const PheromoneMatrix& tau, RandomStream& rng);

/// Evaporates every trail by the keep factor, then deposits Q*D/cost on the
/// path's nodes, D = best_bonus for a new best and 1 otherwise. A zero cost
/// clamps the denominator to 1.
PheromoneMatrix update_trails(const PheromoneMatrix& tau, const RuleSequence& path,
                              long long cost, bool is_new_best, const AntParams& params);

/// Single-ant local refinement of a decoded path. Returns the best triple
/// found, never worse than the initial one; ties replace the incumbent.
DecodedPath refine(const DecodedPath& initial, const Instance& instance,
                   const RuleWeights& weights, const FitnessWeights& fitness_weights,
                   const AntParams& params, RandomStream& rng);

}  // namespace rostering
